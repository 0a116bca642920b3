// Copyright 2026 The wgs Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/**
 * @file
 * Closed-form analysis of two-qubit projections in weighted fusions.
 *
 * A projection bra A<00| + B<01| + C<10| + D<11| on the fused pair (a, b)
 * leaves sum_kl M_kl e_k (x) e_l on the residual register, with M = [[A, B],
 * [C, D]] and unit branch states e1 _|_ e2, <e4|e3> = z.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wgs/fock_optics.hpp"
#include "wgs/graph_state.hpp"

namespace wgs {

/// <f4|f3> for a fused vertex b with neighbor weights chi_bf, chi_bf2 (pass
/// 0 for a single neighbor).
Complex inner_z(Real chi_bf, Real chi_bf2 = 0.0);

struct EntanglementReport {
  Complex z;
  Real norm_squared;  // N^2 of the z-corrected normalization
  Real det_rho;
  Real lambda;        // larger Schmidt weight
  Real entropy_bits;
  Matrix2 m_prime;    // normalized coefficients in an orthonormal basis
};

Real binary_entropy(Real lambda);

/// Throws DegenerateGram for |z| >= 1 - 1e-12 and NumericalAbort when the
/// closed forms disagree with the dense density matrix beyond 1e-10.
EntanglementReport entanglement_report(const Matrix2& m, Complex z);

enum class OutcomeTag { fused_weighted_graph, weighted_graph_new_weight, maximally_entangled, product, other };
const char* to_string(OutcomeTag tag);

struct OutcomeClass {
  OutcomeTag tag;
  std::optional<Real> new_weight;
  std::string evidence;
};

/// Tag precedence: fused > new weight > maximally entangled > product > other.
/// With neighbor_count = 2 the second weight defaults to chi_bf.
OutcomeClass classify_projection(const TwoQubitProjection& p, Real chi_bf, int neighbor_count,
                                 std::optional<Real> chi_bf2 = std::nullopt);

/// Diagonal of the e-f two-qubit operator: (A+B, A+Be^{-i chi}, C+D, C+De^{-i chi}).
std::array<Complex, 4> tef_diagonal(const TwoQubitProjection& p, Real chi_bf);

/// Weight of the e-f edge left by a single-neighbor projection, with the
/// sign pinned by simulation under the e^{-i chi |11><11|} convention:
/// arg(A+Be^{-i chi}) + arg(C+D) - arg(A+B) - arg(C+De^{-i chi}).
Real resulting_weight(const TwoQubitProjection& p, Real chi_bf);

/// Phase corrections (on e, then on f) that turn the projected state into
/// the weighted pair form.
std::array<Real, 2> tef_phase_corrections(const TwoQubitProjection& p, Real chi_bf);

/// True iff the e-f operator is unitary up to scale. Evaluated both from the
/// diagonal magnitudes and from the argument/magnitude conditions; throws
/// NumericalAbort if the two disagree.
bool tef_unitarity(const TwoQubitProjection& p, Real chi_bf);

struct TefConditionReport {
  bool diagonal_route;
  bool condition_route;
  Real diagonal_spread;  // max - min of the four magnitudes (unit-norm coefficients)
};
TefConditionReport tef_conditions(const TwoQubitProjection& p, Real chi_bf);

/// (1, xi e^{i alpha}, xi, e^{i alpha}) with alpha = chi_bf / 2.
TwoQubitProjection hyperbola_projection(Real xi, Real chi_bf);

struct XiSolution {
  Real xi;
  Real residual;
  Real bracket_lo;  // log|xi| bracket used by the bisection
  Real bracket_hi;
};

/// Finds xi with resulting_weight(hyperbola_projection(xi, chi_bf)) = target.
/// Throws ConvergenceFailure (with the bracket) when no root is found.
XiSolution solve_xi_for_weight(Real chi_bf, Real chi_target);

/// Maps a (1/sqrt2)-unitary seed M' to bra coefficients whose projection is
/// maximally entangled for overlap z. Throws BadSeed or DegenerateGram.
TwoQubitProjection max_entangled_family(const Matrix2& m_prime_seed, Complex z);

/// Residuals of the three maximal-entanglement conditions.
std::array<Real, 3> max_entangled_residuals(const TwoQubitProjection& p, Complex z);

struct NoGoodFailureReport {
  bool premise_holds;
  bool conclusion_holds;
  bool applicable;          // premise true
  Real max_relevant_det;    // largest det rho over relevant outcomes (dense route)
  Real max_closed_form_det; // same from the cross-product closed form
  int relevant_outcomes;
};

/// (1-|z|^2) |(U0iU1j - U0jU1i)(U2jU3i - U2iU3j)|^2 / N^4 for pattern (i, j).
Real relevant_det_closed_form(const ModeUnitary& u, int i, int j, Complex z);

NoGoodFailureReport check_no_good_failure(const ModeUnitary& u, Complex z = 0.0);

// ---------------------------------------------------------------- scans

/// Coefficients of the 3-qubit state matrix after projecting the middle of
/// b1 - a - b2 with bra A<0| + B<1|: rows b1, columns b2.
Matrix2 chain_projection_matrix(Complex A, Complex B, Real chi1, Real chi2);

struct XlikeSolution {
  Real chi1;
  Real chi2;
  Real delta;  // arg B - arg A
  Real rho;    // |B| / |A|
  std::string kind;  // case1, case2, degenerate_pi, unexplained
};

struct XlikeScanReport {
  int resolution;
  long long points;
  long long magnitude_candidates;
  std::vector<XlikeSolution> solutions;
  long long unexplained;
};

/// Grid chi_k = -pi + 2 pi (k+1)/R (zero skipped), delta_m = 2 pi m / R; the
/// ratio |B|/|A| is solved exactly from the orthogonality quadratic.
XlikeScanReport xlike_uniqueness_scan(int resolution, Real tol = 1e-6);

/// Classifies one (chi1, chi2, bra) as an X-like solution, or returns nullopt.
std::optional<XlikeSolution> xlike_check(Real chi1, Real chi2, Complex A, Complex B, Real tol = 1e-6);

struct YlikeScanReport {
  int resolution;
  long long points;
  long long solutions;
  long long unexplained;  // solutions other than chi1 = chi2 = pi, delta = +-pi/2
};

YlikeScanReport ylike_impossibility_scan(int resolution, Real tol = 1e-6);

/// Max pairwise difference among the four magnitudes for A = 1, B = e^{i delta}.
Real ylike_residual(Real chi1, Real chi2, Real delta);

struct PairWeight {
  Real phi;  // |phi| in [0, pi]
  bool both_outcomes_equal;
  Real det_abs;  // |det M1| with normalization
};

/// Weight implied by projecting the middle of b1 - a - b2 onto A<0| + B<1|.
PairWeight pair_weight_from_projection(Complex A, Complex B, Real chi1, Real chi2);

/// |phi| of a 2-qubit state matrix from its singular values, 4 atan2(s2, s1).
Real pair_weight_from_matrix(const Matrix2& m);

}  // namespace wgs
