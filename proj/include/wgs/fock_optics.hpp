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
 * Two-photon linear optics on dual-rail qubits.
 *
 * Input modes are numbered 0..3 = a_H, a_V, b_H, b_V, followed by vacuum
 * ancillas. A ModeUnitary maps input creation operators to detector modes,
 * a_k^dag -> sum_i U(k, i) c_i^dag.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "wgs/graph_state.hpp"

namespace wgs {

class ModeUnitary {
 public:
  /// Throws InvalidUnitary unless N >= 4 and U U^dag = I within 1e-10.
  explicit ModeUnitary(Matrix matrix);

  static ModeUnitary identity(int n);

  int size() const { return static_cast<int>(matrix_.rows()); }
  const Matrix& matrix() const { return matrix_; }
  Complex operator()(int row, int col) const { return matrix_(row, col); }

 private:
  Matrix matrix_;
};

ModeUnitary type_i_matrix();
ModeUnitary type_ii_matrix();

/// The four branch states of a fusion: the left photon carries
/// f1 a_H^dag + f2 a_V^dag, the right one f3 b_H^dag + f4 b_V^dag. Each f is an
/// unnormalized residual-register state; the joint register is left (x) right.
struct FusionContext {
  PureState f1, f2, f3, f4;
  Real norm_left;   // ||f1|| = ||f2||
  Real norm_right;  // ||f3|| = ||f4||
  Complex z;        // <f4|f3> / ||f3||^2

  int left_qubits() const { return f1.num_qubits(); }
  int right_qubits() const { return f3.num_qubits(); }
  int register_qubits() const { return left_qubits() + right_qubits(); }
};

/// Validates f1 _|_ f2, equal norms on each side and |z| < 1.
FusionContext make_fusion_context(PureState f1, PureState f2, PureState f3, PureState f4);
/// Slices `left` at qubit a and `right` at qubit b.
FusionContext make_fusion_context(const PureState& left, int a, const PureState& right, int b);
/// One-qubit stand-ins with f1 = |0>, f2 = |1>, f3 = |0>, f4 = z*|0> + sqrt(1-|z|^2)|1>.
FusionContext make_synthetic_context(Complex z);

struct FusionOutcome {
  int i;  // i <= j, detector modes
  int j;
  Real probability;
  std::optional<PureState> register_state;
  /// Coefficient table over unit-normalized (e1, e2) x (e3, e4), scaled so
  /// the register state has unit norm.
  Matrix2 m_matrix;

  bool relevant() const { return i != j; }
};

/// Coefficients a, b, c, d (rows f1/f2, columns f3/f4) of pattern (i, j);
/// for i == j these include the bosonic sqrt(2).
Matrix2 pattern_coefficients(const ModeUnitary& u, int i, int j);

/// Closed-form enumeration of all N(N+1)/2 patterns.
std::vector<FusionOutcome> enumerate_outcomes(const FusionContext& ctx, const ModeUnitary& u);

/// Register-valued two-photon amplitudes after the network. `inputs[k][l]`
/// is the register vector multiplying a_k^dag b_l^dag|0> (k, l in {H, V}).
/// Returns one amplitude vector per pattern, ordered (0,0), (0,1), ..., (N-1,N-1).
struct PatternAmplitude {
  int i;
  int j;
  Vector amplitude;
};
std::vector<PatternAmplitude> two_photon_amplitudes(const std::array<std::array<Vector, 2>, 2>& inputs,
                                                    const ModeUnitary& u);

/// Brute-force enumeration via two_photon_amplitudes; coefficients are
/// recovered from the register vectors by least squares.
std::vector<FusionOutcome> oracle_enumerate(const FusionContext& ctx, const ModeUnitary& u);

// JSON: {"n": N, "re": [[...]], "im": [[...]]}
ModeUnitary parse_mode_unitary(const std::string& text);
std::string dump_mode_unitary(const ModeUnitary& u);

}  // namespace wgs
