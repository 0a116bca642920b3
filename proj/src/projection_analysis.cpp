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

#include "wgs/projection_analysis.hpp"

#include <algorithm>
#include <limits>
#include <sstream>

#include "wgs/parallel.hpp"

namespace wgs {

namespace {

constexpr Real kArgMagnitude = 1e-12;  // below this an argument is undefined
constexpr Real kAbortTol = 1e-10;
constexpr Real kArgTol = 1e-9;

Real gram_scale(Complex z) {
  if (std::abs(z) >= 1.0 - tol::kNorm) {
    throw Error(ErrorKind::DegenerateGram, "|z| = " + std::to_string(std::abs(z)) + " leaves no orthogonal part");
  }
  return std::sqrt(1.0 - std::norm(z));
}

// Grid value chi_k = -pi + 2 pi (k+1)/R.
Real grid_weight(int k, int r) { return -kPi + 2.0 * kPi * (k + 1) / r; }

}  // namespace

Complex inner_z(Real chi_bf, Real chi_bf2) {
  return (1.0 + phase(chi_bf)) * (1.0 + phase(chi_bf2)) / 4.0;
}

Real binary_entropy(Real lambda) {
  auto term = [](Real x) { return x > 0.0 ? -x * std::log2(x) : 0.0; };
  return term(lambda) + term(1.0 - lambda);
}

// ---------------------------------------------------------------- entanglement

EntanglementReport entanglement_report(const Matrix2& m, Complex z) {
  const Real s = gram_scale(z);
  const Complex a = m(0, 0), b = m(0, 1), c = m(1, 0), d = m(1, 1);
  const Real n2 = std::norm(a) + std::norm(b) + 2.0 * std::real(z * a * std::conj(b)) + std::norm(c) +
                  std::norm(d) + 2.0 * std::real(z * c * std::conj(d));
  if (!(n2 > 0.0)) throw Error(ErrorKind::InvalidInput, "coefficient matrix has zero norm");

  EntanglementReport r;
  r.z = z;
  r.norm_squared = n2;
  r.det_rho = std::clamp((1.0 - std::norm(z)) * std::norm(a * d - b * c) / (n2 * n2), 0.0, 0.25);
  r.lambda = 0.5 * (1.0 + std::sqrt(std::max(0.0, 1.0 - 4.0 * r.det_rho)));
  r.entropy_bits = binary_entropy(r.lambda);

  // Dense route: orthonormalize (e3, e4) and diagonalize rho = M' M'^dag.
  Matrix2 basis;
  basis << 1.0, 0.0, std::conj(z), s;
  r.m_prime = m * basis / std::sqrt(n2);
  const Matrix2 rho = r.m_prime * r.m_prime.adjoint();
  const Eigen::SelfAdjointEigenSolver<Matrix2> eig(rho);
  const Eigen::Vector2d ev = eig.eigenvalues();
  const Real det_dense = ev(0) * ev(1);
  if (std::abs(det_dense - r.det_rho) > kAbortTol || std::abs((ev(1) - ev(0)) * (ev(1) - ev(0)) - (1.0 - 4.0 * r.det_rho)) > 1e-9 ||
      std::abs(rho.trace().real() - 1.0) > kAbortTol) {
    std::ostringstream msg;
    msg << "closed-form det " << r.det_rho << " vs dense " << det_dense << ", lambda " << r.lambda << " vs "
        << ev.maxCoeff();
    throw Error(ErrorKind::NumericalAbort, msg.str());
  }
  return r;
}

// ---------------------------------------------------------------- T_ef

std::array<Complex, 4> tef_diagonal(const TwoQubitProjection& p, Real chi_bf) {
  const Complex w = phase(-chi_bf);
  return {p.A + p.B, p.A + p.B * w, p.C + p.D, p.C + p.D * w};
}

Real resulting_weight(const TwoQubitProjection& p, Real chi_bf) {
  const auto t = tef_diagonal(p.normalized(), chi_bf);
  for (const auto& x : t) {
    if (std::abs(x) < kArgMagnitude) {
      throw Error(ErrorKind::DegenerateArgument, "a diagonal entry of the e-f operator vanishes");
    }
  }
  return normalize_angle(std::arg(t[1]) + std::arg(t[2]) - std::arg(t[0]) - std::arg(t[3]));
}

std::array<Real, 2> tef_phase_corrections(const TwoQubitProjection& p, Real chi_bf) {
  const auto t = tef_diagonal(p.normalized(), chi_bf);
  for (const auto& x : t) {
    if (std::abs(x) < kArgMagnitude) {
      throw Error(ErrorKind::DegenerateArgument, "a diagonal entry of the e-f operator vanishes");
    }
  }
  const Real t00 = std::arg(t[0]);
  return {normalize_angle(-(std::arg(t[2]) - t00)), normalize_angle(-(std::arg(t[1]) - t00))};
}

TefConditionReport tef_conditions(const TwoQubitProjection& p, Real chi_bf) {
  const TwoQubitProjection q = p.normalized();
  const auto t = tef_diagonal(q, chi_bf);
  Real lo = std::abs(t[0]), hi = lo;
  for (const auto& x : t) {
    lo = std::min(lo, std::abs(x));
    hi = std::max(hi, std::abs(x));
  }
  TefConditionReport r;
  r.diagonal_spread = hi - lo;
  r.diagonal_route = r.diagonal_spread <= tol::kContext;

  // Argument conditions: arg Y - arg X in {chi/2, chi/2 + pi}, i.e. twice the
  // difference equals chi, unless one of the pair vanishes.
  auto pair_ok = [chi_bf](Complex x, Complex y) {
    if (std::abs(x) * std::abs(y) < kArgMagnitude) return true;
    return angle_distance(2.0 * (std::arg(y) - std::arg(x)), chi_bf) < kArgTol;
  };
  auto sum_sq = [](Complex x, Complex y) {
    return std::norm(x) + std::norm(y) + 2.0 * std::abs(x) * std::abs(y) * std::cos(std::arg(y) - std::arg(x));
  };
  const bool args = pair_ok(q.A, q.B) && pair_ok(q.C, q.D);
  const bool balance = std::abs(std::sqrt(std::max(0.0, sum_sq(q.A, q.B))) - std::sqrt(std::max(0.0, sum_sq(q.C, q.D)))) <=
                       tol::kContext;
  r.condition_route = args && balance;
  return r;
}

bool tef_unitarity(const TwoQubitProjection& p, Real chi_bf) {
  if (angle_distance(chi_bf, 0.0) < tol::kWeight) {
    throw Error(ErrorKind::InvalidInput, "tef_unitarity needs a nonzero weight");
  }
  const TefConditionReport r = tef_conditions(p, chi_bf);
  if (r.diagonal_route != r.condition_route) {
    throw Error(ErrorKind::NumericalAbort, "diagonal and argument conditions disagree (spread " +
                                               std::to_string(r.diagonal_spread) + ")");
  }
  return r.diagonal_route;
}

// ---------------------------------------------------------------- classification

const char* to_string(OutcomeTag tag) {
  switch (tag) {
    case OutcomeTag::fused_weighted_graph: return "fused_weighted_graph";
    case OutcomeTag::weighted_graph_new_weight: return "weighted_graph_new_weight";
    case OutcomeTag::maximally_entangled: return "maximally_entangled";
    case OutcomeTag::product: return "product";
    case OutcomeTag::other: return "other";
  }
  return "other";
}

OutcomeClass classify_projection(const TwoQubitProjection& p, Real chi_bf, int neighbor_count,
                                 std::optional<Real> chi_bf2) {
  if (neighbor_count != 1 && neighbor_count != 2) {
    throw Error(ErrorKind::InvalidInput, "neighbor_count must be 1 or 2");
  }
  const TwoQubitProjection q = p.normalized();
  if (std::abs(q.B) < kArgTol && std::abs(q.C) < kArgTol && std::abs(std::abs(q.A) - std::abs(q.D)) < kArgTol) {
    return {OutcomeTag::fused_weighted_graph, std::nullopt, "B = C = 0 and |A| = |D|"};
  }
  if (neighbor_count == 1) {
    const TefConditionReport t = tef_conditions(q, chi_bf);
    if (t.diagonal_route && t.condition_route) {
      try {
        return {OutcomeTag::weighted_graph_new_weight, resulting_weight(q, chi_bf),
                "e-f operator unitary: equal diagonal magnitudes and argument conditions"};
      } catch (const Error&) {
        // Fall through: undefined arguments cannot carry a weight.
      }
    }
  }
  const Complex z = inner_z(chi_bf, neighbor_count == 2 ? chi_bf2.value_or(chi_bf) : 0.0);
  const EntanglementReport rep = entanglement_report(q.as_matrix(), z);
  if (std::abs(rep.det_rho - 0.25) < kArgTol) {
    return {OutcomeTag::maximally_entangled, std::nullopt, "M' proportional to a unitary (det rho = 1/4)"};
  }
  if (rep.det_rho < 1e-12) return {OutcomeTag::product, std::nullopt, "det rho = 0"};
  return {OutcomeTag::other, std::nullopt, "no condition set holds"};
}

// ---------------------------------------------------------------- hyperbola

TwoQubitProjection hyperbola_projection(Real xi, Real chi_bf) {
  const Complex w = phase(chi_bf / 2.0);
  return {1.0, xi * w, xi, w};
}

XiSolution solve_xi_for_weight(Real chi_bf, Real chi_target) {
  if (angle_distance(chi_bf, 0.0) < tol::kWeight) {
    throw Error(ErrorKind::InvalidInput, "hyperbola construction needs a nonzero weight");
  }
  const Real target = normalize_angle(chi_target);
  auto residual = [&](Real sign, Real u) -> std::optional<Real> {
    try {
      return normalize_angle(resulting_weight(hyperbola_projection(sign * std::exp(u), chi_bf), chi_bf) - target);
    } catch (const Error&) {
      return std::nullopt;
    }
  };
  constexpr Real kLo = -30.0, kHi = 30.0;
  constexpr int kSteps = 6000;
  std::optional<XiSolution> best;
  for (Real sign : {1.0, -1.0}) {
    std::optional<Real> prev = residual(sign, kLo);
    Real prev_u = kLo;
    for (int k = 1; k <= kSteps; ++k) {
      const Real u = kLo + (kHi - kLo) * k / kSteps;
      const std::optional<Real> cur = residual(sign, u);
      if (prev && cur && std::abs(*prev - *cur) < kPi / 2 && ((*prev <= 0.0 && *cur >= 0.0) || (*prev >= 0.0 && *cur <= 0.0))) {
        Real lo = prev_u, hi = u, flo = *prev;
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
          const Real mid = 0.5 * (lo + hi);
          const std::optional<Real> fm = residual(sign, mid);
          if (!fm) break;
          if ((*fm <= 0.0) == (flo <= 0.0)) {
            lo = mid;
            flo = *fm;
          } else {
            hi = mid;
          }
        }
        const Real root = 0.5 * (lo + hi);
        const std::optional<Real> fr = residual(sign, root);
        if (fr && (!best || std::abs(*fr) < best->residual)) {
          best = XiSolution{sign * std::exp(root), std::abs(*fr), prev_u, u};
        }
      }
      prev = cur;
      prev_u = u;
    }
  }
  if (!best || best->residual > tol::kWeight) {
    std::ostringstream msg;
    msg << "no xi found for chi_bf=" << chi_bf << " target=" << target << " on log|xi| in [" << kLo << ", " << kHi
        << "], both signs";
    throw Error(ErrorKind::ConvergenceFailure, msg.str());
  }
  return *best;
}

// ---------------------------------------------------------------- max entangled

TwoQubitProjection max_entangled_family(const Matrix2& seed, Complex z) {
  const Real s = gram_scale(z);
  if ((seed * seed.adjoint() - 0.5 * Matrix2::Identity()).cwiseAbs().maxCoeff() > tol::kContext) {
    throw Error(ErrorKind::BadSeed, "seed is not (1/sqrt2) times a unitary");
  }
  const Complex zc = std::conj(z);
  return {seed(0, 0) - zc * seed(0, 1) / s, seed(0, 1) / s, seed(1, 0) - zc * seed(1, 1) / s, seed(1, 1) / s};
}

std::array<Real, 3> max_entangled_residuals(const TwoQubitProjection& p, Complex z) {
  const Real s = std::sqrt(std::max(0.0, 1.0 - std::norm(z)));
  const Complex zc = std::conj(z);
  const TwoQubitProjection q = p.normalized();
  return {std::abs(std::abs(q.A + zc * q.B) - s * std::abs(q.D)), std::abs(std::abs(q.C + zc * q.D) - s * std::abs(q.B)),
          std::abs(q.A * std::conj(q.B) + q.C * std::conj(q.D) + zc * (std::norm(q.B) + std::norm(q.D)))};
}

// ---------------------------------------------------------------- no good failure

Real relevant_det_closed_form(const ModeUnitary& u, int i, int j, Complex z) {
  const Complex cross_top = u(0, i) * u(1, j) - u(0, j) * u(1, i);
  const Complex cross_bottom = u(2, j) * u(3, i) - u(2, i) * u(3, j);
  const Matrix2 c = pattern_coefficients(u, i, j);
  const Real n2 = std::norm(c(0, 0)) + std::norm(c(0, 1)) + 2.0 * std::real(z * c(0, 0) * std::conj(c(0, 1))) +
                  std::norm(c(1, 0)) + std::norm(c(1, 1)) + 2.0 * std::real(z * c(1, 0) * std::conj(c(1, 1)));
  if (n2 <= 0.0) return 0.0;
  return (1.0 - std::norm(z)) * std::norm(cross_top * cross_bottom) / (n2 * n2);
}

NoGoodFailureReport check_no_good_failure(const ModeUnitary& u, Complex z) {
  constexpr Real kNonzero = 1e-12;
  NoGoodFailureReport r{true, true, true, 0.0, 0.0, 0};
  int ref = -1;
  for (int i = 0; i < u.size(); ++i) {
    const bool top = std::norm(u(0, i)) + std::norm(u(1, i)) > kNonzero;
    const bool bottom = std::norm(u(2, i)) + std::norm(u(3, i)) > kNonzero;
    if (!top || !bottom) continue;
    if (ref < 0) {
      ref = i;
      continue;
    }
    const Real cross = std::abs(u(2, i) * u(3, ref) - u(3, i) * u(2, ref));
    const Real scale = std::sqrt((std::norm(u(2, i)) + std::norm(u(3, i))) * (std::norm(u(2, ref)) + std::norm(u(3, ref))));
    if (cross > 1e-10 * std::max(scale, 1e-300)) r.premise_holds = false;
  }
  r.applicable = r.premise_holds;

  const FusionContext ctx = make_synthetic_context(z);
  for (const auto& o : enumerate_outcomes(ctx, u)) {
    if (!o.relevant() || o.probability < tol::kZeroOutcome) continue;
    ++r.relevant_outcomes;
    const EntanglementReport rep = entanglement_report(o.m_matrix, z);
    r.max_relevant_det = std::max(r.max_relevant_det, rep.det_rho);
    r.max_closed_form_det = std::max(r.max_closed_form_det, relevant_det_closed_form(u, o.i, o.j, z));
  }
  r.conclusion_holds = r.max_relevant_det < 1e-12 && r.max_closed_form_det < 1e-12;
  return r;
}

// ---------------------------------------------------------------- X-like and Y-like scans

Matrix2 chain_projection_matrix(Complex A, Complex B, Real chi1, Real chi2) {
  Matrix2 m;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l) m(k, l) = A + B * phase(-(chi1 * k + chi2 * l));
  return m;
}

std::optional<XlikeSolution> xlike_check(Real chi1, Real chi2, Complex A, Complex B, Real tol) {
  const Matrix2 m = chain_projection_matrix(A, B, chi1, chi2);
  const Real f = m.norm();
  if (f == 0.0) return std::nullopt;
  const Matrix2 mn = m / f;
  if ((mn * mn.adjoint() - 0.5 * Matrix2::Identity()).cwiseAbs().maxCoeff() > tol) return std::nullopt;
  XlikeSolution s{chi1, chi2, 0.0, 0.0, "unexplained"};
  if (std::abs(A) < kArgMagnitude) {
    s.rho = std::numeric_limits<Real>::infinity();
    return s;
  }
  s.rho = std::abs(B) / std::abs(A);
  s.delta = normalize_angle(std::arg(B) - std::arg(A));
  const bool unit_ratio = std::abs(s.rho - 1.0) < tol;
  if (unit_ratio && angle_distance(chi1, chi2) < tol && angle_distance(s.delta, chi1 + kPi) < tol) {
    s.kind = "case1";
  } else if (unit_ratio && angle_distance(chi1 + chi2, 0.0) < tol && angle_distance(s.delta, kPi) < tol) {
    s.kind = "case2";
  } else if (unit_ratio && angle_distance(chi1, kPi) < tol && angle_distance(chi2, kPi) < tol) {
    s.kind = "degenerate_pi";
  }
  return s;
}

XlikeScanReport xlike_uniqueness_scan(int resolution, Real tol) {
  if (resolution < 2) throw Error(ErrorKind::InvalidInput, "resolution must be at least 2");
  const int r = resolution;
  XlikeScanReport report{r, 0, 0, {}, 0};
  std::vector<std::vector<XlikeSolution>> per_row(static_cast<std::size_t>(r));
  std::vector<long long> candidates(static_cast<std::size_t>(r), 0), points(static_cast<std::size_t>(r), 0);
  parallel_for(r, [&](long long k1) {
    const Real chi1 = grid_weight(static_cast<int>(k1), r);
    if (std::abs(chi1) < 1e-12) return;
    auto& sols = per_row[static_cast<std::size_t>(k1)];
    for (int k2 = 0; k2 < r; ++k2) {
      const Real chi2 = grid_weight(k2, r);
      if (std::abs(chi2) < 1e-12) continue;
      for (int m = 0; m < r; ++m) {
        const Real delta = 2.0 * kPi * m / r;
        ++points[static_cast<std::size_t>(k1)];
        // |A+B| = |A+Be^{-i(chi1+chi2)}| and |A+Be^{-i chi1}| = |A+Be^{-i chi2}|, independent of |B|/|A|.
        const Real r1 = std::abs(std::cos(delta) - std::cos(delta - chi1 - chi2));
        const Real r2 = std::abs(std::cos(delta - chi1) - std::cos(delta - chi2));
        if (r1 > tol || r2 > tol) continue;
        ++candidates[static_cast<std::size_t>(k1)];
        // Row orthogonality: 2 e^{i chi1} rho^2 + L rho + 2 = 0.
        const Complex l = phase(delta) + phase(-(delta - chi1)) + phase(delta - chi2) + phase(-(delta - chi1 - chi2));
        const Complex a = 2.0 * phase(chi1);
        const Complex disc = std::sqrt(l * l - 4.0 * a * 2.0);
        const Complex roots[2] = {(-l + disc) / (2.0 * a), (-l - disc) / (2.0 * a)};
        for (int q = 0; q < 2; ++q) {
          const Complex root = roots[q];
          if (q == 1 && std::abs(roots[1] - roots[0]) < tol) continue;  // double root
          if (std::abs(root.imag()) > tol * (1.0 + std::abs(root)) || root.real() <= tol) continue;
          if (auto s = xlike_check(chi1, chi2, 1.0, root.real() * phase(delta), tol)) sols.push_back(*s);
        }
      }
    }
  });
  for (int k = 0; k < r; ++k) {
    report.points += points[static_cast<std::size_t>(k)];
    report.magnitude_candidates += candidates[static_cast<std::size_t>(k)];
    for (auto& s : per_row[static_cast<std::size_t>(k)]) {
      if (s.kind == "unexplained") ++report.unexplained;
      report.solutions.push_back(std::move(s));
    }
  }
  return report;
}

Real ylike_residual(Real chi1, Real chi2, Real delta) {
  const Real v[4] = {std::cos(delta), std::cos(delta - chi1), std::cos(delta - chi2), std::cos(delta - chi1 - chi2)};
  return *std::max_element(v, v + 4) - *std::min_element(v, v + 4);
}

YlikeScanReport ylike_impossibility_scan(int resolution, Real tol) {
  if (resolution < 2) throw Error(ErrorKind::InvalidInput, "resolution must be at least 2");
  const int r = resolution;
  std::vector<long long> pts(static_cast<std::size_t>(r), 0), sols(static_cast<std::size_t>(r), 0),
      bad(static_cast<std::size_t>(r), 0);
  parallel_for(r, [&](long long k1) {
    const Real chi1 = grid_weight(static_cast<int>(k1), r);
    if (std::abs(chi1) < 1e-12) return;
    const auto idx = static_cast<std::size_t>(k1);
    for (int k2 = 0; k2 < r; ++k2) {
      const Real chi2 = grid_weight(k2, r);
      if (std::abs(chi2) < 1e-12) continue;
      for (int m = 0; m < r; ++m) {
        const Real delta = 2.0 * kPi * m / r;
        ++pts[idx];
        if (ylike_residual(chi1, chi2, delta) > tol) continue;
        ++sols[idx];
        const bool expected = angle_distance(chi1, kPi) < tol && angle_distance(chi2, kPi) < tol &&
                              std::abs(std::cos(delta)) < tol;
        if (!expected) ++bad[idx];
      }
    }
  });
  YlikeScanReport rep{r, 0, 0, 0};
  for (int k = 0; k < r; ++k) {
    rep.points += pts[static_cast<std::size_t>(k)];
    rep.solutions += sols[static_cast<std::size_t>(k)];
    rep.unexplained += bad[static_cast<std::size_t>(k)];
  }
  return rep;
}

// ---------------------------------------------------------------- pair weights

Real pair_weight_from_matrix(const Matrix2& m) {
  const Eigen::JacobiSVD<Matrix2> svd(m);
  const auto s = svd.singularValues();
  return 4.0 * std::atan2(s(1), s(0));
}

PairWeight pair_weight_from_projection(Complex A, Complex B, Real chi1, Real chi2) {
  const Matrix2 m = chain_projection_matrix(A, B, chi1, chi2);
  const Matrix2 mn = m / m.norm();
  const Complex cond = A * std::conj(B) * (1.0 + phase(chi1)) * (1.0 + phase(chi2));
  return {pair_weight_from_matrix(mn), std::abs(cond.real()) < tol::kContext, std::abs(mn.determinant())};
}

}  // namespace wgs
