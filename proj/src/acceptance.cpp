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

#include "wgs/acceptance.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <sstream>

#include <Eigen/Eigenvalues>

#include "wgs/fusion_protocols.hpp"
#include "wgs/parallel.hpp"
#include "wgs/projection_analysis.hpp"
#include "wgs/random.hpp"

namespace wgs {

namespace {

WeightedGraph path(const std::vector<std::string>& ids, const std::vector<Real>& weights) {
  WeightedGraph g(ids);
  for (std::size_t k = 0; k < weights.size(); ++k) g.add_edge(static_cast<int>(k), static_cast<int>(k + 1), weights[k]);
  return g;
}

const ProtocolOutcome& outcome(const std::vector<ProtocolOutcome>& outs, const std::string& label) {
  for (const auto& o : outs)
    if (o.label == label) return o;
  throw Error(ErrorKind::NumericalAbort, "protocol produced no '" + label + "' outcome");
}

ChainState logical_chain(Real chi) { return add_logical_pair(make_chain(path({"x", "a"}, {chi})), 1, "e"); }

std::string fmt(const char* f, double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, x);
  return buf;
}

struct Ctx {
  const AcceptanceOptions& opt;
  Rng rng;
  Real d() const { return opt.perturbation; }
  int n(int full, int quick) const { return opt.quick ? quick : full; }
};

// 1
CriterionResult type_i_distribution(Ctx& c) {
  Real prob_res = 0, fid_res = 0;
  const int draws = c.n(20, 5);
  for (int t = 0; t < draws; ++t) {
    const std::vector<Real> wl{random_weight(c.rng), random_weight(c.rng)};
    const std::vector<Real> wr{random_weight(c.rng), random_weight(c.rng)};
    const auto outs = fuse_type_i(make_chain(path({"l0", "l1", "l2"}, wl)), 2, make_chain(path({"r0", "r1", "r2"}, wr)), 0);
    if (outs.size() != 4) throw Error(ErrorKind::NumericalAbort, "Type-I returned " + std::to_string(outs.size()) + " outcomes");
    for (const auto& o : outs) prob_res = std::max(prob_res, std::abs(o.probability - (0.25 + c.d())));
    const PureState target = build_state(path({"l0", "l1", "l2~r0", "r1", "r2"}, {wl[0], wl[1], wr[0], wr[1]}));
    for (const char* l : {"success_plus", "success_minus"}) {
      const auto& o = outcome(outs, l);
      const Real f = o.post_state ? fidelity_up_to_global_phase(o.post_state->state, target) : 0.0;
      fid_res = std::max(fid_res, 1 - f);
    }
  }
  return {1, "type-i-outcome-distribution", prob_res < 1e-10 && fid_res <= 1e-10, std::max(prob_res, fid_res), 1e-10, 0, 1.0,
          std::to_string(draws) + " chain pairs; prob " + fmt("%.2e", prob_res) + ", 1-fidelity " + fmt("%.2e", fid_res)};
}

// 2
CriterionResult logical_qubit(Ctx& c) {
  Real res = 0, leak = 0, fid = 0;
  for (int k = 0; k < 100; ++k) {
    const Real chi = -kPi + 2 * kPi * (k + 0.5) / 100;
    const ChainState chain =
        make_chain(path({"c1", "b1", "a", "b2", "c2"}, {random_weight(c.rng), chi, chi, random_weight(c.rng)}));
    const auto outs = create_logical_qubit(chain, 2);
    const auto& s = outcome(outs, "success");
    res = std::max(res, std::abs(s.probability - ((1 - std::cos(chi)) / 4 + c.d())));
    if (!s.post_state) {
      leak = 1;
      continue;
    }
    const auto [p, q] = s.post_state->logical_pairs.at(0);
    leak = std::max(leak, logical_pair_violation(s.post_state->state, p, q));
    fid = std::max(fid, 1 - s.fidelity);
  }
  const bool pass = res < 1e-10 && leak < 1e-12 && fid <= 1e-10;
  return {2, "logical-qubit-creation", pass, res, 1e-10, 0, 5.0,
          "100 weights; mixed-bit leak " + fmt("%.2e", leak) + ", 1-fidelity " + fmt("%.2e", fid)};
}

// 3
CriterionResult type_ii_failure(Ctx& c) {
  Real split = 0, good = 0;
  bool flags = true, strict = true;
  const int draws = c.n(100, 20);
  for (int t = 0; t < draws; ++t) {
    const Real chi = random_weight(c.rng);
    const Real f1 = t % 2 ? chi : random_weight(c.rng);
    const Real f2 = t % 2 ? -chi : random_weight(c.rng);
    const ChainState right = make_chain(path({"h", "f", "b", "g"}, {random_weight(c.rng), f1, f2}));
    const auto outs = fuse_type_ii(logical_chain(random_weight(c.rng)), 1, right, 2);
    const Real re_z = (1 + std::cos(f1) + std::cos(f2) + std::cos(f1 + f2)) / 4;
    split = std::max(split, std::abs(outcome(outs, "failure_plus_minus").probability - ((1 - re_z) / 4 + c.d())));
    split = std::max(split, std::abs(outcome(outs, "failure_minus_plus").probability - ((1 + re_z) / 4 + c.d())));
  }
  for (int k = 1; k <= 100; ++k) {
    if (k == 50) continue;  // zero weight
    const Real chi = -kPi + 2 * kPi * k / 100;
    const ChainState right = make_chain(path({"h", "f", "b", "g"}, {0.7, chi, -chi}));
    const auto& o = outcome(fuse_type_ii(logical_chain(1.3), 1, right, 2), "failure_plus_minus");
    const Real expect = (1 - std::cos(chi)) / 8 + c.d();
    good = std::max(good, std::abs(o.probability - expect));
    flags = flags && o.is_good_failure;
    const bool at_pi = k == 100;
    strict = strict && (at_pi ? std::abs(o.probability - 0.25) < 1e-10 : o.probability < 0.25 - 1e-12);
  }
  const Real res = std::max(split, good);
  return {3, "type-ii-failure-split", res < 1e-10 && flags && strict, res, 1e-10, 0, 5.0,
          std::to_string(draws) + " chains; split " + fmt("%.2e", split) + ", good-failure grid " + fmt("%.2e", good) +
              (flags ? "" : ", good flag missing") + (strict ? "" : ", equality off pi")};
}

// 4
CriterionResult generalized_oracle(Ctx& c) {
  const int draws = c.n(1000, 200);
  std::vector<Real> worst(static_cast<std::size_t>(draws), 0.0);
  const std::uint64_t base = c.rng();
  const Real d = c.d();
  parallel_for(draws, [&](long long t) {
    Rng rng(base + static_cast<std::uint64_t>(t));
    const int n = 4 + static_cast<int>(t % 5);
    const ModeUnitary u = random_mode_unitary(n, rng);
    const ChainState left = logical_chain(random_weight(rng));
    const bool two = t % 2 == 0;
    const ChainState right = two ? make_chain(path({"f", "b", "g"}, {random_weight(rng), random_weight(rng)}))
                                 : make_chain(path({"b", "f"}, {random_weight(rng)}));
    const FusionContext ctx = make_fusion_context(left.state, 1, right.state, two ? 1 : 0);
    const auto closed = enumerate_outcomes(ctx, u);
    const auto brute = oracle_enumerate(ctx, u);
    Real w = 0;
    for (std::size_t k = 0; k < closed.size(); ++k) {
      w = std::max(w, std::abs(closed[k].probability + d - brute[k].probability));
      if (!brute[k].register_state || !closed[k].register_state) continue;
      const Matrix rho = reduced_density(*brute[k].register_state, ctx.left_qubits());
      const Eigen::SelfAdjointEigenSolver<Matrix> eig(rho);
      const auto ev = eig.eigenvalues();
      const Real dense = ev(ev.size() - 1) * ev(ev.size() - 2);
      w = std::max(w, std::abs(entanglement_report(closed[k].m_matrix, ctx.z).det_rho + d - dense));
    }
    worst[static_cast<std::size_t>(t)] = w;
  });
  const Real res = *std::max_element(worst.begin(), worst.end());
  return {4, "generalized-fusion-oracle", res < 1e-10, res, 1e-10, 0, 60.0,
          std::to_string(draws) + " (unitary, weight) draws, N in 4..8"};
}

bool half_unitary(const Matrix2& m) { return (m * m.adjoint() - 0.5 * Matrix2::Identity()).norm() < 1e-10; }

// 5
CriterionResult bell_retention(Ctx& c) {
  Real res = 0;
  int accepted = 0, drawn = 0;
  std::uniform_real_distribution<Real> mag(0, 0.95);
  while (accepted < 200 && drawn < 2000) {
    ++drawn;
    const ModeUnitary u = balanced_unitary(c.rng);
    const auto ref = enumerate_outcomes(make_synthetic_context(0.0), u);
    bool all = true;
    for (const auto& o : ref)
      if (o.relevant() && o.probability > tol::kZeroOutcome) all = all && half_unitary(o.m_matrix);
    if (!all) continue;
    ++accepted;
    const auto weighted = enumerate_outcomes(make_synthetic_context(std::polar(mag(c.rng), random_weight(c.rng))), u);
    for (std::size_t k = 0; k < ref.size(); ++k) {
      if (ref[k].relevant()) res = std::max(res, std::abs(weighted[k].probability - (ref[k].probability + c.d())));
    }
  }
  return {5, "bell-probability-retention", accepted == 200 && res < 1e-12, res, 1e-12, 0, 0,
          std::to_string(accepted) + " qualifying unitaries of " + std::to_string(drawn) + " drawn"};
}

// 6
CriterionResult balanced_entropy(Ctx& c) {
  Real res = 0;
  std::uniform_real_distribution<Real> mag(0, 0.95);
  for (int t = 0; t < 200; ++t) {
    const ModeUnitary u = balanced_unitary(c.rng);
    const Complex z = std::polar(mag(c.rng), random_weight(c.rng));
    Real total = 0;
    for (const auto& o : enumerate_outcomes(make_synthetic_context(z), u)) {
      if (!o.relevant() || o.probability < tol::kZeroOutcome) continue;
      total += o.probability;
      res = std::max(res, std::abs(entanglement_report(o.m_matrix, z).det_rho - ((1 - std::norm(z)) / 4 + c.d())));
    }
    res = std::max(res, std::abs(total - (0.5 + c.d())));
  }
  return {6, "balanced-unitary-entropy", res < 1e-10, res, 1e-10, 0, 0, "200 balanced unitaries, random z"};
}

// 7
CriterionResult ghz_pairs(Ctx& c) {
  Real res = 0;
  int range_errors = 0;
  const PureState chain = build_state(path({"b1", "a", "b2"}, {kPi, kPi}));
  for (int k = 0; k < 50; ++k) {
    const Real target = -kPi + 2 * kPi * (k + 1) / 50;
    const GhzPair g = ghz_pair_for_target(kPi, kPi, target);
    const Real ma = std::abs(g.measurement.alpha()), mb = std::abs(g.measurement.beta());
    const Real q = 2 * ma * mb;  // |sin(pi/2)|^2 = 1
    const Real formula = 2 * std::atan2(q, std::sqrt(std::max(0.0, (1 - q) * (1 + q)))) + c.d();
    Real phis[2];
    for (int o = 0; o < 2; ++o) {
      const ProjectionResult r = project_qubit(chain, o ? g.complement : g.measurement);
      if (!r.state) throw Error(ErrorKind::NumericalAbort, "zero-probability GHZ outcome");
      Matrix2 m;
      m << r.state->amplitudes()(0), r.state->amplitudes()(1), r.state->amplitudes()(2), r.state->amplitudes()(3);
      phis[o] = pair_weight_from_matrix(m);
      res = std::max(res, std::abs(phis[o] - formula));
    }
    res = std::max(res, std::abs(phis[0] - phis[1]));
    res = std::max(res, std::abs(formula - std::abs(target)));
  }
  for (int t = 0; t < 50; ++t) {
    const Real c1 = random_weight(c.rng), c2 = random_weight(c.rng);
    const Real lim = ghz_weight_limit(c1, c2);
    try {
      ghz_pair_for_target(c1, c2, 0.99 * lim);
    } catch (const Error&) {
      ++range_errors;
    }
    if (lim < kPi - 1e-3) {
      try {
        ghz_pair_for_target(c1, c2, lim + 1e-3);
        ++range_errors;
      } catch (const Error& e) {
        if (e.kind() != ErrorKind::NotAchievable) ++range_errors;
      }
    }
  }
  return {7, "ghz-pair-generation", res < 1e-10 && range_errors == 0, res, 1e-10, 0, 0,
          "50 targets at chi1=chi2=pi; " + std::to_string(range_errors) + " range-check errors over 50 weight pairs"};
}

// 8
CriterionResult hyperbola(Ctx& c) {
  Real root = 0, fid = 0;
  std::uniform_real_distribution<Real> frac(-0.98, 0.98);
  for (int t = 0; t < 50; ++t) {
    Real chi_bf = random_weight(c.rng);
    while (std::abs(chi_bf) < 0.05) chi_bf = random_weight(c.rng);
    // The family sweeps the weight from chi_bf to -chi_bf.
    const Real target = chi_bf * frac(c.rng);
    const XiSolution s = solve_xi_for_weight(chi_bf, target);
    root = std::max(root, s.residual);
    const TwoQubitProjection p = hyperbola_projection(s.xi, chi_bf);
    const Real chi_x = random_weight(c.rng);
    const PureState joint = kron(logical_chain(chi_x).state, make_chain(path({"b", "f"}, {chi_bf})).state);
    const ProjectionResult r = project_pair(joint, 1, 3, p);
    if (!r.state) throw Error(ErrorKind::NumericalAbort, "zero-probability hyperbola projection");
    const auto fix = tef_phase_corrections(p, chi_bf);
    const LocalGate gates[] = {LocalGate::phase(1, fix[0]), LocalGate::phase(2, fix[1])};
    WeightedGraph want({"x", "e", "f"});
    want.add_edge(0, 1, chi_x);
    want.add_edge(1, 2, target + c.d());
    fid = std::max(fid, 1 - fidelity_up_to_global_phase(apply_all(*r.state, gates), build_state(want)));
  }
  return {8, "hyperbola-construction", root < 1e-9 && fid <= 1e-8, std::max(root, fid), 1e-8, 0, 0,
          "50 (chi_bf, target) pairs; root residual " + fmt("%.2e", root) + ", 1-fidelity " + fmt("%.2e", fid)};
}

// 9
CriterionResult no_good_failure(Ctx& c) {
  Real res = 0;
  int premise_misses = 0, outcomes = 0;
  std::uniform_real_distribution<Real> mag(0, 0.95);
  for (int t = 0; t < 200; ++t) {
    const ModeUnitary u = collinear_unitary(5 + t % 4, c.rng);
    const NoGoodFailureReport r = check_no_good_failure(u, std::polar(mag(c.rng), random_weight(c.rng)));
    if (!r.premise_holds) ++premise_misses;
    outcomes += r.relevant_outcomes;
    res = std::max({res, r.max_relevant_det, r.max_closed_form_det});
  }
  return {9, "no-good-failure-theorem", premise_misses == 0 && res < 1e-12, res, 1e-12, 0, 0,
          "200 constrained unitaries, " + std::to_string(outcomes) + " relevant outcomes"};
}

// 10
CriterionResult weight_scans(Ctx& c) {
  const int r = c.n(200, 60);
  const XlikeScanReport x = xlike_uniqueness_scan(r);
  const YlikeScanReport y = ylike_impossibility_scan(r);
  const Real bad = static_cast<Real>(x.unexplained + y.unexplained);
  return {10, "weight-scans", bad == 0, bad, 1e-6, 0, 120.0,
          std::to_string(r) + "^3 grid; X-like " + std::to_string(x.solutions.size()) + " solutions (" +
              std::to_string(x.unexplained) + " unexplained), Y-like " + std::to_string(y.solutions) + " (" +
              std::to_string(y.unexplained) + " unexplained)"};
}

}  // namespace

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options) {
  using Fn = CriterionResult (*)(Ctx&);
  const Fn all[] = {type_i_distribution, logical_qubit,    type_ii_failure, generalized_oracle, bell_retention,
                    balanced_entropy,    ghz_pairs,        hyperbola,       no_good_failure,    weight_scans};
  std::vector<CriterionResult> out;
  for (int id = 1; id <= 10; ++id) {
    if (!options.only.empty() && std::find(options.only.begin(), options.only.end(), id) == options.only.end()) continue;
    Ctx ctx{options, Rng(options.seed + static_cast<std::uint64_t>(id))};
    const auto start = std::chrono::steady_clock::now();
    CriterionResult r;
    try {
      r = all[id - 1](ctx);
    } catch (const Error& e) {
      r = {id, "criterion-" + std::to_string(id), false, 0, 0, 0, 0, std::string("error: ") + e.what()};
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (r.time_limit > 0 && r.seconds > r.time_limit) {
      r.pass = false;
      r.detail += "; over time limit";
    }
    out.push_back(r);
  }
  return out;
}

std::string format_result(const CriterionResult& r) {
  std::ostringstream s;
  s << (r.pass ? "PASS" : "FAIL") << ' ' << (r.id < 10 ? " " : "") << r.id << ' ' << r.name
    << "  residual=" << fmt("%.3e", r.residual) << " tol=" << fmt("%.0e", r.tolerance)
    << " time=" << fmt("%.2f", r.seconds) << 's';
  if (r.time_limit > 0) s << " (limit " << fmt("%.0f", r.time_limit) << "s)";
  s << "  " << r.detail;
  return s.str();
}

}  // namespace wgs
