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

#include <json.hpp>
#include <map>

#include "doctest.h"
#include "oracle.hpp"
#include "wgs/fusion_protocols.hpp"
#include "wgs/projection_analysis.hpp"

using namespace wgs;

namespace {

Real total(const std::vector<ProtocolOutcome>& outs) {
  Real s = 0;
  for (const auto& o : outs) s += o.probability;
  return s;
}

const ProtocolOutcome& by_label(const std::vector<ProtocolOutcome>& outs, const std::string& label) {
  for (const auto& o : outs)
    if (o.label == label) return o;
  throw std::logic_error("no outcome " + label);
}

std::vector<std::string> names(const std::string& prefix, int n) {
  std::vector<std::string> out;
  for (int k = 0; k < n; ++k) out.push_back(prefix + std::to_string(k));
  return out;
}

std::vector<Real> weights(int n, Rng& rng) {
  std::vector<Real> w;
  for (int k = 0; k < n; ++k) w.push_back(random_weight(rng));
  return w;
}

// Dense two-qubit weighted pair amplitudes (1, 1, 1, e^{-i phi}) / 2.
Real dense_pair_weight(const Vector& v) {
  const Complex det = v(0) * v(3) - v(1) * v(2);
  return 2 * std::asin(std::min(1.0, 2 * std::abs(det) / v.squaredNorm()));
}

// Left chain x - a with a logical partner e, as the protocols expect.
ChainState logical_chain(Real chi) {
  return add_logical_pair(make_chain(oracle::chain({"x", "a"}, {chi})), 1, "e");
}

}  // namespace

TEST_CASE("chain utilities") {
  CHECK(is_path_forest(oracle::chain({"p", "q", "r"}, {1.0, 2.0})));
  WeightedGraph star({"c", "l0", "l1", "l2"});
  for (int k = 1; k < 4; ++k) star.add_edge(0, k, 1.0);
  CHECK_FALSE(is_path_forest(star));
  CHECK_THROWS_AS(make_chain(star), Error);
  WeightedGraph tri({"p", "q", "r"});
  tri.add_edge(0, 1, 1.0);
  tri.add_edge(1, 2, 1.0);
  tri.add_edge(0, 2, 1.0);
  CHECK_FALSE(is_path_forest(tri));

  const ChainState lc = logical_chain(0.8);
  CHECK((lc.state.amplitudes() - oracle::logical_left(0.8).amplitudes()).norm() < 1e-15);
  CHECK(logical_pair_violation(lc.state, 1, 2) == 0.0);
  CHECK_NOTHROW(validate_chain(lc));
  CHECK(fidelity_up_to_global_phase(canonical_state(lc.graph, lc.logical_pairs), lc.state) > 1 - 1e-14);

  ChainState broken = lc;
  broken.state = build_state(lc.graph);
  CHECK_THROWS_AS(validate_chain(broken), Error);
}

TEST_CASE("Type-I on two 2-chains gives the 3-chain with inherited weights") {
  const Real c1 = 0.7, c2 = -2.1;
  const auto outs = fuse_type_i(make_chain(oracle::chain({"x", "a"}, {c1})), 1,
                                make_chain(oracle::chain({"b", "y"}, {c2})), 0);
  REQUIRE(outs.size() == 4);
  CHECK(std::abs(total(outs) - 1.0) < 1e-12);
  const Vector target = oracle::graph_state(oracle::chain({"x", "a~b", "y"}, {c1, c2}));
  for (const auto& o : outs) CHECK(std::abs(o.probability - 0.25) < 1e-12);
  for (const char* l : {"success_plus", "success_minus"}) {
    const auto& o = by_label(outs, l);
    REQUIRE(o.post_state);
    CHECK(o.post_state->graph.vertices() == std::vector<std::string>{"x", "a~b", "y"});
    CHECK(oracle::overlap(o.post_state->state.amplitudes(), target) > 1 - 1e-12);
  }
  CHECK(by_label(outs, "failure_two_photon").is_good_failure);
  CHECK(by_label(outs, "failure_zero_photon").is_good_failure);
}

TEST_CASE("Type-I with all weights pi is the standard graph-state result") {
  const auto outs = fuse_type_i(make_chain(oracle::chain({"x", "a"}, {kPi})), 1,
                                make_chain(oracle::chain({"b", "y", "z"}, {kPi, kPi})), 0);
  const WeightedGraph expect = oracle::chain({"x", "a~b", "y", "z"}, {kPi, kPi, kPi});
  for (const char* l : {"success_plus", "success_minus"}) {
    const auto& o = by_label(outs, l);
    CHECK(oracle::overlap(o.post_state->state.amplitudes(), oracle::graph_state(expect)) > 1 - 1e-12);
  }
}

TEST_CASE("property: Type-I over random weighted chains against the dense operator route") {
  Rng rng(21);
  for (int t = 0; t < 500; ++t) {
    const int nl = 2 + t % 3, nr = 2 + (t / 3) % 3;
    const auto wl = weights(nl - 1, rng), wr = weights(nr - 1, rng);
    const WeightedGraph lg = oracle::chain(names("l", nl), wl);
    const WeightedGraph rg = oracle::chain(names("r", nr), wr);
    const int a = nl - 1, b = 0;
    const auto outs = fuse_type_i(make_chain(lg), a, make_chain(rg), b);
    CHECK(std::abs(total(outs) - 1.0) < 1e-10);

    // Merged chain l0 .. l(nl-2), c, r1 .. r(nr-1) with the same weights.
    std::vector<std::string> ids = names("l", nl - 1);
    ids.push_back("l" + std::to_string(a) + "~r0");
    for (int k = 1; k < nr; ++k) ids.push_back("r" + std::to_string(k));
    std::vector<Real> w = wl;
    w.insert(w.end(), wr.begin(), wr.end());
    const Vector target = oracle::graph_state(oracle::chain(ids, w));

    // Operator route: |0>_c <00|_ab +- |1>_c <11|_ab on the dense product state.
    const int n = nl + nr;
    const Vector joint = oracle::kron(oracle::graph_state(lg), oracle::graph_state(rg));
    const Vector t0 = oracle::apply_bra(target, nl - 1, n - 1, 1.0, 0.0);
    const Vector t1 = oracle::apply_bra(target, nl - 1, n - 1, 0.0, 1.0);
    for (int sign : {1, -1}) {
      const Vector v0 = oracle::apply_bra(oracle::apply_bra(joint, nl + b, n, 1.0, 0.0), a, n - 1, 1.0, 0.0);
      const Vector v1 = oracle::apply_bra(oracle::apply_bra(joint, nl + b, n, 0.0, 1.0), a, n - 1, 0.0, 1.0);
      Vector got(2 * v0.size()), want(2 * v0.size());
      got << v0, v1;
      want << t0, t1;
      CHECK(oracle::overlap(got, want) > 1 - 1e-10);
      const auto& o = by_label(outs, sign > 0 ? "success_plus" : "success_minus");
      CHECK(std::abs(o.probability - 0.5 * got.squaredNorm()) < 1e-12);
      CHECK(oracle::overlap(o.post_state->state.amplitudes(), target) > 1 - 1e-10);
      CHECK(o.fidelity > 1 - 1e-10);
    }
    for (const char* l : {"failure_two_photon", "failure_zero_photon"}) {
      const auto& o = by_label(outs, l);
      CHECK(std::abs(o.probability - 0.25) < 1e-10);
      CHECK(o.is_good_failure);
    }
  }
}

TEST_CASE("Type-I rejects interior vertices") {
  const ChainState three = make_chain(oracle::chain({"p", "q", "r"}, {1.0, 1.0}));
  const ChainState two = make_chain(oracle::chain({"s", "t"}, {1.0}));
  try {
    fuse_type_i(three, 1, two, 0);
    FAIL("expected NotEndpoint");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotEndpoint);
  }
}

TEST_CASE("logical qubit at chi = pi: both outcomes succeed") {
  const ChainState c = make_chain(oracle::chain({"c1", "b1", "a", "b2", "c2"}, {0.6, kPi, kPi, -1.4}));
  const auto outs = create_logical_qubit(c, 2);
  REQUIRE(outs.size() == 2);
  CHECK(std::abs(total(outs) - 1.0) < 1e-12);
  for (const auto& o : outs) {
    CHECK(std::abs(o.probability - 0.5) < 1e-12);
    REQUIRE(o.post_state);
    CHECK(o.fidelity > 1 - 1e-12);
    CHECK_NOTHROW(validate_chain(*o.post_state));
  }
}

TEST_CASE("logical qubit Case 1 at chi = pi/2 succeeds with probability 1/4") {
  const ChainState c = make_chain(oracle::chain({"b1", "a", "b2"}, {kPi / 2, kPi / 2}));
  const auto outs = create_logical_qubit(c, 1);
  CHECK(std::abs(by_label(outs, "success").probability - 0.25) < 1e-14);
  CHECK(std::abs(total(outs) - 1.0) < 1e-12);
}

TEST_CASE("property: logical qubit success probability on a chi grid") {
  for (int k = 0; k < 100; ++k) {
    const Real chi = -kPi + 2 * kPi * (k + 0.5) / 100;
    for (bool case2 : {false, true}) {
      const ChainState c =
          make_chain(oracle::chain({"c1", "b1", "a", "b2", "c2"}, {0.9, case2 ? -chi : chi, chi, 2.2}));
      const auto outs = create_logical_qubit(c, 2);
      const auto& s = outs.front();
      CHECK(std::abs(s.probability - (1 - std::cos(chi)) / 4) < 1e-10);
      REQUIRE(s.post_state);
      CHECK(s.fidelity > 1 - 1e-10);
      const auto& pair = s.post_state->logical_pairs.at(0);
      CHECK(logical_pair_violation(s.post_state->state, pair.first, pair.second) < 1e-12);
      CHECK(std::abs(total(outs) - 1.0) < 1e-10);
      // Dense route for the success probability.
      const Vector dense = oracle::apply_bra(oracle::graph_state(c.graph), 2, 5, 1 / std::sqrt(2.0),
                                             case2 ? -1 / std::sqrt(2.0) : -phase(chi) / std::sqrt(2.0));
      CHECK(std::abs(dense.squaredNorm() - s.probability) < 1e-12);
      for (const auto& o : outs)
        if (o.label.rfind("failure", 0) == 0 && o.post_state) CHECK(o.is_good_failure);
    }
  }
}

TEST_CASE("Case 2 flips the sign of the b1 - c1 weight") {
  const Real chi = 1.1, phi1 = 0.7, phi2 = -2.4;
  const auto one = create_logical_qubit(make_chain(oracle::chain({"c1", "b1", "a", "b2", "c2"}, {phi1, chi, chi, phi2})), 2);
  const auto two =
      create_logical_qubit(make_chain(oracle::chain({"c1", "b1", "a", "b2", "c2"}, {phi1, 2 * kPi - chi, chi, phi2})), 2);
  const ChainState& s1 = *one.front().post_state;
  const ChainState& s2 = *two.front().post_state;
  const int b1 = s1.graph.index_of("b1"), c1 = s1.graph.index_of("c1"), c2 = s1.graph.index_of("c2");
  CHECK(std::abs(*s1.graph.weight(b1, c1) - phi1) < 1e-12);
  CHECK(std::abs(*s2.graph.weight(b1, c1) + phi1) < 1e-12);
  CHECK(std::abs(*s2.graph.weight(b1, c2) - phi2) < 1e-12);
  CHECK(two.front().fidelity > 1 - 1e-12);
  bool has_x = false;
  for (const auto& c : two.front().corrections) has_x |= c.gate == "X" && c.vertex == "b1";
  CHECK(has_x);
}

TEST_CASE("ineligible weights are rejected") {
  const ChainState c = make_chain(oracle::chain({"b1", "a", "b2"}, {0.4, 1.3}));
  try {
    create_logical_qubit(c, 1);
    FAIL("expected WeightsNotEligible");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::WeightsNotEligible);
  }
}

TEST_CASE("Type-II with all weights pi: success 1/2, failures 1/4 and good") {
  const ChainState left = logical_chain(kPi);
  const ChainState right = make_chain(oracle::chain({"f", "b", "g"}, {kPi, kPi}));
  const auto outs = fuse_type_ii(left, 1, right, 1);
  CHECK(std::abs(total(outs) - 1.0) < 1e-12);
  for (const auto& o : outs) CHECK(std::abs(o.probability - 0.25) < 1e-12);
  CHECK(by_label(outs, "failure_plus_minus").is_good_failure);
  CHECK(by_label(outs, "failure_minus_plus").is_good_failure);
  const WeightedGraph star = [] {
    WeightedGraph g({"x", "e", "f", "g"});
    g.add_edge(0, 1, kPi);
    g.add_edge(1, 2, kPi);
    g.add_edge(1, 3, kPi);
    return g;
  }();
  for (const char* l : {"success_plus", "success_minus"}) {
    const auto& o = by_label(outs, l);
    CHECK(o.post_state->graph.vertices() == star.vertices());
    CHECK(oracle::overlap(o.post_state->state.amplitudes(), oracle::graph_state(star)) > 1 - 1e-12);
  }
}

TEST_CASE("property: Type-II failure split and constant success") {
  Rng rng(31);
  for (int t = 0; t < 200; ++t) {
    const Real chi_l = random_weight(rng), f1 = random_weight(rng), f2 = random_weight(rng);
    const ChainState right = t % 2 ? make_chain(oracle::chain({"f", "b", "g"}, {f1, f2}))
                                   : make_chain(oracle::chain({"b", "f"}, {f1}));
    const auto outs = fuse_type_ii(logical_chain(chi_l), 1, right, t % 2);
    CHECK(std::abs(total(outs) - 1.0) < 1e-10);
    const Real g = t % 2 ? f2 : 0.0;
    const Real re_z = (1 + std::cos(f1) + std::cos(g) + std::cos(f1 + g)) / 4;
    CHECK(std::abs(by_label(outs, "success_plus").probability - 0.25) < 1e-12);
    CHECK(std::abs(by_label(outs, "success_minus").probability - 0.25) < 1e-12);
    CHECK(std::abs(by_label(outs, "failure_plus_minus").probability - (1 - re_z) / 4) < 1e-10);
    CHECK(std::abs(by_label(outs, "failure_minus_plus").probability - (1 + re_z) / 4) < 1e-10);
    for (const char* l : {"success_plus", "success_minus"}) CHECK(by_label(outs, l).fidelity > 1 - 1e-10);
    // Dense route: the same bras on the Kronecker-built product state.
    const Vector joint = oracle::kron(oracle::logical_left(chi_l).amplitudes(), oracle::graph_state(right.graph));
    const int nr = right.graph.vertex_count(), n = 3 + nr, b = 3 + t % 2;
    const Vector pm = oracle::apply_bra(oracle::apply_bra(joint, b, n, 1.0, -1.0), 1, n - 1, 1.0, 1.0) / 2.0;
    CHECK(std::abs(pm.squaredNorm() - (1 - re_z) / 4) < 1e-12);
  }
}

TEST_CASE("Type-II good failure under Case-2 weights") {
  for (int k = 1; k <= 40; ++k) {
    if (k == 20) continue;
    const Real chi = -kPi + 2 * kPi * k / 40;
    const ChainState right = make_chain(oracle::chain({"h", "f", "b", "g"}, {0.5, chi, -chi}));
    const auto outs = fuse_type_ii(logical_chain(1.9), 1, right, 2);
    const auto& good = by_label(outs, "failure_plus_minus");
    const Real p = (1 - std::cos(chi)) / 8;
    CHECK(std::abs(good.probability - p) < 1e-10);
    CHECK(good.is_good_failure);
    CHECK(p <= 0.25 + 1e-15);
    if (std::abs(chi) < kPi - 1e-9) {
      CHECK(p < 0.25);
      CHECK_FALSE(by_label(outs, "failure_minus_plus").is_good_failure);
    } else {
      CHECK(std::abs(p - 0.25) < 1e-15);
    }
  }
}

TEST_CASE("Type-II needs a logical pair") {
  const ChainState left = make_chain(oracle::chain({"x", "a"}, {1.0}));
  const ChainState right = make_chain(oracle::chain({"b", "f"}, {1.0}));
  try {
    fuse_type_ii(left, 1, right, 0);
    FAIL("expected NoLogicalPair");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NoLogicalPair);
  }
  CHECK_THROWS_AS(fuse_generalized(left, 1, right, 0, type_ii_matrix()), Error);
}

TEST_CASE("generalized fusion through the diagonal PBS matches Type-II") {
  Rng rng(41);
  for (int t = 0; t < 30; ++t) {
    const ChainState left = logical_chain(random_weight(rng));
    const ChainState right = make_chain(oracle::chain({"f", "b", "g"}, {random_weight(rng), random_weight(rng)}));
    const auto gen = fuse_generalized(left, 1, right, 1, type_ii_matrix());
    const auto ii = fuse_type_ii(left, 1, right, 1);
    // Detector patterns coarse-grain onto the Type-II outcomes.
    Real relevant = 0, p0011 = 0, p2233 = 0;
    for (const auto& o : gen) {
      if (o.relevant()) relevant += o.probability;
      if (o.i == o.j) (o.i < 2 ? p0011 : p2233) += o.probability;
    }
    CHECK(std::abs(relevant - by_label(ii, "success_plus").probability - by_label(ii, "success_minus").probability) <
          1e-12);
    CHECK(std::abs(p0011 - by_label(ii, "failure_plus_minus").probability) < 1e-12);
    CHECK(std::abs(p2233 - by_label(ii, "failure_minus_plus").probability) < 1e-12);
  }
}

TEST_CASE("generalized fusion with identity and balanced networks") {
  Rng rng(42);
  const ChainState left = logical_chain(0.8);
  const ChainState right = make_chain(oracle::chain({"f", "b", "g"}, {1.2, -0.5}));
  int nonzero = 0;
  for (const auto& o : fuse_generalized(left, 1, right, 1, ModeUnitary::identity(4))) {
    if (o.probability < 1e-14) continue;
    ++nonzero;
    CHECK(std::abs(o.probability - 0.25) < 1e-12);
  }
  CHECK(nonzero == 4);
  const Complex z = inner_z(1.2, -0.5);
  for (int t = 0; t < 20; ++t) {
    Real relevant = 0;
    for (const auto& o : fuse_generalized(left, 1, right, 1, balanced_unitary(rng))) {
      if (!o.relevant() || o.probability < 1e-14) continue;
      relevant += o.probability;
      CHECK(std::abs(entanglement_report(o.m_matrix, z).det_rho - (1 - std::norm(z)) / 4) < 1e-10);
    }
    CHECK(std::abs(relevant - 0.5) < 1e-10);
  }
}

TEST_CASE("GHZ pair examples") {
  const Real h = 1 / std::sqrt(2.0);
  const GhzPair pi = ghz_pair_projection(kPi, kPi, h);
  CHECK(std::abs(pi.phi - kPi) < 1e-12);
  const GhzPair zero = ghz_pair_projection(0.9, -1.7, 0.0);
  CHECK(std::abs(zero.phi) < 1e-12);
  const GhzPair third = ghz_pair_projection(kPi / 2, kPi / 2, h);
  CHECK(std::abs(third.phi - kPi / 3) < 1e-12);
  // Full 3-qubit simulation of both outcomes, dense route.
  const Vector s = oracle::graph_state(oracle::chain({"b1", "a", "b2"}, {kPi / 2, kPi / 2}));
  for (const QubitProjection& p : {third.measurement, third.complement}) {
    const Vector v = oracle::apply_bra(s, 1, 3, p.alpha(), p.beta());
    CHECK(std::abs(v.squaredNorm() - 0.5) < 1e-12);
    CHECK(std::abs(dense_pair_weight(v) - kPi / 3) < 1e-10);
  }
}

TEST_CASE("property: GHZ pair outcomes agree with the formula and projection analysis") {
  Rng rng(51);
  std::uniform_real_distribution<Real> u(0, 1);
  for (int t = 0; t < 300; ++t) {
    const Real chi1 = random_weight(rng), chi2 = random_weight(rng), mag = u(rng);
    const GhzPair g = ghz_pair_projection(chi1, chi2, mag);
    const Real mb = std::sqrt(1 - mag * mag);
    const Real closed = std::acos(std::clamp(
        1 - 2 * mag * mag * mb * mb * (1 - std::cos(chi1)) * (1 - std::cos(chi2)), -1.0, 1.0));
    CHECK(std::abs(g.phi - closed) < 1e-7);  // arccos loses digits near 0 and pi
    const PairWeight pw = pair_weight_from_projection(g.measurement.alpha(), g.measurement.beta(), chi1, chi2);
    CHECK(pw.both_outcomes_equal);
    CHECK(std::abs(pw.phi - g.phi) < 1e-9);
    const Vector s = oracle::graph_state(oracle::chain({"b1", "a", "b2"}, {chi1, chi2}));
    for (int k = 0; k < 2; ++k) {
      CHECK(std::abs(g.probabilities[k] - 0.5) < 1e-12);
      CHECK(g.fidelities[k] > 1 - 1e-10);
      const QubitProjection& p = k ? g.complement : g.measurement;
      const Vector v = oracle::apply_bra(s, 1, 3, p.alpha(), p.beta());
      CHECK(std::abs(dense_pair_weight(v) - g.phi) < 1e-7);
      // The listed local gates do map the dense outcome onto the target pair.
      Matrix2 m;
      m << v(0), v(1), v(2), v(3);
      const Matrix2 mapped = g.corrections[k][0] * m * g.corrections[k][1].transpose();
      Vector mv(4);
      mv << mapped(0, 0), mapped(0, 1), mapped(1, 0), mapped(1, 1);
      CHECK(oracle::overlap(mv, oracle::graph_state(oracle::chain({"p", "q"}, {g.phi == 0 ? kPi : g.phi}))) >
            (g.phi == 0 ? 0.0 : 1 - 1e-10));
    }
  }
}

TEST_CASE("GHZ target inversion and range") {
  Rng rng(61);
  for (int t = 0; t < 50; ++t) {
    const Real target = -kPi + 2 * kPi * (t + 1) / 50;
    const GhzPair g = ghz_pair_for_target(kPi, kPi, target);
    CHECK(std::abs(g.phi - std::abs(target)) < 1e-10);
    CHECK(std::abs(g.outcome_phi[0] - g.outcome_phi[1]) < 1e-10);
  }
  CHECK(std::abs(ghz_weight_limit(kPi / 2, kPi / 2) - kPi / 3) < 1e-12);
  try {
    ghz_pair_for_target(kPi / 2, kPi / 2, kPi);
    FAIL("expected NotAchievable");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::NotAchievable);
  }
  const GhzPair z = ghz_pair_for_target(1.0, 2.0, 0.0);
  CHECK(std::abs(z.measurement.alpha()) < 1e-15);
  for (int t = 0; t < 100; ++t) {
    const Real c1 = random_weight(rng), c2 = random_weight(rng);
    const Real lim = ghz_weight_limit(c1, c2);
    const Real inside = lim * std::uniform_real_distribution<Real>(0, 0.999)(rng);
    CHECK(std::abs(ghz_pair_for_target(c1, c2, inside).phi - inside) < 1e-9);
    if (lim < kPi - 1e-6) CHECK_THROWS_AS(ghz_pair_for_target(c1, c2, std::min(kPi, lim + 1e-4)), Error);
  }
}

TEST_CASE("sampling is seeded and follows the probabilities") {
  const ChainState c = make_chain(oracle::chain({"c1", "b1", "a", "b2", "c2"}, {0.5, 2.0, 2.0, -1.0}));
  const auto outs = create_logical_qubit(c, 2);
  Rng r1(7), r2(7);
  std::map<std::size_t, int> counts;
  const int draws = 40000;
  for (int k = 0; k < draws; ++k) {
    const std::size_t i = sample_outcome(outs, r1);
    CHECK(i == sample_outcome(outs, r2));
    ++counts[i];
  }
  for (std::size_t i = 0; i < outs.size(); ++i) {
    const Real p = outs[i].probability;
    CHECK(std::abs(counts[i] / Real(draws) - p) < 5 * std::sqrt(p * (1 - p) / draws) + 1e-12);
  }
}

TEST_CASE("outcome report serializes") {
  const auto outs = fuse_type_ii(logical_chain(1.0), 1, make_chain(oracle::chain({"b", "f"}, {0.3})), 0);
  const auto j = nlohmann::json::parse(dump_outcomes(outs));
  REQUIRE(j.size() == outs.size());
  CHECK(j[0]["label"] == "success_plus");
  CHECK(j[1]["corrections"][0]["gate"] == "Z");
  CHECK(j[0]["graph"]["vertices"].size() == 3);
}
