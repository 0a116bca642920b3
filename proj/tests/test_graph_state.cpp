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

#include <algorithm>
#include <numeric>

#include "doctest.h"
#include "oracle.hpp"
#include "wgs/graph_state.hpp"

using namespace wgs;

namespace {

bool throws_kind(ErrorKind kind, auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.kind() == kind;
  }
  return false;
}

}  // namespace

TEST_CASE("graph invariants") {
  WeightedGraph g({"a", "b", "c"});
  g.add_edge("a", "b", 3.0 * kPi);
  CHECK(g.weight(0, 1).value() == doctest::Approx(kPi));
  g.add_edge(2, 1, -kPi);
  CHECK(g.weight(1, 2).value() == doctest::Approx(kPi));
  CHECK(throws_kind(ErrorKind::InvalidGraph, [&] { g.add_edge(0, 0, 1.0); }));
  CHECK(throws_kind(ErrorKind::InvalidGraph, [&] { g.add_edge(1, 0, 1.0); }));
  CHECK(throws_kind(ErrorKind::InvalidGraph, [&] { g.add_edge(0, 2, 2.0 * kPi); }));
  CHECK(throws_kind(ErrorKind::InvalidGraph, [&] { g.add_edge(0, 7, 1.0); }));
  CHECK(throws_kind(ErrorKind::InvalidGraph, [&] { g.add_vertex("a"); }));
  CHECK(g.degree(1) == 2);
  const WeightedGraph h = g.without_vertex(1);
  CHECK(h.vertex_count() == 2);
  CHECK(h.edges().empty());
}

TEST_CASE("build_state small cases") {
  WeightedGraph one({"x"});
  const PureState s1 = build_state(one);
  CHECK(std::abs(s1.amplitudes()(0) - 1.0 / std::sqrt(2.0)) < 1e-15);
  CHECK(std::abs(s1.amplitudes()(1) - 1.0 / std::sqrt(2.0)) < 1e-15);

  WeightedGraph two({"x", "y"});
  two.add_edge(0, 1, kPi);
  const Vector expected = (Vector(4) << 0.5, 0.5, 0.5, -0.5).finished();
  CHECK((build_state(two).amplitudes() - expected).norm() < 1e-15);

  WeightedGraph big;
  for (int k = 0; k < 21; ++k) big.add_vertex(std::to_string(k));
  CHECK(throws_kind(ErrorKind::CapExceeded, [&] { build_state(big); }));
  CHECK(throws_kind(ErrorKind::CapExceeded, [&] { build_state(two, 1); }));
}

TEST_CASE("bit order: qubit 0 is the most significant bit") {
  PureState s = PureState::basis(3, 0);
  s = apply_local(s, LocalGate::pauli_x(0));
  CHECK(std::abs(s.amplitudes()(4) - 1.0) < 1e-15);
  s = apply_local(s, LocalGate::pauli_x(2));
  CHECK(std::abs(s.amplitudes()(5) - 1.0) < 1e-15);
}

TEST_CASE("3-chain definition agrees with recursion") {
  const WeightedGraph g = oracle::chain({"a", "b", "c"}, {kPi / 2, kPi / 3});
  PureState s = attach_vertex(PureState(), 0, {});
  const NeighborWeight nb1[] = {{0, kPi / 2}};
  s = attach_vertex(s, 1, nb1);
  const NeighborWeight nb2[] = {{1, kPi / 3}};
  s = attach_vertex(s, 2, nb2);
  CHECK((s.amplitudes() - build_state(g).amplitudes()).norm() < 1e-12);
  CHECK((build_state(g).amplitudes() - oracle::graph_state(g)).norm() < 1e-12);
}

TEST_CASE("attach with pi weights is the CZ recursion") {
  std::mt19937_64 rng(7);
  WeightedGraph g = oracle::random_graph(4, 0.6, rng);
  const PureState base = build_state(g);
  const NeighborWeight nb[] = {{0, kPi}, {2, kPi}};
  const PureState attached = attach_vertex(base, 4, nb);
  // CZ recursion: (|phi>|0> + Z0 Z2 |phi>|1>)/sqrt2 with the new qubit last.
  PureState z = apply_local(apply_local(base, LocalGate::pauli_z(0)), LocalGate::pauli_z(2));
  Vector expected(32);
  for (Eigen::Index i = 0; i < 16; ++i) {
    expected(2 * i) = base.amplitudes()(i) / std::sqrt(2.0);
    expected(2 * i + 1) = z.amplitudes()(i) / std::sqrt(2.0);
  }
  CHECK((attached.amplitudes() - expected).norm() < 1e-15);
}

TEST_CASE("attach errors") {
  const PureState s = PureState::plus(2);
  const NeighborWeight dup[] = {{0, 1.0}, {0, 2.0}};
  CHECK(throws_kind(ErrorKind::IndexClash, [&] { attach_vertex(s, 1, dup); }));
  CHECK(throws_kind(ErrorKind::IndexOutOfRange, [&] { attach_vertex(s, 5, {}); }));
  const PureState raw(1, Vector::Ones(2), NormTag::unnormalized);
  CHECK(throws_kind(ErrorKind::NotNormalized, [&] { attach_vertex(raw, 0, {}); }));
}

TEST_CASE("property: build_state equals iterated attach for every ordering") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + trial % 7;
    const WeightedGraph g = oracle::random_graph(n, 0.5, rng);
    const Vector target = oracle::graph_state(g);
    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::shuffle(order.begin(), order.end(), rng);
    // Build with vertices in `order`, register positions sorted by label.
    PureState s;
    std::vector<int> placed;
    for (int v : order) {
      auto pos = static_cast<int>(std::lower_bound(placed.begin(), placed.end(), v) - placed.begin());
      std::vector<NeighborWeight> nbs;
      for (auto [u, chi] : g.neighbors(v)) {
        auto it = std::lower_bound(placed.begin(), placed.end(), u);
        if (it != placed.end() && *it == u) nbs.push_back({static_cast<int>(it - placed.begin()), chi});
      }
      s = attach_vertex(s, pos, nbs);
      placed.insert(placed.begin() + pos, v);
    }
    CHECK((s.amplitudes() - target).norm() < 1e-12);
  }
}

TEST_CASE("property: edge-order independence") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 20; ++trial) {
    const WeightedGraph g = oracle::random_graph(6, 0.5, rng);
    std::vector<Edge> edges = g.edges();
    std::shuffle(edges.begin(), edges.end(), rng);
    WeightedGraph h(g.vertices());
    for (const auto& e : edges) h.add_edge(e.b, e.a, e.chi);
    CHECK((build_state(g).amplitudes() - build_state(h).amplitudes()).norm() < 1e-12);
    PureState s = PureState::plus(6);
    for (const auto& e : edges) s = apply_phase_edge(s, e.a, e.b, e.chi);
    CHECK((s.amplitudes() - build_state(g).amplitudes()).norm() < 1e-12);
  }
}

TEST_CASE("apply_phase_edge") {
  const PureState s = PureState::plus(3);
  CHECK((apply_phase_edge(s, 0, 2, 0.0).amplitudes() - s.amplitudes()).norm() == 0.0);
  const PureState e11 = PureState::basis(2, 3);
  CHECK(std::abs(apply_phase_edge(e11, 0, 1, kPi).amplitudes()(3) + 1.0) < 1e-15);
  std::mt19937_64 rng(5);
  const PureState g = build_state(oracle::random_graph(4, 0.7, rng));
  const PureState back = apply_phase_edge(apply_phase_edge(g, 1, 3, 0.83), 1, 3, -0.83);
  CHECK((back.amplitudes() - g.amplitudes()).norm() < 1e-15);
  CHECK(throws_kind(ErrorKind::IndexClash, [&] { apply_phase_edge(s, 1, 1, 1.0); }));
  CHECK(throws_kind(ErrorKind::IndexOutOfRange, [&] { apply_phase_edge(s, 1, 3, 1.0); }));
}

TEST_CASE("local gates") {
  const PureState zero = PureState::basis(1, 0);
  CHECK(std::abs(apply_local(zero, LocalGate::pauli_x(0)).amplitudes()(1) - 1.0) < 1e-15);
  std::mt19937_64 rng(9);
  const PureState g = build_state(oracle::random_graph(3, 1.0, rng));
  const PureState r = apply_local(apply_local(g, LocalGate::z_rotation(1, 0.4)), LocalGate::z_rotation(1, -0.4));
  CHECK((r.amplitudes() - g.amplitudes()).norm() < 1e-15);
  CHECK((apply_local(g, LocalGate::identity(2)).amplitudes() - g.amplitudes()).norm() == 0.0);
  CHECK(std::abs(apply_local(g, LocalGate::phase(0, 1.2)).norm() - 1.0) < 1e-12);
  Matrix2 bad;
  bad << 1.0, 1.0, 0.0, 1.0;
  CHECK(throws_kind(ErrorKind::NonUnitaryGate, [&] { LocalGate(0, bad); }));
}

TEST_CASE("project_qubit basics") {
  const ProjectionResult r = project_qubit(PureState::plus(1), QubitProjection::zero(0));
  CHECK(r.probability == doctest::Approx(0.5).epsilon(1e-15));
  REQUIRE(r.state);
  CHECK(r.state->num_qubits() == 0);
  const ProjectionResult z = project_qubit(PureState::basis(1, 0), QubitProjection::one(0));
  CHECK(z.zero_outcome());
  CHECK(throws_kind(ErrorKind::NotNormalized, [&] { QubitProjection(0, 1.0, 1.0); }));
}

TEST_CASE("project_qubit agrees with the dense bra oracle") {
  std::mt19937_64 rng(21);
  std::uniform_real_distribution<Real> u(0.0, 1.0);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 5;
    const WeightedGraph g = oracle::random_graph(n, 0.6, rng);
    const Real t = u(rng) * kPi / 2;
    const Complex alpha = std::cos(t);
    const Complex beta = std::sin(t) * std::polar(1.0, 2 * kPi * u(rng));
    const int q = trial % n;
    const ProjectionResult r = project_qubit(build_state(g), QubitProjection(q, alpha, beta));
    const Vector ref = oracle::apply_bra(oracle::graph_state(g), q, n, alpha, beta);
    CHECK(std::abs(r.probability - ref.squaredNorm()) < 1e-13);
    REQUIRE(r.state);
    CHECK(oracle::overlap(r.state->amplitudes(), ref) > 1 - 1e-12);
  }
}

TEST_CASE("property: Z measurement deletes the vertex") {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 30; ++trial) {
    const int n = 2 + trial % 6;
    const WeightedGraph g = oracle::random_graph(n, 0.6, rng);
    const PureState s = build_state(g);
    for (int a = 0; a < n; ++a) {
      const WeightedGraph rest = g.without_vertex(a);
      const PureState target = build_state(rest);
      const ProjectionResult r0 = project_qubit(s, QubitProjection::zero(a));
      const ProjectionResult r1 = project_qubit(s, QubitProjection::one(a));
      CHECK(std::abs(r0.probability + r1.probability - 1.0) < 1e-12);
      REQUIRE(r0.state);
      REQUIRE(r1.state);
      CHECK(equal_up_to_prescribed_corrections(*r0.state, target, {}));
      std::vector<LocalGate> fix;
      for (auto [v, chi] : g.neighbors(a)) fix.push_back(LocalGate::phase(v > a ? v - 1 : v, chi));
      CHECK(equal_up_to_prescribed_corrections(*r1.state, target, fix));
    }
  }
}

TEST_CASE("Z measurement of the middle of a weighted 3-chain") {
  const WeightedGraph g = oracle::chain({"b1", "a", "b2"}, {0.7, -2.1});
  const PureState s = build_state(g);
  WeightedGraph pair({"b1", "b2"});
  const PureState target = build_state(pair);
  const ProjectionResult r1 = project_qubit(s, QubitProjection::one(1));
  REQUIRE(r1.state);
  const LocalGate fix[] = {LocalGate::phase(0, 0.7), LocalGate::phase(1, -2.1)};
  CHECK(equal_up_to_prescribed_corrections(*r1.state, target, fix));
  CHECK_FALSE(equal_up_to_prescribed_corrections(*r1.state, target, {}));
}

TEST_CASE("Case-1 projection probability on a 3-chain") {
  for (Real chi : {0.3, kPi / 2, 2.0, kPi}) {
    const WeightedGraph g = oracle::chain({"b1", "a", "b2"}, {chi, chi});
    const Complex a = 1.0 / std::sqrt(2.0);
    const Complex b = -a * std::polar(1.0, chi);
    const ProjectionResult r = project_qubit(build_state(g), QubitProjection(1, a, b));
    CHECK(std::abs(r.probability - (1 - std::cos(chi)) / 4) < 1e-14);
  }
}

TEST_CASE("fidelity") {
  std::mt19937_64 rng(17);
  const PureState s = build_state(oracle::random_graph(4, 0.5, rng));
  CHECK(fidelity_up_to_global_phase(s, s) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(fidelity_up_to_global_phase(PureState::basis(1, 0), PureState::basis(1, 1)) == 0.0);
  const PureState rotated(4, s.amplitudes() * std::polar(1.0, 0.9));
  CHECK(fidelity_up_to_global_phase(s, rotated) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(throws_kind(ErrorKind::ShapeMismatch, [&] { fidelity_up_to_global_phase(s, PureState::plus(2)); }));
}

TEST_CASE("register utilities") {
  std::mt19937_64 rng(19);
  const PureState s = build_state(oracle::random_graph(4, 0.8, rng));
  const PureState a = build_state(oracle::random_graph(2, 1.0, rng));
  const PureState k = kron(a, s);
  CHECK(k.num_qubits() == 6);
  const Matrix rho = reduced_density(k, 2);
  const Matrix expect = a.amplitudes() * a.amplitudes().adjoint();
  CHECK((rho - expect).norm() < 1e-14);
  const PureState d = duplicate_qubit(s, 1, 2);
  for (std::size_t i = 0; i < d.dimension(); ++i) {
    if (bit_of(i, 1, 5) != bit_of(i, 2, 5)) CHECK(std::abs(d.amplitudes()(static_cast<Eigen::Index>(i))) == 0.0);
  }
  const PureState back = slice_qubit(d, 2, 0);
  CHECK(back.norm() == doctest::Approx(std::sqrt(0.5)));
}
