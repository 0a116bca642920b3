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

#include "wgs/graph_state.hpp"

#include <algorithm>
#include <set>

namespace wgs {

namespace {

constexpr Real kZeroWeight = 1e-14;

std::size_t dim_of(int n) { return std::size_t{1} << n; }

void check_qubit(int q, int n, const char* what) {
  if (q < 0 || q >= n) {
    throw Error(ErrorKind::IndexOutOfRange,
                std::string(what) + " qubit " + std::to_string(q) + " not in register of " +
                    std::to_string(n));
  }
}

// Splits an index around `qubit`: returns the index of the (n-1)-qubit
// register obtained by deleting that bit.
std::size_t remove_bit(std::size_t index, int qubit, int n) {
  const int shift = n - 1 - qubit;
  const std::size_t low = index & ((std::size_t{1} << shift) - 1);
  const std::size_t high = index >> (shift + 1);
  return (high << shift) | low;
}

// Inverse of remove_bit: inserts `bit` at `qubit` of an n-qubit result.
std::size_t insert_bit(std::size_t index, int qubit, int n, int bit) {
  const int shift = n - 1 - qubit;
  const std::size_t low = index & ((std::size_t{1} << shift) - 1);
  const std::size_t high = index >> shift;
  return (high << (shift + 1)) | (static_cast<std::size_t>(bit) << shift) | low;
}

void require_normalized(const PureState& s, const char* where) {
  if (std::abs(s.norm() - 1.0) > tol::kNorm) {
    throw Error(ErrorKind::NotNormalized, std::string(where) + ": input state not normalized");
  }
}

}  // namespace

// ---------------------------------------------------------------- graph

WeightedGraph::WeightedGraph(std::vector<std::string> vertex_ids) {
  for (auto& id : vertex_ids) add_vertex(std::move(id));
}

int WeightedGraph::add_vertex(std::string id) {
  if (std::find(vertices_.begin(), vertices_.end(), id) != vertices_.end()) {
    throw Error(ErrorKind::InvalidGraph, "duplicate vertex id '" + id + "'");
  }
  vertices_.push_back(std::move(id));
  return vertex_count() - 1;
}

void WeightedGraph::check_vertex(int v) const {
  if (v < 0 || v >= vertex_count()) {
    throw Error(ErrorKind::InvalidGraph, "edge endpoint " + std::to_string(v) + " does not exist");
  }
}

void WeightedGraph::add_edge(int a, int b, Real chi) {
  check_vertex(a);
  check_vertex(b);
  if (a == b) throw Error(ErrorKind::InvalidGraph, "self-loop on vertex " + label(a));
  if (a > b) std::swap(a, b);
  if (weight(a, b)) {
    throw Error(ErrorKind::InvalidGraph, "duplicate edge " + label(a) + "-" + label(b));
  }
  const Real w = normalize_angle(chi);
  if (std::abs(w) < kZeroWeight) {
    throw Error(ErrorKind::InvalidGraph, "zero weight on edge " + label(a) + "-" + label(b));
  }
  edges_.push_back({a, b, w});
}

void WeightedGraph::add_edge(const std::string& a, const std::string& b, Real chi) {
  add_edge(index_of(a), index_of(b), chi);
}

int WeightedGraph::index_of(const std::string& id) const {
  auto it = std::find(vertices_.begin(), vertices_.end(), id);
  if (it == vertices_.end()) throw Error(ErrorKind::InvalidGraph, "unknown vertex '" + id + "'");
  return static_cast<int>(it - vertices_.begin());
}

std::optional<Real> WeightedGraph::weight(int a, int b) const {
  if (a > b) std::swap(a, b);
  for (const auto& e : edges_) {
    if (e.a == a && e.b == b) return e.chi;
  }
  return std::nullopt;
}

std::vector<std::pair<int, Real>> WeightedGraph::neighbors(int v) const {
  std::vector<std::pair<int, Real>> out;
  for (const auto& e : edges_) {
    if (e.a == v) out.emplace_back(e.b, e.chi);
    if (e.b == v) out.emplace_back(e.a, e.chi);
  }
  std::sort(out.begin(), out.end());
  return out;
}

int WeightedGraph::degree(int v) const { return static_cast<int>(neighbors(v).size()); }

WeightedGraph WeightedGraph::without_vertex(int v) const {
  check_vertex(v);
  WeightedGraph g;
  for (int i = 0; i < vertex_count(); ++i) {
    if (i != v) g.add_vertex(vertices_[static_cast<std::size_t>(i)]);
  }
  auto shift = [v](int i) { return i > v ? i - 1 : i; };
  for (const auto& e : edges_) {
    if (e.a != v && e.b != v) g.add_edge(shift(e.a), shift(e.b), e.chi);
  }
  return g;
}

WeightedGraph WeightedGraph::disjoint_union(const WeightedGraph& other) const {
  WeightedGraph g = *this;
  const int offset = vertex_count();
  for (const auto& id : other.vertices()) g.add_vertex(id);
  for (const auto& e : other.edges()) g.add_edge(e.a + offset, e.b + offset, e.chi);
  return g;
}

// ---------------------------------------------------------------- state

PureState::PureState() : num_qubits_(0), amplitudes_(Vector::Ones(1)), tag_(NormTag::normalized) {}

PureState::PureState(int num_qubits, Vector amplitudes, NormTag tag)
    : num_qubits_(num_qubits), amplitudes_(std::move(amplitudes)), tag_(tag) {
  if (num_qubits < 0 || num_qubits > 30 ||
      static_cast<std::size_t>(amplitudes_.size()) != dim_of(num_qubits)) {
    throw Error(ErrorKind::ShapeMismatch, "amplitude table size does not match 2^" +
                                              std::to_string(num_qubits));
  }
  if (tag_ == NormTag::normalized && std::abs(amplitudes_.norm() - 1.0) > tol::kNorm) {
    throw Error(ErrorKind::NotNormalized, "squared norm differs from 1");
  }
}

PureState PureState::basis(int num_qubits, std::size_t index) {
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_of(num_qubits)));
  v(static_cast<Eigen::Index>(index)) = 1.0;
  return {num_qubits, std::move(v)};
}

PureState PureState::plus(int num_qubits) {
  const auto d = static_cast<Eigen::Index>(dim_of(num_qubits));
  return {num_qubits, Vector::Constant(d, 1.0 / std::sqrt(static_cast<Real>(d)))};
}

PureState PureState::normalized() const {
  const Real n = norm();
  if (n < std::sqrt(tol::kZeroOutcome)) {
    throw Error(ErrorKind::ZeroOutcome, "cannot normalize a vanishing state");
  }
  return {num_qubits_, amplitudes_ / n};
}

// ---------------------------------------------------------------- gates

LocalGate::LocalGate(int target, const Matrix2& matrix) : target_(target), matrix_(matrix) {
  if ((matrix * matrix.adjoint() - Matrix2::Identity()).cwiseAbs().maxCoeff() > tol::kUnitaryGate) {
    throw Error(ErrorKind::NonUnitaryGate, "gate on qubit " + std::to_string(target));
  }
}

LocalGate LocalGate::identity(int target) { return {target, Matrix2::Identity()}; }

LocalGate LocalGate::pauli_x(int target) {
  Matrix2 m;
  m << 0.0, 1.0, 1.0, 0.0;
  return {target, m};
}

LocalGate LocalGate::pauli_z(int target) {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, -1.0;
  return {target, m};
}

LocalGate LocalGate::phase(int target, Real theta) {
  Matrix2 m;
  m << 1.0, 0.0, 0.0, wgs::phase(theta);
  return {target, m};
}

LocalGate LocalGate::z_rotation(int target, Real theta) {
  Matrix2 m;
  m << wgs::phase(theta), 0.0, 0.0, wgs::phase(-theta);
  return {target, m};
}

QubitProjection::QubitProjection(int target, Complex alpha, Complex beta)
    : target_(target), alpha_(alpha), beta_(beta) {
  if (std::abs(std::norm(alpha) + std::norm(beta) - 1.0) > tol::kNorm) {
    throw Error(ErrorKind::NotNormalized, "projection coefficients must have unit norm");
  }
}

QubitProjection QubitProjection::complement() const {
  return {target_, std::conj(beta_), -std::conj(alpha_)};
}

TwoQubitProjection TwoQubitProjection::normalized() const {
  const Real n = std::sqrt(squared_norm());
  if (n == 0.0) throw Error(ErrorKind::InvalidInput, "all projection coefficients are zero");
  return {A / n, B / n, C / n, D / n};
}

Matrix2 TwoQubitProjection::as_matrix() const {
  Matrix2 m;
  m << A, B, C, D;
  return m;
}

// ---------------------------------------------------------------- construction

PureState build_state(const WeightedGraph& graph, int qubit_cap) {
  const int n = graph.vertex_count();
  if (n > qubit_cap) {
    throw Error(ErrorKind::CapExceeded, std::to_string(n) + " qubits exceeds cap " +
                                            std::to_string(qubit_cap));
  }
  const std::size_t d = dim_of(n);
  const Real amp = 1.0 / std::sqrt(static_cast<Real>(d));
  Vector v(static_cast<Eigen::Index>(d));
  for (std::size_t idx = 0; idx < d; ++idx) {
    Real total = 0.0;
    for (const auto& e : graph.edges()) {
      if (bit_of(idx, e.a, n) && bit_of(idx, e.b, n)) total += e.chi;
    }
    v(static_cast<Eigen::Index>(idx)) = amp * phase(-total);
  }
  return {n, std::move(v)};
}

PureState attach_vertex(const PureState& state, int new_qubit,
                        std::span<const NeighborWeight> neighbor_weights) {
  require_normalized(state, "attach_vertex");
  const int n = state.num_qubits();
  if (new_qubit < 0 || new_qubit > n) {
    throw Error(ErrorKind::IndexOutOfRange, "insert position " + std::to_string(new_qubit));
  }
  std::set<int> seen;
  for (const auto& nw : neighbor_weights) {
    check_qubit(nw.qubit, n, "neighbor");
    if (!seen.insert(nw.qubit).second) {
      throw Error(ErrorKind::IndexClash, "neighbor " + std::to_string(nw.qubit) + " repeated");
    }
  }
  const std::size_t d = dim_of(n);
  Vector out(static_cast<Eigen::Index>(2 * d));
  const Real s = 1.0 / std::sqrt(2.0);
  for (std::size_t idx = 0; idx < d; ++idx) {
    Real total = 0.0;
    for (const auto& nw : neighbor_weights) {
      if (bit_of(idx, nw.qubit, n)) total += nw.chi;
    }
    const Complex a = state.amplitudes()(static_cast<Eigen::Index>(idx));
    out(static_cast<Eigen::Index>(insert_bit(idx, new_qubit, n + 1, 0))) = s * a;
    out(static_cast<Eigen::Index>(insert_bit(idx, new_qubit, n + 1, 1))) = s * a * phase(-total);
  }
  return {n + 1, std::move(out)};
}

// ---------------------------------------------------------------- evolution

PureState apply_phase_edge(const PureState& state, int a, int b, Real chi) {
  const int n = state.num_qubits();
  check_qubit(a, n, "edge");
  check_qubit(b, n, "edge");
  if (a == b) throw Error(ErrorKind::IndexClash, "phase edge needs two distinct qubits");
  Vector v = state.amplitudes();
  const Complex f = phase(-chi);
  for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
    if (bit_of(idx, a, n) && bit_of(idx, b, n)) v(static_cast<Eigen::Index>(idx)) *= f;
  }
  return {n, std::move(v), state.norm_tag()};
}

PureState apply_local(const PureState& state, const LocalGate& gate) {
  const int n = state.num_qubits();
  check_qubit(gate.target(), n, "gate");
  const std::size_t stride = std::size_t{1} << (n - 1 - gate.target());
  const Matrix2& m = gate.matrix();
  Vector v = state.amplitudes();
  for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
    if (idx & stride) continue;
    const auto i0 = static_cast<Eigen::Index>(idx);
    const auto i1 = static_cast<Eigen::Index>(idx | stride);
    const Complex x0 = v(i0);
    const Complex x1 = v(i1);
    v(i0) = m(0, 0) * x0 + m(0, 1) * x1;
    v(i1) = m(1, 0) * x0 + m(1, 1) * x1;
  }
  return {n, std::move(v), state.norm_tag()};
}

PureState apply_all(const PureState& state, std::span<const LocalGate> gates) {
  PureState s = state;
  for (const auto& g : gates) s = apply_local(s, g);
  return s;
}

// ---------------------------------------------------------------- measurement

ProjectionResult project_qubit(const PureState& state, const QubitProjection& proj) {
  require_normalized(state, "project_qubit");
  const int n = state.num_qubits();
  check_qubit(proj.target(), n, "projection");
  PureState s0 = slice_qubit(state, proj.target(), 0);
  PureState s1 = slice_qubit(state, proj.target(), 1);
  Vector v = proj.alpha() * s0.amplitudes() + proj.beta() * s1.amplitudes();
  const Real p = v.squaredNorm();
  if (p < tol::kZeroOutcome) return {p, std::nullopt};
  return {p, PureState(n - 1, v / std::sqrt(p))};
}

ProjectionResult project_pair(const PureState& state, int qubit_a, int qubit_b,
                              const TwoQubitProjection& proj) {
  require_normalized(state, "project_pair");
  const int n = state.num_qubits();
  check_qubit(qubit_a, n, "projection");
  check_qubit(qubit_b, n, "projection");
  if (qubit_a == qubit_b) throw Error(ErrorKind::IndexClash, "pair projection on one qubit");
  const TwoQubitProjection bra = proj.normalized();
  const Complex c[2][2] = {{bra.A, bra.B}, {bra.C, bra.D}};
  const int lo = std::min(qubit_a, qubit_b);
  const int hi = std::max(qubit_a, qubit_b);
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_of(n - 2)));
  for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
    const int ba = bit_of(idx, qubit_a, n);
    const int bb = bit_of(idx, qubit_b, n);
    const std::size_t rest = remove_bit(remove_bit(idx, hi, n), lo, n - 1);
    v(static_cast<Eigen::Index>(rest)) += c[ba][bb] * state.amplitudes()(static_cast<Eigen::Index>(idx));
  }
  const Real p = v.squaredNorm();
  if (p < tol::kZeroOutcome) return {p, std::nullopt};
  return {p, PureState(n - 2, v / std::sqrt(p))};
}

// ---------------------------------------------------------------- comparison

Real fidelity_up_to_global_phase(const PureState& s1, const PureState& s2) {
  if (s1.num_qubits() != s2.num_qubits()) {
    throw Error(ErrorKind::ShapeMismatch, "fidelity between registers of different size");
  }
  const Real n1 = s1.norm();
  const Real n2 = s2.norm();
  if (n1 == 0.0 || n2 == 0.0) return 0.0;
  return std::min(1.0, std::abs(s1.amplitudes().dot(s2.amplitudes())) / (n1 * n2));
}

bool equal_up_to_prescribed_corrections(const PureState& candidate, const PureState& target,
                                        std::span<const LocalGate> corrections) {
  if (candidate.num_qubits() != target.num_qubits()) return false;
  const PureState c = apply_all(candidate, corrections);
  return fidelity_up_to_global_phase(c, target) >= 1.0 - tol::kFidelity;
}

// ---------------------------------------------------------------- register utilities

PureState slice_qubit(const PureState& state, int qubit, int bit) {
  const int n = state.num_qubits();
  check_qubit(qubit, n, "slice");
  const std::size_t d = dim_of(n - 1);
  Vector v(static_cast<Eigen::Index>(d));
  for (std::size_t idx = 0; idx < d; ++idx) {
    v(static_cast<Eigen::Index>(idx)) =
        state.amplitudes()(static_cast<Eigen::Index>(insert_bit(idx, qubit, n, bit)));
  }
  return {n - 1, std::move(v), NormTag::unnormalized};
}

PureState kron(const PureState& left, const PureState& right) {
  const int n = left.num_qubits() + right.num_qubits();
  Vector v(static_cast<Eigen::Index>(dim_of(n)));
  const Eigen::Index dr = right.amplitudes().size();
  for (Eigen::Index i = 0; i < left.amplitudes().size(); ++i) {
    v.segment(i * dr, dr) = left.amplitudes()(i) * right.amplitudes();
  }
  const bool normed =
      left.norm_tag() == NormTag::normalized && right.norm_tag() == NormTag::normalized;
  return {n, std::move(v), normed ? NormTag::normalized : NormTag::unnormalized};
}

Matrix reduced_density(const PureState& state, int left_qubits) {
  const int n = state.num_qubits();
  if (left_qubits < 0 || left_qubits > n) {
    throw Error(ErrorKind::IndexOutOfRange, "bipartition size " + std::to_string(left_qubits));
  }
  const auto dl = static_cast<Eigen::Index>(dim_of(left_qubits));
  const auto dr = static_cast<Eigen::Index>(dim_of(n - left_qubits));
  // Row-major reshape: row = left index, column = right index.
  Matrix psi(dl, dr);
  for (Eigen::Index i = 0; i < dl; ++i) psi.row(i) = state.amplitudes().segment(i * dr, dr).transpose();
  return psi * psi.adjoint();
}

PureState duplicate_qubit(const PureState& state, int qubit, int position) {
  const int n = state.num_qubits();
  check_qubit(qubit, n, "duplicate");
  if (position < 0 || position > n) {
    throw Error(ErrorKind::IndexOutOfRange, "insert position " + std::to_string(position));
  }
  Vector v = Vector::Zero(static_cast<Eigen::Index>(dim_of(n + 1)));
  for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
    const int b = bit_of(idx, qubit, n);
    v(static_cast<Eigen::Index>(insert_bit(idx, position, n + 1, b))) =
        state.amplitudes()(static_cast<Eigen::Index>(idx));
  }
  return {n + 1, std::move(v), state.norm_tag()};
}

}  // namespace wgs
