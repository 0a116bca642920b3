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
 * Weighted graphs, dense pure states and the gate/projection primitives that
 * every fusion protocol is built from.
 *
 * Bit ordering: in an n-qubit register qubit 0 is the most significant bit of
 * the amplitude index, i.e. the basis string |q0 q1 ... q(n-1)> sits at index
 * sum_k q_k 2^(n-1-k).
 */
#pragma once

#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "wgs/common.hpp"

namespace wgs {

inline constexpr int kDefaultQubitCap = 20;

struct Edge {
  int a;  // a < b
  int b;
  Real chi;
};

/// Vertices with phase-weighted edges. Weights live in (-pi, pi] and are
/// never zero; pi is the ordinary graph-state edge.
class WeightedGraph {
 public:
  WeightedGraph() = default;
  explicit WeightedGraph(std::vector<std::string> vertex_ids);

  int add_vertex(std::string id);
  /// Adds (or rejects) the edge {a, b}; chi is normalized into (-pi, pi].
  void add_edge(int a, int b, Real chi);
  void add_edge(const std::string& a, const std::string& b, Real chi);

  int vertex_count() const { return static_cast<int>(vertices_.size()); }
  const std::vector<std::string>& vertices() const { return vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::string& label(int v) const { return vertices_.at(static_cast<std::size_t>(v)); }

  int index_of(const std::string& id) const;
  std::optional<Real> weight(int a, int b) const;
  std::vector<std::pair<int, Real>> neighbors(int v) const;
  int degree(int v) const;

  /// Copy with vertex v removed (and its edges); later indices shift down.
  WeightedGraph without_vertex(int v) const;
  /// Disjoint union; the other graph's vertices are appended.
  WeightedGraph disjoint_union(const WeightedGraph& other) const;

 private:
  void check_vertex(int v) const;

  std::vector<std::string> vertices_;
  std::vector<Edge> edges_;
};

enum class NormTag { normalized, unnormalized };

/// Dense amplitude table over an n-qubit register.
class PureState {
 public:
  /// Zero-qubit register holding the scalar 1.
  PureState();
  PureState(int num_qubits, Vector amplitudes, NormTag tag = NormTag::normalized);

  static PureState basis(int num_qubits, std::size_t index);
  static PureState plus(int num_qubits);

  int num_qubits() const { return num_qubits_; }
  std::size_t dimension() const { return static_cast<std::size_t>(amplitudes_.size()); }
  const Vector& amplitudes() const { return amplitudes_; }
  NormTag norm_tag() const { return tag_; }
  Real norm() const { return amplitudes_.norm(); }

  PureState normalized() const;

 private:
  int num_qubits_;
  Vector amplitudes_;
  NormTag tag_;
};

inline int bit_of(std::size_t index, int qubit, int num_qubits) {
  return static_cast<int>((index >> (num_qubits - 1 - qubit)) & 1U);
}

/// Single-qubit unitary acting on `target`.
class LocalGate {
 public:
  LocalGate(int target, const Matrix2& matrix);

  static LocalGate identity(int target);
  static LocalGate pauli_x(int target);
  static LocalGate pauli_z(int target);
  /// diag(1, e^{i theta}) == e^{i theta |1><1|}
  static LocalGate phase(int target, Real theta);
  /// e^{i theta Z} == diag(e^{i theta}, e^{-i theta})
  static LocalGate z_rotation(int target, Real theta);

  int target() const { return target_; }
  const Matrix2& matrix() const { return matrix_; }

 private:
  int target_;
  Matrix2 matrix_;
};

/// Bra alpha<0| + beta<1| on one qubit, |alpha|^2 + |beta|^2 = 1.
class QubitProjection {
 public:
  QubitProjection(int target, Complex alpha, Complex beta);

  static QubitProjection zero(int target) { return {target, 1.0, 0.0}; }
  static QubitProjection one(int target) { return {target, 0.0, 1.0}; }

  int target() const { return target_; }
  Complex alpha() const { return alpha_; }
  Complex beta() const { return beta_; }
  /// The orthogonal bra conj(beta)<0| - conj(alpha)<1|.
  QubitProjection complement() const;

 private:
  int target_;
  Complex alpha_;
  Complex beta_;
};

/// Bra A<00| + B<01| + C<10| + D<11| on a qubit pair, stored unnormalized.
struct TwoQubitProjection {
  Complex A;
  Complex B;
  Complex C;
  Complex D;

  Real squared_norm() const { return std::norm(A) + std::norm(B) + std::norm(C) + std::norm(D); }
  TwoQubitProjection normalized() const;
  Matrix2 as_matrix() const;  // [[A, B], [C, D]]
};

struct ProjectionResult {
  Real probability;
  /// Renormalized post-measurement state; empty for a zero outcome.
  std::optional<PureState> state;

  bool zero_outcome() const { return !state.has_value(); }
};

struct NeighborWeight {
  int qubit;
  Real chi;
};

PureState build_state(const WeightedGraph& graph, int qubit_cap = kDefaultQubitCap);

/// Inserts a fresh qubit at register position `new_qubit` (0..n) coupled to
/// existing qubits (indices in the old register) with the given weights.
PureState attach_vertex(const PureState& state, int new_qubit,
                        std::span<const NeighborWeight> neighbor_weights);

PureState apply_phase_edge(const PureState& state, int a, int b, Real chi);
PureState apply_local(const PureState& state, const LocalGate& gate);
PureState apply_all(const PureState& state, std::span<const LocalGate> gates);

ProjectionResult project_qubit(const PureState& state, const QubitProjection& proj);
ProjectionResult project_pair(const PureState& state, int qubit_a, int qubit_b,
                              const TwoQubitProjection& proj);

Real fidelity_up_to_global_phase(const PureState& s1, const PureState& s2);
bool equal_up_to_prescribed_corrections(const PureState& candidate, const PureState& target,
                                        std::span<const LocalGate> corrections);

// Register utilities.

/// Unnormalized amplitudes with `qubit` fixed to `bit` (qubit removed).
PureState slice_qubit(const PureState& state, int qubit, int bit);
PureState kron(const PureState& left, const PureState& right);
/// Reduced density matrix of the first `left_qubits` qubits.
Matrix reduced_density(const PureState& state, int left_qubits);
/// Duplicates `qubit` into a perfectly correlated pair; the copy is inserted
/// at register position `position` of the result.
PureState duplicate_qubit(const PureState& state, int qubit, int position);

}  // namespace wgs
