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
 * Protocol drivers: Type-I and Type-II fusion on weighted chains, logical
 * qubit creation and weighted pairs from 3-qubit chains.
 *
 * Every driver returns the full outcome distribution. Each post-state is the
 * simulated register after the listed corrections, paired with the graph it
 * is claimed to be; `fidelity` compares the two.
 */
#pragma once

#include <array>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wgs/fock_optics.hpp"
#include "wgs/graph_state.hpp"
#include "wgs/random.hpp"

namespace wgs {

/// A register whose qubits are the graph's vertices, in order. For a logical
/// pair (p, s) the primary p carries the logical vertex's edges and the
/// secondary s has none; the state is then sum_k |k>_p |k>_s |phi_k>.
struct ChainState {
  WeightedGraph graph;
  PureState state;
  std::vector<std::pair<int, int>> logical_pairs;
};

/// True iff the graph is acyclic with every degree <= 2.
bool is_path_forest(const WeightedGraph& graph);

/// Builds the state of a path-shaped graph. Throws InvalidGraph otherwise.
ChainState make_chain(const WeightedGraph& graph);

/// Duplicates qubit `a` into a new last qubit labelled `label`.
ChainState add_logical_pair(const ChainState& chain, int a, const std::string& label);

/// Ideal state of a graph with logical pairs.
PureState canonical_state(const WeightedGraph& graph, const std::vector<std::pair<int, int>>& logical_pairs);

/// Largest amplitude with differing bits on p and s.
Real logical_pair_violation(const PureState& state, int p, int s);

/// Throws InvalidGraph unless the graph is a forest, every secondary is
/// isolated, pairs are disjoint and the state has support on |00>, |11> only
/// for each pair (within 1e-12).
void validate_chain(const ChainState& chain);

struct Correction {
  std::string gate;  // "Z", "X", "phase", "z_rotation"
  int qubit;
  std::string vertex;
  Real angle;

  LocalGate as_gate() const;
};

struct ProtocolOutcome {
  std::string label;
  Real probability;
  /// Empty for a zero-probability branch.
  std::optional<ChainState> post_state;
  std::vector<Correction> corrections;
  bool is_good_failure = false;
  /// |<post_state.state | canonical_state(post_state.graph)>|.
  Real fidelity = 0.0;
};

inline constexpr Real kPostStateFidelity = 1.0 - 1e-10;

/// Outcomes: success_plus, success_minus (Z on c applied), failure_two_photon
/// (both photons at c), failure_zero_photon. The new qubit c sits between the
/// remaining left and right qubits and is labelled "<a>~<b>".
std::vector<ProtocolOutcome> fuse_type_i(const ChainState& left, int end_a, const ChainState& right, int end_b);

/// X-type measurement of an interior vertex. Case 1 (equal weights) projects
/// onto <0| - e^{i chi}<1|, Case 2 (weights summing to 0 mod 2 pi) onto
/// <0| - <1|; at chi = pi both apply. Failure splits into the four Z outcomes
/// of the neighbors. Throws WeightsNotEligible otherwise.
std::vector<ProtocolOutcome> create_logical_qubit(const ChainState& chain, int a);

/// Left needs a registered logical pair (a, e); a is measured, e inherits b's
/// neighbors. Throws NoLogicalPair.
std::vector<ProtocolOutcome> fuse_type_ii(const ChainState& left, int a, const ChainState& right, int b);

/// Generalized fusion through an arbitrary network.
std::vector<FusionOutcome> fuse_generalized(const ChainState& left, int a, const ChainState& right, int b,
                                            const ModeUnitary& u);

struct GhzPair {
  Real chi1;
  Real chi2;
  QubitProjection measurement;  // on the middle of b1 - a - b2
  QubitProjection complement;
  Real phi;                     // closed form, in [0, pi]
  std::array<Real, 2> probabilities;
  std::array<Real, 2> outcome_phi;  // from the simulated states
  /// Per outcome, gates on b1 and on b2 mapping the state onto the pair of weight phi.
  std::array<std::array<Matrix2, 2>, 2> corrections;
  std::array<Real, 2> fidelities;
};

/// |A| = mag_a, arg B - arg A = (chi1 + chi2 + pi) / 2. Throws NotAchievable
/// if a simulated outcome misses the closed-form weight.
GhzPair ghz_pair_projection(Real chi1, Real chi2, Real mag_a);

/// Largest |phi| reachable from weights chi1, chi2.
Real ghz_weight_limit(Real chi1, Real chi2);

/// Inverts the weight formula for |A|. Throws NotAchievable outside the range.
GhzPair ghz_pair_for_target(Real chi1, Real chi2, Real phi_target);

/// Draws an outcome index with the listed probabilities.
std::size_t sample_outcome(const std::vector<ProtocolOutcome>& outcomes, Rng& rng);

/// JSON array: label, probability, graph, corrections, good-failure flag, fidelity.
std::string dump_outcomes(const std::vector<ProtocolOutcome>& outcomes);

}  // namespace wgs
