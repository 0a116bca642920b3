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

#include "wgs/fusion_protocols.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>

#include <Eigen/SVD>
#include <json.hpp>

#include "wgs/graph_io.hpp"
#include "wgs/projection_analysis.hpp"

namespace wgs {

namespace {

constexpr Real kEligible = 1e-9;      // weight comparisons, radians
constexpr Real kLogicalLeak = 1e-12;  // mixed-bit amplitudes of a logical pair
constexpr Real kRankOne = 1e-9;

// Mutable graph description used while assembling post-measurement graphs.
struct Draft {
  std::vector<std::string> labels;
  std::vector<Edge> edges;
  std::vector<std::pair<int, int>> pairs;

  static Draft of(const ChainState& c) {
    return {c.graph.vertices(), c.graph.edges(), c.logical_pairs};
  }

  int size() const { return static_cast<int>(labels.size()); }

  std::vector<std::pair<int, Real>> neighbors(int v) const {
    std::vector<std::pair<int, Real>> out;
    for (const auto& e : edges) {
      if (e.a == v) out.emplace_back(e.b, e.chi);
      if (e.b == v) out.emplace_back(e.a, e.chi);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  void drop_edges(int v) {
    std::erase_if(edges, [v](const Edge& e) { return e.a == v || e.b == v; });
  }

  void add(int a, int b, Real chi) { edges.push_back({std::min(a, b), std::max(a, b), chi}); }

  // Removes v; indices above it shift down.
  void remove(int v) {
    drop_edges(v);
    labels.erase(labels.begin() + v);
    auto shift = [v](int i) { return i > v ? i - 1 : i; };
    for (auto& e : edges) {
      e.a = shift(e.a);
      e.b = shift(e.b);
    }
    std::erase_if(pairs, [v](const auto& p) { return p.first == v || p.second == v; });
    for (auto& p : pairs) p = {shift(p.first), shift(p.second)};
  }

  void append(const Draft& other) {
    const int off = size();
    labels.insert(labels.end(), other.labels.begin(), other.labels.end());
    for (const auto& e : other.edges) edges.push_back({e.a + off, e.b + off, e.chi});
    for (const auto& p : other.pairs) pairs.emplace_back(p.first + off, p.second + off);
  }

  WeightedGraph build() const {
    WeightedGraph g(labels);
    for (const auto& e : edges) g.add_edge(e.a, e.b, e.chi);
    return g;
  }
};

bool in_pair(const std::vector<std::pair<int, int>>& pairs, int v) {
  return std::any_of(pairs.begin(), pairs.end(), [v](const auto& p) { return p.first == v || p.second == v; });
}

Correction make_correction(const Draft& d, const std::string& gate, int q, Real angle = 0.0) {
  return {gate, q, d.labels[static_cast<std::size_t>(q)], angle};
}

// What remains of a chain after vertex v is projected onto alpha<0| + beta<1|.
struct Residual {
  Draft draft;
  std::vector<Correction> corrections;
  bool valid;
  std::string kind;  // "case1", "case2", ... for logical creation
};

Residual x_residual(const ChainState& chain, int v, Complex alpha, Complex beta) {
  const Draft full = Draft::of(chain);
  const auto nb = full.neighbors(v);
  Residual r{full, {}, false, "none"};
  r.draft.remove(v);
  auto after = [v](int i) { return i > v ? i - 1 : i; };

  if (nb.empty()) {
    r.valid = true;
    return r;
  }
  if (nb.size() == 1) {
    // Leaves diag(alpha + beta, alpha + beta e^{-i chi}) on the neighbor.
    const Complex d0 = alpha + beta;
    const Complex d1 = alpha + beta * phase(-nb[0].second);
    const Real scale = std::max(std::abs(d0), std::abs(d1));
    if (std::abs(std::abs(d0) - std::abs(d1)) <= kRankOne * scale) {
      r.valid = true;
      const Real theta = normalize_angle(std::arg(d0) - std::arg(d1));
      if (std::abs(theta) > tol::kWeight) r.corrections.push_back(make_correction(r.draft, "phase", after(nb[0].first), theta));
    }
    return r;
  }
  if (nb.size() != 2 || in_pair(chain.logical_pairs, nb[0].first) || in_pair(chain.logical_pairs, nb[1].first)) {
    return r;
  }

  const int b1 = after(nb[0].first), b2 = after(nb[1].first);
  const Real chi1 = nb[0].second, chi2 = nb[1].second;
  // Logical vertex: b1 takes over b2's outer edge; b2 becomes the secondary.
  std::optional<std::pair<int, Real>> c1, c2;
  for (const auto& [w, chi] : r.draft.neighbors(b1)) c1 = std::make_pair(w, chi);
  for (const auto& [w, chi] : r.draft.neighbors(b2)) c2 = std::make_pair(w, chi);
  r.draft.drop_edges(b2);
  if (c2) r.draft.add(b1, c2->first, c2->second);
  r.draft.pairs.emplace_back(b1, b2);

  if (std::abs(alpha) < tol::kNorm) return r;
  const Complex ratio = beta / alpha;
  const bool case1 = angle_distance(chi1, chi2) < kEligible && std::abs(ratio + phase(chi1)) < kEligible;
  const bool case2 = angle_distance(chi1 + chi2, 0.0) < kEligible && std::abs(ratio + 1.0) < kEligible;
  if (case1) {
    r.valid = true;
    r.kind = "case1";
    r.corrections.push_back(make_correction(r.draft, "z_rotation", b1, (kPi - chi1) / 2));
  } else if (case2) {
    r.valid = true;
    r.kind = "case2";
    r.corrections.push_back(make_correction(r.draft, "X", b1));
    if (c1) {
      r.corrections.push_back(make_correction(r.draft, "phase", c1->first, c1->second));
      r.draft.drop_edges(b1);
      r.draft.add(b1, c1->first, -c1->second);
      if (c2) r.draft.add(b1, c2->first, c2->second);
    }
    r.corrections.push_back(make_correction(r.draft, "z_rotation", b1, (kPi - chi2) / 2));
  }
  return r;
}

// Applies the corrections and wraps the result with its claimed graph.
ProtocolOutcome finish(std::string label, const ProjectionResult& pr, const Draft& draft,
                       std::vector<Correction> corrections) {
  ProtocolOutcome out;
  out.label = std::move(label);
  out.probability = pr.probability;
  out.corrections = std::move(corrections);
  if (!pr.state) return out;
  std::vector<LocalGate> gates;
  for (const auto& c : out.corrections) gates.push_back(c.as_gate());
  ChainState post{draft.build(), apply_all(*pr.state, gates), draft.pairs};
  out.fidelity = fidelity_up_to_global_phase(post.state, canonical_state(post.graph, post.logical_pairs));
  out.post_state = std::move(post);
  return out;
}

void require_vertex(const ChainState& c, int v, const char* what) {
  if (v < 0 || v >= c.graph.vertex_count()) {
    throw Error(ErrorKind::IndexOutOfRange, std::string(what) + " index " + std::to_string(v));
  }
}

void require_free(const ChainState& c, int v, const char* what) {
  if (in_pair(c.logical_pairs, v)) {
    throw Error(ErrorKind::InvalidInput, std::string(what) + " belongs to a logical pair");
  }
}

}  // namespace

// ---------------------------------------------------------------- chains

bool is_path_forest(const WeightedGraph& graph) {
  const int n = graph.vertex_count();
  for (int v = 0; v < n; ++v)
    if (graph.degree(v) > 2) return false;
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (const auto& e : graph.edges()) {
    const int ra = root(e.a), rb = root(e.b);
    if (ra == rb) return false;
    parent[static_cast<std::size_t>(ra)] = rb;
  }
  return true;
}

ChainState make_chain(const WeightedGraph& graph) {
  if (!is_path_forest(graph)) throw Error(ErrorKind::InvalidGraph, "graph is not a union of paths");
  return {graph, build_state(graph), {}};
}

ChainState add_logical_pair(const ChainState& chain, int a, const std::string& label) {
  require_vertex(chain, a, "logical");
  require_free(chain, a, "vertex");
  ChainState out = chain;
  const int e = out.graph.add_vertex(label);
  out.state = duplicate_qubit(chain.state, a, e);
  out.logical_pairs.emplace_back(a, e);
  return out;
}

PureState canonical_state(const WeightedGraph& graph, const std::vector<std::pair<int, int>>& logical_pairs) {
  std::vector<int> secondary;
  for (const auto& [p, s] : logical_pairs) {
    if (graph.degree(s) != 0) throw Error(ErrorKind::InvalidGraph, "secondary qubit of a logical pair has edges");
    secondary.push_back(s);
  }
  std::sort(secondary.begin(), secondary.end());
  WeightedGraph reduced = graph;
  for (auto it = secondary.rbegin(); it != secondary.rend(); ++it) reduced = reduced.without_vertex(*it);
  PureState state = build_state(reduced);
  std::vector<std::pair<int, int>> order = logical_pairs;
  std::sort(order.begin(), order.end(), [](const auto& x, const auto& y) { return x.second < y.second; });
  for (std::size_t k = 0; k < order.size(); ++k) {
    const auto [p, s] = order[k];
    // Secondaries not inserted yet (including s) that sit below p.
    int pending_below = 0;
    for (std::size_t j = k; j < order.size(); ++j) pending_below += order[j].second < p;
    state = duplicate_qubit(state, p - pending_below, s);
  }
  return state;
}

Real logical_pair_violation(const PureState& state, int p, int s) {
  const int n = state.num_qubits();
  Real worst = 0.0;
  for (std::size_t idx = 0; idx < state.dimension(); ++idx) {
    if (bit_of(idx, p, n) != bit_of(idx, s, n)) {
      worst = std::max(worst, std::abs(state.amplitudes()(static_cast<Eigen::Index>(idx))));
    }
  }
  return worst;
}

void validate_chain(const ChainState& chain) {
  const int n = chain.graph.vertex_count();
  if (chain.state.num_qubits() != n) {
    throw Error(ErrorKind::ShapeMismatch, "state has " + std::to_string(chain.state.num_qubits()) +
                                              " qubits for " + std::to_string(n) + " vertices");
  }
  std::vector<int> seen;
  for (const auto& [p, s] : chain.logical_pairs) {
    if (p < 0 || s < 0 || p >= n || s >= n || p == s) throw Error(ErrorKind::InvalidGraph, "bad logical pair");
    seen.push_back(p);
    seen.push_back(s);
    if (chain.graph.degree(s) != 0) throw Error(ErrorKind::InvalidGraph, "secondary qubit has edges");
    if (logical_pair_violation(chain.state, p, s) > kLogicalLeak) {
      throw Error(ErrorKind::InvalidGraph, "logical pair (" + chain.graph.label(p) + ", " + chain.graph.label(s) +
                                               ") has mixed-bit support");
    }
  }
  std::sort(seen.begin(), seen.end());
  if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) {
    throw Error(ErrorKind::InvalidGraph, "logical pairs overlap");
  }
  WeightedGraph plain = chain.graph;
  // Acyclicity only; fused outputs may branch.
  std::vector<int> parent(static_cast<std::size_t>(n));
  std::iota(parent.begin(), parent.end(), 0);
  auto root = [&](int v) {
    while (parent[static_cast<std::size_t>(v)] != v) v = parent[static_cast<std::size_t>(v)];
    return v;
  };
  for (const auto& e : plain.edges()) {
    const int ra = root(e.a), rb = root(e.b);
    if (ra == rb) throw Error(ErrorKind::InvalidGraph, "graph has a cycle");
    parent[static_cast<std::size_t>(ra)] = rb;
  }
}

LocalGate Correction::as_gate() const {
  if (gate == "Z") return LocalGate::pauli_z(qubit);
  if (gate == "X") return LocalGate::pauli_x(qubit);
  if (gate == "phase") return LocalGate::phase(qubit, angle);
  if (gate == "z_rotation") return LocalGate::z_rotation(qubit, angle);
  throw Error(ErrorKind::InvalidInput, "unknown correction gate '" + gate + "'");
}

// ---------------------------------------------------------------- Type-I

std::vector<ProtocolOutcome> fuse_type_i(const ChainState& left, int end_a, const ChainState& right, int end_b) {
  validate_chain(left);
  validate_chain(right);
  require_vertex(left, end_a, "end_a");
  require_vertex(right, end_b, "end_b");
  require_free(left, end_a, "end_a");
  require_free(right, end_b, "end_b");
  if (left.graph.degree(end_a) != 1) throw Error(ErrorKind::NotEndpoint, "end_a has degree " + std::to_string(left.graph.degree(end_a)));
  if (right.graph.degree(end_b) != 1) throw Error(ErrorKind::NotEndpoint, "end_b has degree " + std::to_string(right.graph.degree(end_b)));

  const int nl = left.graph.vertex_count() - 1;
  const int nr = right.graph.vertex_count() - 1;
  std::array<std::array<Vector, 2>, 2> inputs;
  for (int k = 0; k < 2; ++k)
    for (int l = 0; l < 2; ++l)
      inputs[k][l] = kron(slice_qubit(left.state, end_a, k), slice_qubit(right.state, end_b, l)).amplitudes();
  const auto patterns = two_photon_amplitudes(inputs, type_i_matrix());
  auto amp = [&](int i, int j) -> const Vector& {
    for (const auto& p : patterns)
      if (p.i == i && p.j == j) return p.amplitude;
    throw Error(ErrorKind::NumericalAbort, "missing detector pattern");
  };

  // Merged graph: left without a, then c, then right without b.
  Draft merged = Draft::of(left);
  const auto [na, chi_a] = merged.neighbors(end_a).front();
  merged.remove(end_a);
  const int c = nl;
  merged.labels.insert(merged.labels.begin() + c, left.graph.label(end_a) + "~" + right.graph.label(end_b));
  Draft rd = Draft::of(right);
  const auto [nb, chi_b] = rd.neighbors(end_b).front();
  rd.remove(end_b);
  const int off = nl + 1;
  for (const auto& e : rd.edges) merged.add(e.a + off, e.b + off, e.chi);
  for (const auto& p : rd.pairs) merged.pairs.emplace_back(p.first + off, p.second + off);
  merged.labels.insert(merged.labels.end(), rd.labels.begin(), rd.labels.end());
  merged.add(na > end_a ? na - 1 : na, c, chi_a);
  merged.add(c, (nb > end_b ? nb - 1 : nb) + off, chi_b);

  // Register (left rest, c, right rest) from the two c-polarization branches.
  const Eigen::Index dr = Eigen::Index(1) << nr;
  auto with_c = [&](const Vector& v0, const Vector& v1) {
    Vector v(v0.size() * 2);
    for (Eigen::Index li = 0; li < (Eigen::Index(1) << nl); ++li) {
      v.segment(2 * li * dr, dr) = v0.segment(li * dr, dr);
      v.segment((2 * li + 1) * dr, dr) = v1.segment(li * dr, dr);
    }
    return v;
  };
  auto result = [](const Vector& v, int qubits) {
    const Real p = v.squaredNorm();
    ProjectionResult pr{p, std::nullopt};
    if (p > tol::kZeroOutcome) pr.state = PureState(qubits, v / std::sqrt(p));
    return pr;
  };

  std::vector<ProtocolOutcome> out;
  out.push_back(finish("success_plus", result(with_c(amp(0, 2), amp(1, 2)), nl + nr + 1), merged, {}));
  out.push_back(finish("success_minus", result(with_c(amp(0, 3), amp(1, 3)), nl + nr + 1), merged,
                       {make_correction(merged, "Z", c)}));

  // Failures: a and b end up Z-measured; all patterns of a group must agree.
  Draft split = Draft::of(left);
  split.remove(end_a);
  split.append(rd);
  auto group = [&](std::initializer_list<std::pair<int, int>> ps) {
    Real p = 0.0;
    const Vector* lead = nullptr;
    for (const auto& [i, j] : ps) {
      const Vector& v = amp(i, j);
      p += v.squaredNorm();
      if (!lead || v.squaredNorm() > lead->squaredNorm()) lead = &v;
    }
    for (const auto& [i, j] : ps) {
      const Vector& v = amp(i, j);
      if (v.squaredNorm() < tol::kZeroOutcome) continue;
      const Real f = std::abs(lead->dot(v)) / (lead->norm() * v.norm());
      if (f < 1 - tol::kFidelity) throw Error(ErrorKind::NumericalAbort, "failure patterns disagree");
    }
    ProjectionResult pr{p, std::nullopt};
    if (p > tol::kZeroOutcome) pr.state = PureState(nl + nr, *lead / lead->norm());
    return pr;
  };
  // Both photons at c: a reads 0, b reads 1.
  out.push_back(finish("failure_two_photon", group({{0, 0}, {0, 1}, {1, 1}}), split,
                       {make_correction(split, "phase", (nb > end_b ? nb - 1 : nb) + nl, chi_b)}));
  out.push_back(finish("failure_zero_photon", group({{2, 2}, {2, 3}, {3, 3}}), split,
                       {make_correction(split, "phase", na > end_a ? na - 1 : na, chi_a)}));
  for (std::size_t k = 2; k < out.size(); ++k) out[k].is_good_failure = out[k].fidelity >= kPostStateFidelity;
  return out;
}

// ---------------------------------------------------------------- logical qubit

std::vector<ProtocolOutcome> create_logical_qubit(const ChainState& chain, int a) {
  validate_chain(chain);
  require_vertex(chain, a, "a");
  require_free(chain, a, "a");
  const auto nb = chain.graph.neighbors(a);
  if (nb.size() != 2) throw Error(ErrorKind::InvalidInput, "a must have exactly two neighbors");
  for (const auto& [w, chi] : nb) require_free(chain, w, "neighbor of a");
  const Real chi1 = nb[0].second, chi2 = nb[1].second;
  const bool case1 = angle_distance(chi1, chi2) < kEligible;
  const bool case2 = angle_distance(chi1 + chi2, 0.0) < kEligible;
  if (!case1 && !case2) {
    throw Error(ErrorKind::WeightsNotEligible, "weights " + std::to_string(chi1) + ", " + std::to_string(chi2) +
                                                   " are neither equal nor opposite");
  }
  const Real h = 1 / std::sqrt(2.0);
  const QubitProjection proj = case1 ? QubitProjection(a, h, -h * phase(chi1)) : QubitProjection(a, h, -h);
  const QubitProjection comp = proj.complement();

  std::vector<ProtocolOutcome> out;
  const Residual ok = x_residual(chain, a, proj.alpha(), proj.beta());
  const Residual other = x_residual(chain, a, comp.alpha(), comp.beta());
  const bool both = case1 && case2;
  out.push_back(finish(both ? "success_plus" : "success", project_qubit(chain.state, proj), ok.draft, ok.corrections));
  if (both) {
    out.push_back(finish("success_minus", project_qubit(chain.state, comp), other.draft, other.corrections));
    return out;
  }

  // Failure: Z on both neighbors splits the chain.
  const ProjectionResult failed = project_qubit(chain.state, comp);
  auto after = [a](int i) { return i > a ? i - 1 : i; };
  const int b1 = after(nb[0].first), b2 = after(nb[1].first);
  Draft base = Draft::of(chain);
  base.remove(a);
  for (int k = 0; k < 2; ++k) {
    for (int m = 0; m < 2; ++m) {
      Draft d = base;
      std::vector<std::pair<int, Real>> fix;
      for (const auto& [w, chi] : d.neighbors(b1))
        if (k == 1) fix.emplace_back(w, chi);
      for (const auto& [w, chi] : d.neighbors(b2))
        if (m == 1) fix.emplace_back(w, chi);
      d.remove(b2);
      d.remove(b1);
      auto shift = [b1, b2](int i) { return i - (i > b1) - (i > b2); };
      std::vector<Correction> corr;
      for (const auto& [w, chi] : fix) corr.push_back(make_correction(d, "phase", shift(w), chi));

      ProjectionResult pr{0.0, std::nullopt};
      if (failed.state) {
        const ProjectionResult r1 = project_qubit(*failed.state, k ? QubitProjection::one(b1) : QubitProjection::zero(b1));
        if (r1.state) {
          const ProjectionResult r2 =
              project_qubit(*r1.state, m ? QubitProjection::one(b2 - 1) : QubitProjection::zero(b2 - 1));
          pr = {failed.probability * r1.probability * r2.probability, r2.state};
        }
      }
      ProtocolOutcome o = finish("failure_zz_" + std::to_string(k) + std::to_string(m), pr, d, corr);
      o.is_good_failure = o.post_state && o.fidelity >= kPostStateFidelity;
      out.push_back(std::move(o));
    }
  }
  return out;
}

// ---------------------------------------------------------------- Type-II

std::vector<ProtocolOutcome> fuse_type_ii(const ChainState& left, int a, const ChainState& right, int b) {
  validate_chain(left);
  validate_chain(right);
  require_vertex(left, a, "a");
  require_vertex(right, b, "b");
  require_free(right, b, "b");
  const auto pair = std::find_if(left.logical_pairs.begin(), left.logical_pairs.end(),
                                 [a](const auto& p) { return p.first == a || p.second == a; });
  if (pair == left.logical_pairs.end()) {
    throw Error(ErrorKind::NoLogicalPair, "qubit " + left.graph.label(a) + " is not part of a logical pair");
  }
  const int e_full = pair->first == a ? pair->second : pair->first;
  const int primary = pair->first;
  const int nl = left.graph.vertex_count() - 1;

  // Left side after a is gone: e carries the logical vertex's edges.
  Draft ld = Draft::of(left);
  const auto logical_edges = ld.neighbors(primary);
  const int e = e_full > a ? e_full - 1 : e_full;
  ld.remove(a);
  ld.drop_edges(e);
  for (const auto& [w, chi] : logical_edges) ld.add(e, w > a ? w - 1 : w, chi);

  const PureState joint = kron(left.state, right.state);
  const Real h = 1 / std::sqrt(2.0);
  std::vector<ProtocolOutcome> out;

  // Success: e also inherits b's neighbors.
  Draft merged = ld;
  Draft rd = Draft::of(right);
  const auto b_edges = rd.neighbors(b);
  rd.remove(b);
  merged.append(rd);
  for (const auto& [w, chi] : b_edges) merged.add(e, nl + (w > b ? w - 1 : w), chi);
  for (int sign : {1, -1}) {
    const ProjectionResult pr = project_pair(joint, a, nl + 1 + b, {h, 0.0, 0.0, sign * h});
    std::vector<Correction> corr;
    if (sign < 0) corr.push_back(make_correction(merged, "Z", e));
    out.push_back(finish(sign > 0 ? "success_plus" : "success_minus", pr, merged, corr));
  }

  // Failure: (<0| +- <1|)_a (<0| -+ <1|)_b.
  for (int sign : {1, -1}) {
    const Residual rr = x_residual(right, b, h, -sign * h);
    Draft d = ld;
    d.append(rr.draft);
    std::vector<Correction> corr;
    if (sign < 0) corr.push_back(make_correction(d, "Z", e));
    for (const auto& c : rr.corrections) corr.push_back(make_correction(d, c.gate, c.qubit + nl, c.angle));
    const ProjectionResult pr = project_pair(joint, a, nl + 1 + b, {0.5, -sign * 0.5, sign * 0.5, -0.5});
    ProtocolOutcome o = finish(sign > 0 ? "failure_plus_minus" : "failure_minus_plus", pr, d, corr);
    o.is_good_failure = rr.valid && o.post_state && o.fidelity >= kPostStateFidelity;
    out.push_back(std::move(o));
  }
  return out;
}

std::vector<FusionOutcome> fuse_generalized(const ChainState& left, int a, const ChainState& right, int b,
                                            const ModeUnitary& u) {
  validate_chain(left);
  validate_chain(right);
  require_vertex(left, a, "a");
  require_vertex(right, b, "b");
  if (!in_pair(left.logical_pairs, a)) {
    throw Error(ErrorKind::NoLogicalPair, "qubit " + left.graph.label(a) + " is not part of a logical pair");
  }
  return enumerate_outcomes(make_fusion_context(left.state, a, right.state, b), u);
}

// ---------------------------------------------------------------- GHZ pairs

GhzPair ghz_pair_projection(Real chi1, Real chi2, Real mag_a) {
  if (!(mag_a >= 0.0 && mag_a <= 1.0)) throw Error(ErrorKind::InvalidInput, "|A| must lie in [0, 1]");
  chi1 = normalize_angle(chi1);
  chi2 = normalize_angle(chi2);
  if (std::abs(chi1) < tol::kZeroOutcome || std::abs(chi2) < tol::kZeroOutcome) {
    throw Error(ErrorKind::InvalidInput, "chain weights must be nonzero");
  }
  const Real mag_b = std::sqrt(std::max(0.0, 1.0 - mag_a * mag_a));
  const QubitProjection meas(1, mag_a, mag_b * phase((chi1 + chi2 + kPi) / 2));
  GhzPair g{chi1, chi2, meas, meas.complement(), 0.0, {}, {}, {}, {}};
  const Real q = 2 * mag_a * mag_b * std::abs(std::sin(chi1 / 2) * std::sin(chi2 / 2));
  g.phi = 2 * std::atan2(q, std::sqrt(std::max(0.0, (1 - q) * (1 + q))));

  WeightedGraph chain({"b1", "a", "b2"});
  chain.add_edge(0, 1, chi1);
  chain.add_edge(1, 2, chi2);
  const PureState state = build_state(chain);
  Matrix2 target;
  target << 0.5, 0.5, 0.5, 0.5 * phase(-g.phi);
  const Eigen::JacobiSVD<Matrix2> ts(target, Eigen::ComputeFullU | Eigen::ComputeFullV);

  for (int k = 0; k < 2; ++k) {
    const ProjectionResult r = project_qubit(state, k == 0 ? g.measurement : g.complement);
    g.probabilities[k] = r.probability;
    if (!r.state) throw Error(ErrorKind::NotAchievable, "zero-probability outcome");
    Matrix2 m;
    m << r.state->amplitudes()(0), r.state->amplitudes()(1), r.state->amplitudes()(2), r.state->amplitudes()(3);
    g.outcome_phi[k] = pair_weight_from_matrix(m);
    const Eigen::JacobiSVD<Matrix2> ms(m, Eigen::ComputeFullU | Eigen::ComputeFullV);
    const Matrix2 g1 = ts.matrixU() * ms.matrixU().adjoint();
    const Matrix2 g2 = ts.matrixV().conjugate() * ms.matrixV().transpose();
    g.corrections[k] = {g1, g2};
    const Matrix2 mapped = g1 * m * g2.transpose();
    g.fidelities[k] = std::abs((target.conjugate().cwiseProduct(mapped)).sum());
    if (std::abs(g.outcome_phi[k] - g.phi) > tol::kWeight || g.fidelities[k] < 1 - tol::kFidelity) {
      throw Error(ErrorKind::NotAchievable, "outcome " + std::to_string(k) + " gives weight " +
                                                std::to_string(g.outcome_phi[k]) + " instead of " +
                                                std::to_string(g.phi));
    }
  }
  return g;
}

Real ghz_weight_limit(Real chi1, Real chi2) {
  const Real k = (1 - std::cos(chi1)) * (1 - std::cos(chi2));
  return std::acos(std::clamp(1 - 0.5 * k, -1.0, 1.0));
}

GhzPair ghz_pair_for_target(Real chi1, Real chi2, Real phi_target) {
  const Real phi = std::abs(normalize_angle(phi_target));
  const Real k = (1 - std::cos(chi1)) * (1 - std::cos(chi2));
  const Real s = std::sin(phi / 2) * std::sin(phi / 2);
  Real t = k > 0 ? s / k : (s > 0 ? kPi : 0.0);
  if (t > 0.25 + 1e-12) {
    throw Error(ErrorKind::NotAchievable, "target weight " + std::to_string(phi_target) + " exceeds the limit " +
                                              std::to_string(ghz_weight_limit(chi1, chi2)));
  }
  t = std::min(t, 0.25);
  // |A|^2 |B|^2 = t; the smaller root keeps |A| <= |B|.
  const Real a2 = 2 * t / (1 + std::sqrt(std::max(0.0, 1 - 4 * t)));
  GhzPair g = ghz_pair_projection(chi1, chi2, std::sqrt(a2));
  if (std::abs(g.phi - phi) > tol::kWeight) {
    throw Error(ErrorKind::NotAchievable, "inverted weight misses the target by " + std::to_string(g.phi - phi));
  }
  return g;
}

// ---------------------------------------------------------------- misc

std::size_t sample_outcome(const std::vector<ProtocolOutcome>& outcomes, Rng& rng) {
  if (outcomes.empty()) throw Error(ErrorKind::InvalidInput, "no outcomes to sample");
  std::vector<Real> w;
  for (const auto& o : outcomes) w.push_back(std::max(0.0, o.probability));
  std::discrete_distribution<std::size_t> pick(w.begin(), w.end());
  return pick(rng);
}

std::string dump_outcomes(const std::vector<ProtocolOutcome>& outcomes) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& o : outcomes) {
    nlohmann::json j;
    j["label"] = o.label;
    j["probability"] = o.probability;
    j["is_good_failure"] = o.is_good_failure;
    j["fidelity"] = o.fidelity;
    j["graph"] = o.post_state ? nlohmann::json::parse(dump_graph(o.post_state->graph, o.post_state->logical_pairs))
                              : nlohmann::json(nullptr);
    nlohmann::json corr = nlohmann::json::array();
    for (const auto& c : o.corrections) corr.push_back({{"gate", c.gate}, {"vertex", c.vertex}, {"angle", c.angle}});
    j["corrections"] = corr;
    arr.push_back(j);
  }
  return arr.dump(2);
}

}  // namespace wgs
