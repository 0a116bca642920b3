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

// Reference computations for tests. Everything here is written with dense
// Kronecker products and full operators, independent of the bit-twiddling
// used by the library.
#pragma once

#include <map>
#include <random>
#include <utility>
#include <vector>

#include "wgs/fock_optics.hpp"
#include "wgs/graph_state.hpp"

namespace wgs::oracle {

inline Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

/// Full 2^n operator acting as `op` on qubit q (qubit 0 leftmost factor).
inline Matrix embed(const Matrix& op, int q, int n) {
  Matrix out = Matrix::Identity(1, 1);
  for (int k = 0; k < n; ++k) out = kron(out, k == q ? op : Matrix(Matrix::Identity(2, 2)));
  return out;
}

inline Matrix proj1() {
  Matrix p = Matrix::Zero(2, 2);
  p(1, 1) = 1.0;
  return p;
}

/// exp(-i chi |11><11|) on qubits a, b as a full operator.
inline Matrix edge_operator(int a, int b, int n, Real chi) {
  const Matrix both = embed(proj1(), a, n) * embed(proj1(), b, n);
  const auto d = both.rows();
  return Matrix::Identity(d, d) + (std::polar(1.0, -chi) - 1.0) * both;
}

inline Vector graph_state(const WeightedGraph& g) {
  const int n = g.vertex_count();
  Vector plus(2);
  plus << 1.0 / std::sqrt(2.0), 1.0 / std::sqrt(2.0);
  Matrix v = Matrix::Ones(1, 1);
  for (int k = 0; k < n; ++k) v = kron(v, plus);
  Vector s = v.col(0);
  for (const auto& e : g.edges()) s = edge_operator(e.a, e.b, n, e.chi) * s;
  return s;
}

/// Applies the bra alpha<0| + beta<1| on qubit q: returns the unnormalized
/// (n-1)-qubit vector built from a full (2^(n-1) x 2^n) operator.
inline Vector apply_bra(const Vector& s, int q, int n, Complex alpha, Complex beta) {
  Matrix bra(1, 2);
  bra << alpha, beta;
  Matrix op = Matrix::Identity(1, 1);
  for (int k = 0; k < n; ++k) op = kron(op, k == q ? bra : Matrix(Matrix::Identity(2, 2)));
  return op * s;
}

inline Real overlap(const Vector& a, const Vector& b) {
  return std::abs(a.dot(b)) / (a.norm() * b.norm());
}

inline WeightedGraph random_graph(int n, double edge_prob, std::mt19937_64& rng) {
  std::uniform_real_distribution<Real> w(-kPi, kPi);
  std::bernoulli_distribution keep(edge_prob);
  WeightedGraph g;
  for (int k = 0; k < n; ++k) g.add_vertex("v" + std::to_string(k));
  for (int a = 0; a < n; ++a)
    for (int b = a + 1; b < n; ++b)
      if (keep(rng)) g.add_edge(a, b, w(rng));
  return g;
}

inline WeightedGraph chain(const std::vector<std::string>& ids, const std::vector<Real>& weights) {
  WeightedGraph g(ids);
  for (std::size_t k = 0; k < weights.size(); ++k)
    g.add_edge(static_cast<int>(k), static_cast<int>(k + 1), weights[k]);
  return g;
}

}  // namespace wgs::oracle

namespace wgs::oracle {

struct FockPattern {
  Real probability;
  Vector amplitude;  // unnormalized register vector
};

/// Two-photon evolution in matrix form: the photon pair state is a tensor
/// T(k, l) of register vectors; after the network T' = U^T T U and the
/// occupation amplitudes are T'(i,j) + T'(j,i) (i < j) and sqrt(2) T'(i,i).
inline std::map<std::pair<int, int>, FockPattern> fock_patterns(const Matrix& u, const Vector& f1,
                                                                 const Vector& f2, const Vector& f3,
                                                                 const Vector& f4) {
  const Eigen::Index n = u.rows();
  const Vector left[2] = {f1, f2};
  const Vector right[2] = {f3, f4};
  const Eigen::Index dim = f1.size() * f3.size();
  std::map<std::pair<int, int>, FockPattern> out;
  std::vector<Matrix> slices;  // one N x N mode matrix per register component
  for (Eigen::Index r = 0; r < dim; ++r) slices.push_back(Matrix::Zero(n, n));
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      const Matrix reg = kron(Matrix(left[k]), Matrix(right[l]));
      for (Eigen::Index r = 0; r < dim; ++r) slices[static_cast<std::size_t>(r)](k, 2 + l) += reg(r, 0);
    }
  }
  for (auto& t : slices) t = (u.transpose() * t * u).eval();
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      Vector amp(dim);
      for (Eigen::Index r = 0; r < dim; ++r) {
        const Matrix& t = slices[static_cast<std::size_t>(r)];
        amp(r) = i == j ? std::sqrt(2.0) * t(i, i) : t(i, j) + t(j, i);
      }
      out[{i, j}] = {amp.squaredNorm(), amp};
    }
  }
  return out;
}

/// Left chain x - a with a duplicated into a logical partner e (register
/// order x, a, e), right chain b - f or f - b - f' (register order by label).
inline PureState logical_left(Real chi) {
  WeightedGraph g({"x", "a"});
  g.add_edge(0, 1, chi);
  return duplicate_qubit(build_state(g), 1, 2);
}

}  // namespace wgs::oracle
