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

#include "wgs/random.hpp"

#include <algorithm>
#include <numeric>

namespace wgs {

namespace {

Matrix ginibre(Eigen::Index rows, Eigen::Index cols, Rng& rng) {
  std::normal_distribution<Real> g(0.0, 1.0);
  Matrix m(rows, cols);
  for (Eigen::Index i = 0; i < rows; ++i)
    for (Eigen::Index j = 0; j < cols; ++j) m(i, j) = Complex(g(rng), g(rng));
  return m;
}

}  // namespace

Matrix haar_unitary(int n, Rng& rng) {
  const Eigen::HouseholderQR<Matrix> qr(ginibre(n, n, rng));
  Matrix q = qr.householderQ();
  const Matrix r = qr.matrixQR();
  for (int k = 0; k < n; ++k) {
    const Complex d = r(k, k);
    q.col(k) *= std::abs(d) > 0 ? d / std::abs(d) : Complex(1.0);
  }
  return q;
}

Real random_weight(Rng& rng) {
  std::uniform_real_distribution<Real> w(-kPi, kPi);
  Real x = 0.0;
  while (std::abs(x) < 1e-6) x = normalize_angle(w(rng));
  return x;
}

ModeUnitary balanced_unitary(Rng& rng) {
  Matrix left = Matrix::Zero(4, 4), right = Matrix::Zero(4, 4), h(4, 4);
  left.topLeftCorner(2, 2) = haar_unitary(2, rng);
  left.bottomRightCorner(2, 2) = haar_unitary(2, rng);
  right.topLeftCorner(2, 2) = haar_unitary(2, rng);
  right.bottomRightCorner(2, 2) = haar_unitary(2, rng);
  const Real s = 1.0 / std::sqrt(2.0);
  h << s, 0, s, 0,
       0, s, 0, s,
       s, 0, -s, 0,
       0, s, 0, -s;
  return ModeUnitary(left * h * right);
}

ModeUnitary collinear_unitary(int n, Rng& rng) {
  if (n < 5) throw Error(ErrorKind::InvalidInput, "collinear ensemble needs N >= 5");
  std::uniform_int_distribution<int> psize(3, n - 2);
  std::uniform_real_distribution<Real> unit(0.0, 1.0);
  const int np = psize(rng);
  const int nq = n - np;

  // Rows 0, 1 on P and the shared direction of rows 2, 3.
  const Matrix up = haar_unitary(np, rng);
  const Real kappa = unit(rng);
  const Vector v = haar_unitary(2, rng).col(0);
  Vector vperp(2);
  vperp << -std::conj(v(1)), std::conj(v(0));

  Matrix top = Matrix::Zero(4, n);
  top.block(0, 0, 2, np) = up.topRows(2);
  top.block(2, 0, 2, np) = kappa * v * up.row(2);
  // Rows 2, 3 on Q: W W^dag = I - kappa^2 v v^dag.
  Matrix basis(2, 2);
  basis.col(0) = std::sqrt(1.0 - kappa * kappa) * v;
  basis.col(1) = vperp;
  top.block(2, np, 2, nq) = basis * haar_unitary(nq, rng).topRows(2);

  // Complete to a unitary: orthonormal complement of the first four rows.
  Matrix full(n, n);
  full.topRows(4) = top;
  Matrix extra = ginibre(n - 4, n, rng);
  for (int r = 0; r < n - 4; ++r) {
    Vector x = extra.row(r).transpose();
    for (int pass = 0; pass < 2; ++pass) {
      for (int k = 0; k < 4 + r; ++k) {
        const Vector row = full.row(k).transpose();
        x -= row * row.dot(x);
      }
    }
    full.row(4 + r) = (x / x.norm()).transpose();
  }

  std::vector<int> perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 0);
  std::shuffle(perm.begin(), perm.end(), rng);
  Matrix permuted(n, n);
  for (int c = 0; c < n; ++c) permuted.col(c) = full.col(perm[static_cast<std::size_t>(c)]);
  return ModeUnitary(permuted);
}

ModeUnitary random_mode_unitary(int n, Rng& rng) { return ModeUnitary(haar_unitary(n, rng)); }

}  // namespace wgs
