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

#include "wgs/fock_optics.hpp"

#include "json.hpp"

namespace wgs {

namespace {

constexpr Real kSqrt2 = std::numbers::sqrt2_v<Real>;

void context_error(const std::string& what) { throw Error(ErrorKind::InvalidContext, what); }

}  // namespace

// ---------------------------------------------------------------- unitaries

ModeUnitary::ModeUnitary(Matrix matrix) : matrix_(std::move(matrix)) {
  if (matrix_.rows() != matrix_.cols() || matrix_.rows() < 4) {
    throw Error(ErrorKind::InvalidUnitary, "mode unitary must be square with N >= 4");
  }
  const Matrix defect = matrix_ * matrix_.adjoint() - Matrix::Identity(matrix_.rows(), matrix_.rows());
  if (defect.cwiseAbs().maxCoeff() > tol::kModeUnitary) {
    throw Error(ErrorKind::InvalidUnitary, "U U^dag deviates from identity");
  }
}

ModeUnitary ModeUnitary::identity(int n) { return ModeUnitary(Matrix::Identity(n, n)); }

ModeUnitary type_i_matrix() {
  // Columns: c_H, c_V, d_H, d_V. The a port goes through a PBS (H to c,
  // V to d) and the b port the other way; both d outputs then pass a 45
  // degree rotation.
  const Real h = 1.0 / kSqrt2;
  Matrix u(4, 4);
  u << 1, 0, 0, 0,
       0, 0, h, -h,
       0, 0, h, h,
       0, 1, 0, 0;
  return ModeUnitary(u);
}

ModeUnitary type_ii_matrix() {
  // Diagonal-basis PBS followed by 45 degree rotations on both outputs.
  Matrix u(4, 4);
  u << 0.5, 0.5, 0.5, -0.5,
       0.5, 0.5, -0.5, 0.5,
       0.5, -0.5, 0.5, 0.5,
       -0.5, 0.5, 0.5, 0.5;
  return ModeUnitary(u);
}

// ---------------------------------------------------------------- contexts

FusionContext make_fusion_context(PureState f1, PureState f2, PureState f3, PureState f4) {
  if (f1.num_qubits() != f2.num_qubits() || f3.num_qubits() != f4.num_qubits()) {
    context_error("branch states on one side must share a register");
  }
  const Real n1 = f1.norm(), n2 = f2.norm(), n3 = f3.norm(), n4 = f4.norm();
  if (n1 == 0.0 || n3 == 0.0) context_error("vanishing branch state");
  if (std::abs(n1 - n2) > tol::kContext) context_error("||f1|| != ||f2||");
  if (std::abs(n3 - n4) > tol::kContext) context_error("||f3|| != ||f4||");
  if (std::abs(f1.amplitudes().dot(f2.amplitudes())) > tol::kContext) context_error("f1 and f2 not orthogonal");
  if (std::abs(4.0 * n1 * n1 * n3 * n3 - 1.0) > tol::kContext) context_error("two-photon input not normalized");
  const Complex z = f4.amplitudes().dot(f3.amplitudes()) / (n3 * n4);
  if (std::abs(z) >= 1.0 - tol::kNorm) context_error("f3 and f4 are parallel (|z| = 1)");
  return FusionContext{std::move(f1), std::move(f2), std::move(f3), std::move(f4), n1, n3, z};
}

FusionContext make_fusion_context(const PureState& left, int a, const PureState& right, int b) {
  return make_fusion_context(slice_qubit(left, a, 0), slice_qubit(left, a, 1), slice_qubit(right, b, 0),
                             slice_qubit(right, b, 1));
}

FusionContext make_synthetic_context(Complex z) {
  if (std::abs(z) >= 1.0) context_error("|z| must be below 1");
  const Real h = 1.0 / kSqrt2;
  const Real s = std::sqrt(1.0 - std::norm(z));
  auto qubit = [h](Complex x, Complex y) {
    return PureState(1, (Vector(2) << h * x, h * y).finished(), NormTag::unnormalized);
  };
  return make_fusion_context(qubit(1, 0), qubit(0, 1), qubit(1, 0), qubit(std::conj(z), s));
}

// ---------------------------------------------------------------- closed forms

Matrix2 pattern_coefficients(const ModeUnitary& u, int i, int j) {
  Matrix2 c;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      c(k, l) = i == j ? kSqrt2 * u(k, i) * u(2 + l, i) : u(k, i) * u(2 + l, j) + u(k, j) * u(2 + l, i);
    }
  }
  return c;
}

std::vector<FusionOutcome> enumerate_outcomes(const FusionContext& ctx, const ModeUnitary& u) {
  const int n = u.size();
  const Complex z = ctx.z;
  const Real scale = ctx.norm_left * ctx.norm_left * ctx.norm_right * ctx.norm_right;
  const PureState* fl[2] = {&ctx.f1, &ctx.f2};
  const PureState* fr[2] = {&ctx.f3, &ctx.f4};
  std::vector<FusionOutcome> out;
  out.reserve(static_cast<std::size_t>(n * (n + 1) / 2));
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Matrix2 c = pattern_coefficients(u, i, j);
      Real p;
      if (i == j) {
        const Real left = std::norm(u(0, i)) + std::norm(u(1, i));
        const Real right = std::norm(u(2, i)) + std::norm(u(3, i)) + 2.0 * std::real(z * u(2, i) * std::conj(u(3, i)));
        p = 2.0 * scale * left * right;
      } else {
        const Complex a = c(0, 0), b = c(0, 1), cc = c(1, 0), d = c(1, 1);
        const Real n2 = std::norm(a) + std::norm(b) + 2.0 * std::real(z * a * std::conj(b)) + std::norm(cc) +
                        std::norm(d) + 2.0 * std::real(z * cc * std::conj(d));
        p = scale * n2;
      }
      FusionOutcome o{i, j, p, std::nullopt, Matrix2::Zero()};
      if (p >= tol::kZeroOutcome) {
        const Real norm_factor = std::sqrt(p / scale);
        o.m_matrix = c / norm_factor;
        Vector v = Vector::Zero(Eigen::Index{1} << ctx.register_qubits());
        for (int k = 0; k < 2; ++k)
          for (int l = 0; l < 2; ++l) v += c(k, l) * kron(*fl[k], *fr[l]).amplitudes();
        o.register_state = PureState(ctx.register_qubits(), v / v.norm());
      }
      out.push_back(std::move(o));
    }
  }
  return out;
}

// ---------------------------------------------------------------- brute force

std::vector<PatternAmplitude> two_photon_amplitudes(const std::array<std::array<Vector, 2>, 2>& inputs,
                                                    const ModeUnitary& u) {
  const int n = u.size();
  const Eigen::Index dim = inputs[0][0].size();
  // table(i, j) holds the register vector multiplying c_i^dag c_j^dag |0>.
  std::vector<Vector> table(static_cast<std::size_t>(n * n), Vector::Zero(dim));
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      if (inputs[k][l].size() != dim) throw Error(ErrorKind::ShapeMismatch, "input registers differ");
      for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
          const Complex w = u(k, i) * u(2 + l, j);
          if (w != Complex{}) table[static_cast<std::size_t>(i * n + j)] += w * inputs[k][l];
        }
      }
    }
  }
  std::vector<PatternAmplitude> out;
  for (int i = 0; i < n; ++i) {
    for (int j = i; j < n; ++j) {
      const Vector& tij = table[static_cast<std::size_t>(i * n + j)];
      if (i == j) {
        // c_i^dag c_i^dag |0> = sqrt(2) |2_i>
        out.push_back({i, j, kSqrt2 * tij});
      } else {
        out.push_back({i, j, tij + table[static_cast<std::size_t>(j * n + i)]});
      }
    }
  }
  return out;
}

std::vector<FusionOutcome> oracle_enumerate(const FusionContext& ctx, const ModeUnitary& u) {
  const PureState* fl[2] = {&ctx.f1, &ctx.f2};
  const PureState* fr[2] = {&ctx.f3, &ctx.f4};
  std::array<std::array<Vector, 2>, 2> inputs;
  Matrix basis(Eigen::Index{1} << ctx.register_qubits(), 4);
  const Real unit = ctx.norm_left * ctx.norm_right;
  for (int k = 0; k < 2; ++k) {
    for (int l = 0; l < 2; ++l) {
      inputs[k][l] = kron(*fl[k], *fr[l]).amplitudes();
      basis.col(2 * k + l) = inputs[k][l] / unit;
    }
  }
  const auto solver = basis.colPivHouseholderQr();
  std::vector<FusionOutcome> out;
  for (const auto& pa : two_photon_amplitudes(inputs, u)) {
    const Real p = pa.amplitude.squaredNorm();
    FusionOutcome o{pa.i, pa.j, p, std::nullopt, Matrix2::Zero()};
    if (p >= tol::kZeroOutcome) {
      const Vector unit_state = pa.amplitude / std::sqrt(p);
      const Vector m = solver.solve(unit_state);
      o.m_matrix << m(0), m(1), m(2), m(3);
      o.register_state = PureState(ctx.register_qubits(), unit_state);
    }
    out.push_back(std::move(o));
  }
  return out;
}

// ---------------------------------------------------------------- JSON

ModeUnitary parse_mode_unitary(const std::string& text) {
  using nlohmann::json;
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::InvalidInput, std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object() || !doc.contains("n") || !doc.contains("re") || !doc.contains("im") ||
      !doc["n"].is_number_integer()) {
    throw Error(ErrorKind::InvalidInput, "mode unitary needs \"n\", \"re\", \"im\"");
  }
  const int n = doc["n"].get<int>();
  if (n < 1 || n > 64) throw Error(ErrorKind::InvalidInput, "mode count out of range");
  Matrix m(n, n);
  for (const char* part : {"re", "im"}) {
    const json& rows = doc[part];
    if (!rows.is_array() || static_cast<int>(rows.size()) != n) {
      throw Error(ErrorKind::InvalidInput, std::string("\"") + part + "\" must have n rows");
    }
    for (int r = 0; r < n; ++r) {
      const json& row = rows[static_cast<std::size_t>(r)];
      if (!row.is_array() || static_cast<int>(row.size()) != n) {
        throw Error(ErrorKind::InvalidInput, std::string("\"") + part + "\" rows must have n entries");
      }
      for (int c = 0; c < n; ++c) {
        const json& x = row[static_cast<std::size_t>(c)];
        if (!x.is_number()) throw Error(ErrorKind::InvalidInput, "non-numeric matrix entry");
        if (part[0] == 'r') m(r, c) = x.get<Real>();
        else m(r, c) += Complex(0.0, x.get<Real>());
      }
    }
  }
  return ModeUnitary(m);
}

std::string dump_mode_unitary(const ModeUnitary& u) {
  using nlohmann::json;
  json doc;
  doc["n"] = u.size();
  doc["re"] = json::array();
  doc["im"] = json::array();
  for (int r = 0; r < u.size(); ++r) {
    json re = json::array(), im = json::array();
    for (int c = 0; c < u.size(); ++c) {
      re.push_back(u(r, c).real());
      im.push_back(u(r, c).imag());
    }
    doc["re"].push_back(re);
    doc["im"].push_back(im);
  }
  return doc.dump(2);
}

}  // namespace wgs
