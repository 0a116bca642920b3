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
#pragma once

#include <cmath>
#include <complex>
#include <numbers>
#include <stdexcept>
#include <string>

#include <Eigen/Dense>

namespace wgs {

using Real = double;
using Complex = std::complex<Real>;
using Vector = Eigen::VectorXcd;
using Matrix = Eigen::MatrixXcd;
using Matrix2 = Eigen::Matrix2cd;

inline constexpr Real kPi = std::numbers::pi_v<Real>;
inline constexpr Complex kI{0.0, 1.0};

/// Numerical thresholds shared by every module.
namespace tol {
inline constexpr Real kNorm = 1e-12;          // normalized-state check
inline constexpr Real kUnitaryGate = 1e-12;   // LocalGate construction
inline constexpr Real kModeUnitary = 1e-10;   // ModeUnitary construction
inline constexpr Real kZeroOutcome = 1e-14;   // projection probability cutoff
inline constexpr Real kFidelity = 1e-10;      // equality up to global phase
inline constexpr Real kWeight = 1e-9;         // eligibility of weights, radians
inline constexpr Real kContext = 1e-10;       // FusionContext gram checks
}  // namespace tol

enum class ErrorKind {
  CapExceeded,
  IndexClash,
  IndexOutOfRange,
  NonUnitaryGate,
  NotNormalized,
  ZeroOutcome,
  ShapeMismatch,
  InvalidGraph,
  InvalidUnitary,
  InvalidContext,
  NotEndpoint,
  WeightsNotEligible,
  NoLogicalPair,
  NotAchievable,
  DegenerateGram,
  DegenerateArgument,
  ConvergenceFailure,
  BadSeed,
  InvalidInput,
  NumericalAbort,
};

const char* to_string(ErrorKind kind);

/// Typed error carried by every throwing operation in the library.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

/// Maps an angle into (-pi, pi].
inline Real normalize_angle(Real x) {
  Real r = std::remainder(x, 2.0 * kPi);
  if (r <= -kPi) r += 2.0 * kPi;
  return r;
}

/// Distance between two angles modulo 2 pi.
inline Real angle_distance(Real x, Real y) { return std::abs(normalize_angle(x - y)); }

inline Complex phase(Real theta) { return std::polar(1.0, theta); }

}  // namespace wgs
