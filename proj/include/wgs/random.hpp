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

/// Random ensembles used by sweeps and verification. All draws come from a
/// caller-owned std::mt19937_64.
#pragma once

#include <random>

#include "wgs/fock_optics.hpp"

namespace wgs {

using Rng = std::mt19937_64;

/// Haar-random n x n unitary (QR of a Ginibre matrix with phase fix).
Matrix haar_unitary(int n, Rng& rng);

/// Uniform weight in (-pi, pi], never zero.
Real random_weight(Rng& rng);

/// 4x4 unitary with |U(0,i)|^2 + |U(1,i)|^2 = 1/2 for every column i:
/// diag(V1, V2) (H (x) I) diag(W1, W2) with V, W Haar on U(2).
ModeUnitary balanced_unitary(Rng& rng);

/// N x N unitary (N >= 5) whose columns with both (U0i, U1i) and
/// (U2i, U3i) nonzero all share the direction of (U2i, U3i).
ModeUnitary collinear_unitary(int n, Rng& rng);

/// Haar unitary of size n >= 4.
ModeUnitary random_mode_unitary(int n, Rng& rng);

}  // namespace wgs
