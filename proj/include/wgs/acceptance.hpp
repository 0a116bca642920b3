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

/// End-to-end acceptance checks 1..10, shared by the acceptance binary and
/// `wgs verify`.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "wgs/common.hpp"

namespace wgs {

struct AcceptanceOptions {
  bool quick = false;          // reduced ensembles and scan resolution
  Real perturbation = 0.0;     // added to every analytic reference value
  std::uint64_t seed = 20261017;
  std::vector<int> only;       // empty = all
};

struct CriterionResult {
  int id;
  std::string name;
  bool pass;
  Real residual;
  Real tolerance;
  double seconds;
  double time_limit;  // 0 = none
  std::string detail;
};

std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// One line: "PASS  3 type-ii-failure-split  residual=... tol=... time=...".
std::string format_result(const CriterionResult& r);

}  // namespace wgs
