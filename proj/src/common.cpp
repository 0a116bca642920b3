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

#include "wgs/common.hpp"

namespace wgs {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::CapExceeded: return "CapExceeded";
    case ErrorKind::IndexClash: return "IndexClash";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::NonUnitaryGate: return "NonUnitaryGate";
    case ErrorKind::NotNormalized: return "NotNormalized";
    case ErrorKind::ZeroOutcome: return "ZeroOutcome";
    case ErrorKind::ShapeMismatch: return "ShapeMismatch";
    case ErrorKind::InvalidGraph: return "InvalidGraph";
    case ErrorKind::InvalidUnitary: return "InvalidUnitary";
    case ErrorKind::InvalidContext: return "InvalidContext";
    case ErrorKind::NotEndpoint: return "NotEndpoint";
    case ErrorKind::WeightsNotEligible: return "WeightsNotEligible";
    case ErrorKind::NoLogicalPair: return "NoLogicalPair";
    case ErrorKind::NotAchievable: return "NotAchievable";
    case ErrorKind::DegenerateGram: return "DegenerateGram";
    case ErrorKind::DegenerateArgument: return "DegenerateArgument";
    case ErrorKind::ConvergenceFailure: return "ConvergenceFailure";
    case ErrorKind::BadSeed: return "BadSeed";
    case ErrorKind::InvalidInput: return "InvalidInput";
    case ErrorKind::NumericalAbort: return "NumericalAbort";
  }
  return "Unknown";
}

}  // namespace wgs
