// Copyright 2026 The Authors.
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

#include "dmat/error.hpp"

namespace dmat {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::kEmptyCircuit: return "EmptyCircuit";
    case ErrorCode::kComparableCircuits: return "ComparableCircuits";
    case ErrorCode::kExchangeFails: return "ExchangeFails";
    case ErrorCode::kElementOutOfRange: return "ElementOutOfRange";
    case ErrorCode::kNotABasis: return "NotABasis";
    case ErrorCode::kElementInBasis: return "ElementInBasis";
    case ErrorCode::kGroundSetTooLarge: return "GroundSetTooLarge";
    case ErrorCode::kUniverseTooLarge: return "UniverseTooLarge";
    case ErrorCode::kCombinatorialBudgetExceeded:
      return "CombinatorialBudgetExceeded";
    case ErrorCode::kNotACircuit: return "NotACircuit";
    case ErrorCode::kRepresentationMismatch: return "RepresentationMismatch";
    case ErrorCode::kFieldTooSmall: return "FieldTooSmall";
    case ErrorCode::kGroundSizeMismatch: return "GroundSizeMismatch";
    case ErrorCode::kInvalidField: return "InvalidField";
    case ErrorCode::kParseError: return "ParseError";
    case ErrorCode::kEngineDisagreement: return "EngineDisagreement";
  }
  return "Unknown";
}

}  // namespace dmat
