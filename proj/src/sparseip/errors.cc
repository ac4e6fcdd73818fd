// Copyright 2026 The sparseip Authors
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

#include "sparseip/errors.h"

namespace sparseip {

const char* ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kParse: return "parse";
    case ErrorCode::kValidation: return "validation";
    case ErrorCode::kInvalidArgument: return "invalid_argument";
    case ErrorCode::kIndexOutOfRange: return "index_out_of_range";
    case ErrorCode::kZeroDemandRow: return "zero_demand_row";
    case ErrorCode::kMalformedRow: return "malformed_row";
    case ErrorCode::kInfeasible: return "infeasible";
    case ErrorCode::kUnbounded: return "unbounded";
    case ErrorCode::kWidthTooSmall: return "width_too_small";
    case ErrorCode::kBudgetExceeded: return "budget_exceeded";
    case ErrorCode::kProblemTooLarge: return "problem_too_large";
    case ErrorCode::kDegreeContractViolated: return "degree_contract_violated";
    case ErrorCode::kStructureViolation: return "structure_violation";
    case ErrorCode::kUnknownFixture: return "unknown_fixture";
    case ErrorCode::kInternal: return "internal";
  }
  return "internal";
}

}  // namespace sparseip
