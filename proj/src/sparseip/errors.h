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

#ifndef SPARSEIP_ERRORS_H_
#define SPARSEIP_ERRORS_H_

#include <stdexcept>
#include <string>

namespace sparseip {

enum class ErrorCode {
  kParse,
  kValidation,
  kInvalidArgument,
  kIndexOutOfRange,
  kZeroDemandRow,
  kMalformedRow,
  kInfeasible,
  kUnbounded,
  kWidthTooSmall,
  kBudgetExceeded,
  kProblemTooLarge,
  kDegreeContractViolated,
  kStructureViolation,
  kUnknownFixture,
  kInternal,
};

// Short stable identifier, used in machine-readable error documents.
const char* ErrorCodeName(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}
  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

// Raised when a runtime-checked theorem invariant does not hold. Reaching one
// of these is a bug in this library, never a property of the input.
class InvariantFailure : public Error {
 public:
  explicit InvariantFailure(const std::string& message)
      : Error(ErrorCode::kInternal, message) {}
};

#define SPARSEIP_CHECK(cond, msg)                                       \
  do {                                                                  \
    if (!(cond)) throw ::sparseip::InvariantFailure(std::string(msg)); \
  } while (0)

}  // namespace sparseip

#endif  // SPARSEIP_ERRORS_H_
