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

// Command-level pipelines behind the command-line tool and the C API. Every
// function returns a one-line JSON document.

#ifndef SPARSEIP_RUNNER_H_
#define SPARSEIP_RUNNER_H_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "sparseip/generators.h"
#include "sparseip/instance.h"

namespace sparseip::run {

// FNV-1a 64 of the canonical serialization, as 16 hex digits.
std::string Digest(const SparseIP& inst);

struct RunReport {
  std::string digest;
  std::string variant;
  IntSolution solution;
  Rational lp_value;
  Rational ratio_bound;
  bool fallback_used = false;
  std::string oracle_outcome;  // empty when the oracle did not run
  std::optional<Rational> oracle_value;
  // Worse-over-better ratio: value / OPT for covering, OPT / value for
  // packing. Unset when the oracle did not finish; `ratio_infinite` marks a
  // zero denominator with a nonzero numerator.
  std::optional<Rational> observed_ratio;
  bool ratio_infinite = false;
  std::int64_t wall_ms = 0;
  std::vector<std::string> alternatives;  // other variants tried by auto
  std::string details;                    // variant-specific JSON object

  bool RatioViolated() const {
    return ratio_infinite || (observed_ratio && *observed_ratio > ratio_bound);
  }
};

// Algorithms: cover-k, pack-general, pack-2cs, pack-width, auto. With an
// oracle budget the exact optimum is computed too.
RunReport Solve(const SparseIP& inst, std::string_view algorithm,
                std::optional<std::uint64_t> oracle_budget);
std::string SerializeReport(const RunReport& report);

std::string Oracle(const SparseIP& inst, std::uint64_t node_budget);

struct CheckResult {
  bool feasible = true;
  std::string document;
};

// Re-verifies a solution document from scratch with exact arithmetic:
// integrality, 0 <= x <= d and every row, each violated row with its slack.
CheckResult Check(std::string_view instance_text, std::string_view solution_text);

struct CampaignParams {
  gen::RandomParams family;  // family.seed is the first instance's seed
  std::size_t count = 0;
  std::string algorithm = "auto";
  std::uint64_t oracle_budget = 2000000;
};

struct CampaignResult {
  std::size_t violations = 0;
  std::string document;  // one line per instance, then a summary line
};

// Instance t uses seed family.seed + t. Errors and exhausted budgets are
// recorded on their line and the campaign moves on.
CampaignResult Campaign(const CampaignParams& params);

std::string Certificate(const gen::Max3Lin2& formula,
                        const std::vector<int>& assignment);

// {"error": ..., "code": ..., "message": ...} for an exception.
std::string ErrorDocument(const std::exception& e);

}  // namespace sparseip::run

#endif  // SPARSEIP_RUNNER_H_
