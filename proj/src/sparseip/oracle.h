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

#ifndef SPARSEIP_ORACLE_H_
#define SPARSEIP_ORACLE_H_

#include <cstdint>
#include <optional>
#include <vector>

#include "sparseip/instance.h"

namespace sparseip::oracle {

// Per-variable integer bounds that contain an optimal solution.
//   cover: u_j = min(d_j, max_i ceil(b_i / A_ij)), 0 for an empty column
//   pack:  u_j = min(d_j, min_i floor(b_i / A_ij)); an empty column keeps
//          d_j, or 0 when c_j = 0 and d_j = inf
// Throws kUnbounded for a packing column with no rows, c_j > 0, d_j = inf.
std::vector<Integer> SearchBox(const SparseIP& inst);

enum class Outcome { kOptimal, kInfeasible, kBudgetExceeded };

struct OracleResult {
  Outcome outcome = Outcome::kInfeasible;
  std::optional<IntSolution> solution;
  std::uint64_t nodes = 0;
};

// Exact optimum by depth-first branch and bound over SearchBox. Identical
// columns (same entries and cost) are merged into one variable first, which
// is exact: any split of a merged total is interchangeable. Deterministic.
OracleResult SolveExact(const SparseIP& inst, std::uint64_t node_budget);

}  // namespace sparseip::oracle

#endif  // SPARSEIP_ORACLE_H_
