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

#ifndef SPARSEIP_PACK_H_
#define SPARSEIP_PACK_H_

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "sparseip/instance.h"
#include "sparseip/rational.h"

namespace sparseip::pack {

using EntrySet = std::set<std::pair<std::size_t, std::size_t>>;  // (row, col)

struct IterationTrace {
  Rational lp_value;
  std::size_t active_rows = 0;  // |I'| when the LP was solved
  std::size_t active_cols = 0;  // |J'| when the LP was solved
};

// Result of iterated relaxation on a packing program. x0 + x1 may violate
// rows, but only through the special entries S:
//   A x0 + A_{S->0} x1 <= b,   |{j : (i,j) in S}| <= k for every row i.
struct IteratedOutcome {
  std::vector<Integer> x0;
  std::vector<Integer> x1;  // 0-1
  EntrySet special;
  Rational lp_value;        // optimum of the initial relaxation
  std::vector<Integer> matching;  // 2-CS variant only: the cycle edges M
  std::vector<IterationTrace> trace;
};

// Iterated relaxation: x0 = floor of an extreme LP optimum, then repeatedly
// solve the residual 0-1 LP, fix integral variables into x1, and relax every
// remaining row with at most k residual variables by marking its entries
// special. Requires a packing instance with A_ij <= b_i; k is its column
// sparsity. Throws kUnbounded for an empty column with c_j > 0, d_j = inf.
IteratedOutcome IteratedSolve(const SparseIP& inst);

// Checks the outcome's guarantees exactly; returns a description of the
// first failure, or an empty string.
std::string CheckIteratedOutcome(const SparseIP& inst,
                                 const IteratedOutcome& out, std::size_t k);

struct ConflictDigraph {
  std::vector<std::size_t> nodes;  // ascending column indices
  std::vector<std::vector<std::size_t>> out;  // by node position
  std::vector<std::vector<std::size_t>> in;

  std::size_t MaxIndegree() const;
  std::size_t NumArcs() const;
  std::vector<std::pair<std::size_t, std::size_t>> Arcs() const;  // positions
};

// Digraph on node positions 0..n-1; parallel arcs and self-loops dropped.
ConflictDigraph MakeDigraph(
    std::size_t num_nodes,
    const std::vector<std::pair<std::size_t, std::size_t>>& arcs);

// Arc j -> j' iff some (i, j) is special and A_ij' > 0, for j != j' in x1.
ConflictDigraph BuildConflictDigraph(const SparseIP& inst,
                                     const IteratedOutcome& out);

// Colors 1..2d+1 by node position, proper on the underlying undirected
// graph. Peels a least-index node of outdegree <= d, recurses, and gives each
// re-inserted node the smallest color unused by its neighbours. Throws
// kDegreeContractViolated when the indegree bound fails.
std::vector<int> ColorDigraph(const ConflictDigraph& g, std::size_t d);

struct Decomposition {
  std::vector<std::vector<Integer>> classes;  // 0-1 vectors summing to x1
};

// Splits x1 into at most 2k^2+1 feasible classes via the conflict digraph.
Decomposition Decompose(const SparseIP& inst, const IteratedOutcome& out,
                        std::size_t k);

struct Candidate {
  std::string name;  // "x0", "M", "y1", ...
  Rational value;
};

struct PackReport {
  std::string variant;
  std::size_t k = 0;
  Rational lp_value;
  Rational ratio_bound;
  std::vector<Candidate> candidates;
  std::size_t chosen = 0;
  std::size_t iterations = 0;
  std::size_t deleted_cols = 0;
  bool fallback_used = false;      // 2-CS only
  Rational width;                  // width variant only; 0 when A = 0
  bool width_infinite = false;
  std::vector<std::size_t> violated_trace;  // width: |V(x)| per reducer step
  std::vector<Rational> reducer_values;     // width: c.x* per reducer step
};

struct PackResult {
  IntSolution solution;
  PackReport report;
};

// (2k^2+2)-approximation for k-column-sparse packing programs.
PackResult SolvePack(const SparseIP& inst);

// Deterministic 4-approximation for 2-column-sparse packing programs. When
// the two-class split of x1 fails it falls back to the general
// decomposition, sets fallback_used and reports ratio bound 11.
PackResult SolvePack2cs(const SparseIP& inst);

// 1 + 2k/(W-k) approximation for packing programs of width W > k, where W is
// the minimum of b_i / A_ij over stored entries. Throws kWidthTooSmall.
PackResult SolvePackWidth(const SparseIP& inst);

// min b_i / A_ij over entries with b_i > 0; nullopt when there are none.
std::optional<Rational> Width(const SparseIP& inst);

}  // namespace sparseip::pack

#endif  // SPARSEIP_PACK_H_
