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

#ifndef SPARSEIP_COVER_H_
#define SPARSEIP_COVER_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "sparseip/instance.h"
#include "sparseip/rational.h"

namespace sparseip::cover {

// A covering row  alpha . x >= 1  with 0 < alpha_j <= 1.
struct RoundableRow {
  enum class Provenance { kUnchanged, kReplaced };

  std::vector<Term> coeffs;  // by column, ascending
  Provenance provenance = Provenance::kUnchanged;
  // Set when provenance == kReplaced: the number of unit coefficients and
  // the denominator v of the smallest one.
  std::size_t t = 0;
  Integer v = 0;
};

// x witnesses that alpha . x >= 1 holds while alpha . floor(rho x) >= 1 fails.
struct RoundingCounterexample {
  std::vector<Rational> x;
};

// Decides whether  alpha . x >= 1  is rho-roundable over all nonnegative
// reals. A counterexample exists iff some integer z >= 0 has alpha.z < 1 and
// alpha.(z+1) > rho; then x = (z+1) / alpha.(z+1) is tight and rho x floors
// to at most z. The search visits z in lexicographic order with
// z_j <= min(search_bound, ceil(1/alpha_j)), which is exhaustive once
// search_bound >= max ceil(1/alpha_j). Testing utility; not on the solve path.
std::optional<RoundingCounterexample> IsRoundable(
    const std::vector<Rational>& alpha, const Rational& rho,
    std::size_t search_bound);

// Replaces a row with at most k nonzeros, each in (0, 1], by a
// Z+-equivalent k-roundable row:
//   sum_{i<=t} x_i + sum_{t<i<k} (v-1)/v x_i + 1/v x_k >= 1
// after sorting coefficients nonincreasing (ties by column). Rows with
// coefficient sum <= k-1, or with every coefficient 1, are returned as-is.
// Throws kMalformedRow on a coefficient outside (0, 1] or more than k
// nonzeros.
RoundableRow MakeRoundable(const std::vector<Term>& row, std::size_t k);

// Knapsack-cover inequality for row i with F at maximum multiplicity:
//   sum_{j not in F} min(A_ij, rhs) x_j >= rhs,  rhs = 1 - sum_{j in F} A_ij d_j.
struct KcCut {
  std::size_t row = 0;
  std::vector<std::size_t> fixed;  // F, ascending
  std::vector<Term> coeffs;        // j in supp(a_i) \ F
  Rational rhs;
};

// Requires a normalized instance (b = 1, A <= 1). Returns nullopt when the
// fixed part already covers the row, including when some j in F has
// d_j = inf. Throws kIndexOutOfRange for a bad row or for F outside
// supp(a_i).
std::optional<KcCut> MakeKcCut(const SparseIP& normalized, std::size_t row,
                               const std::vector<std::size_t>& fixed);

struct CoverOptions {
  // After rounding, lower each x_j toward ceil(x*_j) while the original rows
  // stay satisfied. Cost never increases, so the k bound is unaffected.
  bool trim = true;
};

struct CoverReport {
  std::size_t k = 0;  // row sparsity after normalization
  Rational lp_value;  // final cutting-plane LP optimum
  std::size_t lp_solves = 0;
  std::size_t cuts_added = 0;
  std::size_t rows_replaced = 0;
  std::size_t units_trimmed = 0;
  Rational ratio_bound;  // = k
};

struct CoverResult {
  IntSolution solution;
  CoverReport report;
};

// k-approximation for k-row-sparse covering programs: normalize, replace
// rows by roundable ones, add knapsack-cover cuts at F_i = {j : x*_j >=
// d_j/k} until none is violated, then round to min(d, floor(k x*)).
// Throws kInfeasible when the relaxation is infeasible.
CoverResult SolveCover(const SparseIP& inst, const CoverOptions& options = {});

}  // namespace sparseip::cover

#endif  // SPARSEIP_COVER_H_
