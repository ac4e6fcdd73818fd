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

#ifndef SPARSEIP_LP_H_
#define SPARSEIP_LP_H_

#include <cstddef>
#include <iosfwd>
#include <set>
#include <vector>

#include "sparseip/instance.h"
#include "sparseip/rational.h"

namespace sparseip::lp {

enum class ObjectiveSense { kMax, kMin };
enum class Relation { kLessEqual, kGreaterEqual, kEqual };
enum class Status { kOptimal, kInfeasible, kUnbounded };

const char* StatusName(Status status);

struct Row {
  std::vector<Term> coeffs;  // sparse, by variable index
  Relation relation = Relation::kLessEqual;
  Rational rhs;
};

struct VariableBounds {
  Rational lower = 0;
  UpperBound upper = UpperBound::Infinity();
};

struct LpProblem {
  ObjectiveSense sense = ObjectiveSense::kMax;
  std::vector<Rational> objective;
  std::vector<Row> rows;
  std::vector<VariableBounds> bounds;  // one per variable

  std::size_t num_vars() const { return objective.size(); }
};

struct LpSolution {
  Status status = Status::kInfeasible;
  std::vector<Rational> x;
  Rational value;
  // Rows whose activity equals the right-hand side at x.
  std::set<std::size_t> tight_rows;
  // x is a basic feasible solution of the bounded-variable standard form.
  bool basic = false;
  std::size_t pivots = 0;
};

struct SolveOptions {
  // Variables plus rows; larger problems are refused with kProblemTooLarge.
  std::size_t size_limit = 10000;
  // When set, the final basis and tableau are written here.
  std::ostream* dump = nullptr;
};

// Exact two-phase bounded-variable primal simplex with Bland's rule. Optimal
// solutions are vertices of the feasible region. Throws kInvalidArgument on
// malformed problems and kProblemTooLarge past options.size_limit.
LpSolution Solve(const LpProblem& problem, const SolveOptions& options = {});

// {j : x_j not an integer}. Requires an optimal solution.
std::vector<std::size_t> FractionalSupport(const LpSolution& sol);

// #{j : lower_j < x_j < upper_j}; the basicness certificate requires this to
// be at most tight_rows.size().
std::size_t CountStrictlyInterior(const LpProblem& problem,
                                  const std::vector<Rational>& x);

// The LP obtained from an integer program by dropping integrality.
LpProblem Relaxation(const SparseIP& inst);

}  // namespace sparseip::lp

#endif  // SPARSEIP_LP_H_
