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

#include "sparseip/lp.h"

#include <limits>
#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "sparseip/errors.h"

namespace sparseip::lp {

const char* StatusName(Status status) {
  switch (status) {
    case Status::kOptimal:
      return "optimal";
    case Status::kInfeasible:
      return "infeasible";
    case Status::kUnbounded:
      return "unbounded";
  }
  return "unknown";
}

namespace {

constexpr std::size_t kNone = std::numeric_limits<std::size_t>::max();

// Bounded-variable tableau over  T y = beta,  0 <= y <= upper.  Columns are
// laid out as [structural | slack | artificial]. Every nonbasic variable sits
// at 0 or at its (finite) upper bound.
class Tableau {
 public:
  Tableau(std::size_t rows, std::size_t cols)
      : t_(rows, std::vector<Rational>(cols, Rational(0))),
        upper_(cols, UpperBound::Infinity()),
        value_(cols, Rational(0)),
        at_upper_(cols, false),
        basic_row_(cols, kNone),
        basis_(rows, kNone) {}

  std::size_t rows() const { return t_.size(); }
  std::size_t cols() const { return upper_.size(); }

  std::vector<std::vector<Rational>>& matrix() { return t_; }
  std::vector<UpperBound>& upper() { return upper_; }
  std::vector<Rational>& value() { return value_; }
  const std::vector<std::size_t>& basis() const { return basis_; }

  void SetBasic(std::size_t row, std::size_t var) {
    basis_[row] = var;
    basic_row_[var] = row;
  }
  bool IsBasic(std::size_t var) const { return basic_row_[var] != kNone; }

  // Minimizes cost.y from the current basis. Returns false on unboundedness.
  bool Minimize(const std::vector<Rational>& cost, std::size_t& pivots,
                std::size_t pivot_cap) {
    std::vector<Rational> reduced = cost;
    for (std::size_t r = 0; r < rows(); ++r) {
      const Rational& cb = cost[basis_[r]];
      if (sgn(cb) == 0) continue;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(t_[r][j]) != 0) reduced[j] -= cb * t_[r][j];
      }
    }
    for (;;) {
      // Bland: least-index improving nonbasic column.
      std::size_t enter = kNone;
      for (std::size_t j = 0; j < cols(); ++j) {
        if (IsBasic(j)) continue;
        if (upper_[j].finite() && sgn(upper_[j].value()) == 0) continue;
        const int s = sgn(reduced[j]);
        if ((!at_upper_[j] && s < 0) || (at_upper_[j] && s > 0)) {
          enter = j;
          break;
        }
      }
      if (enter == kNone) return true;
      if (++pivots > pivot_cap) {
        throw InvariantFailure("simplex exceeded its pivot cap");
      }
      const int dir = at_upper_[enter] ? -1 : 1;

      // Ratio test; ties go to the least variable index.
      std::optional<Rational> step;
      std::size_t leave = kNone;
      std::size_t leave_row = kNone;
      bool leave_to_upper = false;
      if (upper_[enter].finite()) {
        step = upper_[enter].value();
        leave = enter;
      }
      for (std::size_t r = 0; r < rows(); ++r) {
        const Rational& alpha = t_[r][enter];
        if (sgn(alpha) == 0) continue;
        const std::size_t var = basis_[r];
        // Basic variable moves by -alpha*dir per unit step.
        const bool decreasing = (sgn(alpha) > 0) == (dir > 0);
        Rational limit;
        if (decreasing) {
          limit = value_[var] / abs(alpha);
        } else {
          if (upper_[var].infinite()) continue;
          limit = (upper_[var].value() - value_[var]) / abs(alpha);
        }
        if (!step || limit < *step || (limit == *step && var < leave)) {
          step = limit;
          leave = var;
          leave_row = r;
          leave_to_upper = !decreasing;
        }
      }
      if (!step) return false;

      const Rational& theta = *step;
      if (sgn(theta) != 0) {
        for (std::size_t r = 0; r < rows(); ++r) {
          const Rational& alpha = t_[r][enter];
          if (sgn(alpha) == 0) continue;
          if (dir > 0) {
            value_[basis_[r]] -= alpha * theta;
          } else {
            value_[basis_[r]] += alpha * theta;
          }
        }
        if (dir > 0) {
          value_[enter] += theta;
        } else {
          value_[enter] -= theta;
        }
      }

      if (leave == enter) {
        at_upper_[enter] = !at_upper_[enter];
        continue;
      }

      // Pivot on (leave_row, enter).
      basic_row_[leave] = kNone;
      at_upper_[leave] = leave_to_upper;
      value_[leave] = leave_to_upper ? upper_[leave].value() : Rational(0);
      at_upper_[enter] = false;
      SetBasic(leave_row, enter);

      std::vector<Rational>& prow = t_[leave_row];
      const Rational inv = 1 / prow[enter];
      for (std::size_t j = 0; j < cols(); ++j) {
        if (sgn(prow[j]) != 0) prow[j] *= inv;
      }
      for (std::size_t r = 0; r < rows(); ++r) {
        if (r == leave_row) continue;
        const Rational factor = t_[r][enter];
        if (sgn(factor) == 0) continue;
        for (std::size_t j = 0; j < cols(); ++j) {
          if (sgn(prow[j]) != 0) t_[r][j] -= factor * prow[j];
        }
      }
      const Rational rfactor = reduced[enter];
      if (sgn(rfactor) != 0) {
        for (std::size_t j = 0; j < cols(); ++j) {
          if (sgn(prow[j]) != 0) reduced[j] -= rfactor * prow[j];
        }
      }
    }
  }

  void Dump(std::ostream& os) const {
    os << "basis:";
    for (std::size_t var : basis_) os << ' ' << var;
    os << '\n';
    for (std::size_t r = 0; r < rows(); ++r) {
      os << "row " << r << " [basic " << basis_[r] << " = "
         << ToString(value_[basis_[r]]) << "]:";
      for (const Rational& v : t_[r]) os << ' ' << ToString(v);
      os << '\n';
    }
    os << "nonbasic at upper:";
    for (std::size_t j = 0; j < cols(); ++j) {
      if (!IsBasic(j) && at_upper_[j]) os << ' ' << j;
    }
    os << '\n';
  }

 private:
  std::vector<std::vector<Rational>> t_;
  std::vector<UpperBound> upper_;
  std::vector<Rational> value_;
  std::vector<bool> at_upper_;
  std::vector<std::size_t> basic_row_;
  std::vector<std::size_t> basis_;
};

void CheckProblem(const LpProblem& p) {
  const std::size_t n = p.num_vars();
  if (p.bounds.size() != n) {
    throw Error(ErrorCode::kInvalidArgument,
                "LP bounds and objective dimensions differ");
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = p.bounds[j];
    if (b.upper.finite() && b.upper.value() < b.lower) {
      throw Error(ErrorCode::kInvalidArgument,
                  "variable " + std::to_string(j) + " has lower > upper");
    }
  }
  for (std::size_t i = 0; i < p.rows.size(); ++i) {
    for (const Term& t : p.rows[i].coeffs) {
      if (t.index >= n) {
        throw Error(ErrorCode::kInvalidArgument,
                    "row " + std::to_string(i) + " references variable " +
                        std::to_string(t.index));
      }
    }
  }
}

Rational Activity(const Row& row, const std::vector<Rational>& x) {
  Rational total = 0;
  for (const Term& t : row.coeffs) total += t.value * x[t.index];
  return total;
}

}  // namespace

LpSolution Solve(const LpProblem& problem, const SolveOptions& options) {
  CheckProblem(problem);
  const std::size_t n = problem.num_vars();
  const std::size_t m = problem.rows.size();
  if (n + m > options.size_limit) {
    throw Error(ErrorCode::kProblemTooLarge,
                "LP has " + std::to_string(n) + " variables and " +
                    std::to_string(m) + " rows, limit is " +
                    std::to_string(options.size_limit));
  }

  // Count slacks and decide which rows need an artificial.
  std::vector<std::size_t> slack_of(m, kNone);
  std::size_t num_slack = 0;
  for (std::size_t i = 0; i < m; ++i) {
    if (problem.rows[i].relation != Relation::kEqual) slack_of[i] = num_slack++;
  }
  std::vector<Rational> rhs(m);
  std::vector<bool> negate(m, false);
  std::vector<bool> needs_artificial(m, false);
  std::size_t num_art = 0;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& row = problem.rows[i];
    rhs[i] = row.rhs;
    for (const Term& t : row.coeffs) rhs[i] -= t.value * problem.bounds[t.index].lower;
    negate[i] = rhs[i] < 0;
    // After sign normalization the slack column is +1 for (<=, kept) and
    // (>=, negated); those rows start with the slack basic.
    const bool slack_basic =
        (row.relation == Relation::kLessEqual && !negate[i]) ||
        (row.relation == Relation::kGreaterEqual && negate[i]);
    if (!slack_basic) {
      needs_artificial[i] = true;
      ++num_art;
    }
  }

  const std::size_t cols = n + num_slack + num_art;
  Tableau tab(m, cols);
  auto& t = tab.matrix();
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = problem.bounds[j];
    tab.upper()[j] = b.upper.finite() ? UpperBound(b.upper.value() - b.lower)
                                      : UpperBound::Infinity();
  }
  std::size_t next_art = n + num_slack;
  std::vector<std::size_t> artificials;
  for (std::size_t i = 0; i < m; ++i) {
    const Row& row = problem.rows[i];
    const int sign = negate[i] ? -1 : 1;
    for (const Term& term : row.coeffs) {
      t[i][term.index] += sign * term.value;
    }
    if (slack_of[i] != kNone) {
      const int slack_sign = row.relation == Relation::kLessEqual ? 1 : -1;
      t[i][n + slack_of[i]] = sign * slack_sign;
    }
    const Rational beta = sign * rhs[i];
    if (needs_artificial[i]) {
      const std::size_t a = next_art++;
      t[i][a] = 1;
      tab.SetBasic(i, a);
      tab.value()[a] = beta;
      artificials.push_back(a);
    } else {
      const std::size_t s = n + slack_of[i];
      tab.SetBasic(i, s);
      tab.value()[s] = beta;
    }
  }

  LpSolution sol;
  const std::size_t pivot_cap = 1000 * (cols + m + 10) * (m + 10);

  if (!artificials.empty()) {
    std::vector<Rational> phase1(cols, Rational(0));
    for (std::size_t a : artificials) phase1[a] = 1;
    tab.Minimize(phase1, sol.pivots, pivot_cap);
    Rational infeasibility = 0;
    for (std::size_t a : artificials) infeasibility += tab.value()[a];
    if (sgn(infeasibility) > 0) {
      sol.status = Status::kInfeasible;
      if (options.dump) tab.Dump(*options.dump);
      return sol;
    }
    // Pin artificials to zero; basic ones at zero leave on the first
    // pivot that touches their row.
    for (std::size_t a : artificials) tab.upper()[a] = Rational(0);
  }

  std::vector<Rational> phase2(cols, Rational(0));
  for (std::size_t j = 0; j < n; ++j) {
    phase2[j] = problem.sense == ObjectiveSense::kMin ? problem.objective[j]
                                                      : -problem.objective[j];
  }
  if (!tab.Minimize(phase2, sol.pivots, pivot_cap)) {
    sol.status = Status::kUnbounded;
    if (options.dump) tab.Dump(*options.dump);
    return sol;
  }
  if (options.dump) tab.Dump(*options.dump);

  sol.status = Status::kOptimal;
  sol.basic = true;
  sol.x.resize(n);
  for (std::size_t j = 0; j < n; ++j) {
    sol.x[j] = problem.bounds[j].lower + tab.value()[j];
  }
  sol.value = 0;
  for (std::size_t j = 0; j < n; ++j) sol.value += problem.objective[j] * sol.x[j];

  for (std::size_t i = 0; i < m; ++i) {
    const Row& row = problem.rows[i];
    const Rational act = Activity(row, sol.x);
    const int sign = cmp(act, row.rhs);
    switch (row.relation) {
      case Relation::kLessEqual:
        SPARSEIP_CHECK(sign <= 0, "simplex returned a point violating a <= row");
        break;
      case Relation::kGreaterEqual:
        SPARSEIP_CHECK(sign >= 0, "simplex returned a point violating a >= row");
        break;
      case Relation::kEqual:
        SPARSEIP_CHECK(sign == 0, "simplex returned a point violating an = row");
        break;
    }
    if (sign == 0) sol.tight_rows.insert(i);
  }
  for (std::size_t j = 0; j < n; ++j) {
    const auto& b = problem.bounds[j];
    SPARSEIP_CHECK(sol.x[j] >= b.lower &&
                       (b.upper.infinite() || sol.x[j] <= b.upper.value()),
                   "simplex returned a point outside the variable bounds");
  }
  SPARSEIP_CHECK(CountStrictlyInterior(problem, sol.x) <= sol.tight_rows.size(),
                 "simplex returned a non-basic point");
  return sol;
}

std::vector<std::size_t> FractionalSupport(const LpSolution& sol) {
  if (sol.status != Status::kOptimal) {
    throw Error(ErrorCode::kInvalidArgument,
                "fractional support needs an optimal solution");
  }
  std::vector<std::size_t> out;
  for (std::size_t j = 0; j < sol.x.size(); ++j) {
    if (!IsInteger(sol.x[j])) out.push_back(j);
  }
  return out;
}

std::size_t CountStrictlyInterior(const LpProblem& problem,
                                  const std::vector<Rational>& x) {
  std::size_t count = 0;
  for (std::size_t j = 0; j < x.size(); ++j) {
    const auto& b = problem.bounds[j];
    if (x[j] > b.lower && (b.upper.infinite() || x[j] < b.upper.value())) {
      ++count;
    }
  }
  return count;
}

LpProblem Relaxation(const SparseIP& inst) {
  LpProblem p;
  p.sense = inst.sense == Sense::kCover ? ObjectiveSense::kMin
                                        : ObjectiveSense::kMax;
  p.objective = inst.c;
  for (const UpperBound& dj : inst.d) p.bounds.push_back({Rational(0), dj});
  const Relation rel = inst.sense == Sense::kCover ? Relation::kGreaterEqual
                                                   : Relation::kLessEqual;
  auto rows = inst.Rows();
  for (std::size_t i = 0; i < inst.num_rows; ++i) {
    p.rows.push_back({std::move(rows[i]), rel, inst.b[i]});
  }
  return p;
}

}  // namespace sparseip::lp
