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

#include "sparseip/cover.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <utility>

#include "sparseip/errors.h"
#include "sparseip/lp.h"

namespace sparseip::cover {

namespace {

// Depth-first search over integer z with alpha.z < 1.
bool FindFloorVector(const std::vector<Rational>& alpha, const Rational& rho,
                     std::size_t search_bound, std::size_t pos,
                     std::vector<Integer>& z, Rational partial) {
  if (pos == alpha.size()) {
    Rational lifted = 0;
    for (std::size_t j = 0; j < alpha.size(); ++j) {
      lifted += alpha[j] * (z[j] + 1);
    }
    return lifted > rho;
  }
  if (sgn(alpha[pos]) == 0) {
    z[pos] = 0;
    return FindFloorVector(alpha, rho, search_bound, pos + 1, z, partial);
  }
  for (std::size_t v = 0; v <= search_bound; ++v) {
    const Rational next = partial + alpha[pos] * v;
    if (next >= 1) break;
    z[pos] = v;
    if (FindFloorVector(alpha, rho, search_bound, pos + 1, z, next)) return true;
  }
  return false;
}

Rational RowSum(const std::vector<Term>& row) {
  Rational s = 0;
  for (const Term& t : row) s += t.value;
  return s;
}

}  // namespace

std::optional<RoundingCounterexample> IsRoundable(
    const std::vector<Rational>& alpha, const Rational& rho,
    std::size_t search_bound) {
  for (const Rational& a : alpha) {
    if (a < 0) {
      throw Error(ErrorCode::kInvalidArgument, "negative coefficient");
    }
  }
  if (rho <= 1) throw Error(ErrorCode::kInvalidArgument, "rho must exceed 1");
  std::vector<Integer> z(alpha.size(), Integer(0));
  if (!FindFloorVector(alpha, rho, search_bound, 0, z, Rational(0))) {
    return std::nullopt;
  }
  Rational lifted = 0;
  for (std::size_t j = 0; j < alpha.size(); ++j) lifted += alpha[j] * (z[j] + 1);
  RoundingCounterexample out;
  for (std::size_t j = 0; j < alpha.size(); ++j) {
    out.x.push_back(sgn(alpha[j]) == 0 ? Rational(0)
                                       : Rational(z[j] + 1) / lifted);
  }
  return out;
}

RoundableRow MakeRoundable(const std::vector<Term>& row, std::size_t k) {
  if (row.size() > k) {
    throw Error(ErrorCode::kMalformedRow,
                "row has " + std::to_string(row.size()) +
                    " nonzeros, more than k = " + std::to_string(k));
  }
  for (const Term& t : row) {
    if (t.value <= 0 || t.value > 1) {
      throw Error(ErrorCode::kMalformedRow,
                  "coefficient of column " + std::to_string(t.index) +
                      " outside (0, 1]");
    }
  }
  RoundableRow out;
  out.coeffs = row;
  std::sort(out.coeffs.begin(), out.coeffs.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });

  const bool all_unit = std::all_of(row.begin(), row.end(),
                                    [](const Term& t) { return t.value == 1; });
  if (row.empty() || all_unit || RowSum(row) <= Rational(k) - 1) return out;

  // The sum exceeds k-1 with at most k terms, so the row has exactly k.
  std::vector<Term> sorted = row;
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Term& a, const Term& b) {
                     if (a.value != b.value) return a.value > b.value;
                     return a.index < b.index;
                   });
  std::size_t t = 0;
  while (t < sorted.size() && sorted[t].value == 1) ++t;
  const Integer v = Ceil(1 / sorted.back().value);

  std::vector<Term> replaced;
  for (std::size_t pos = 0; pos < sorted.size(); ++pos) {
    Rational coeff;
    if (pos < t) {
      coeff = 1;
    } else if (pos + 1 < sorted.size()) {
      coeff = Rational(v - 1, v);
    } else {
      coeff = Rational(1, v);
    }
    coeff.canonicalize();
    replaced.push_back({sorted[pos].index, coeff});
  }
  std::sort(replaced.begin(), replaced.end(),
            [](const Term& a, const Term& b) { return a.index < b.index; });
  out.coeffs = std::move(replaced);
  out.provenance = RoundableRow::Provenance::kReplaced;
  out.t = t;
  out.v = v;
  return out;
}

std::optional<KcCut> MakeKcCut(const SparseIP& normalized, std::size_t row,
                               const std::vector<std::size_t>& fixed) {
  if (row >= normalized.num_rows) {
    throw Error(ErrorCode::kIndexOutOfRange,
                "row " + std::to_string(row) + " out of range");
  }
  std::map<std::size_t, Rational> support;
  for (const Entry& e : normalized.entries) {
    if (e.row == row) support[e.col] = e.value;
  }
  std::set<std::size_t> in_f(fixed.begin(), fixed.end());
  Rational covered = 0;
  for (std::size_t j : in_f) {
    auto it = support.find(j);
    if (it == support.end()) {
      throw Error(ErrorCode::kIndexOutOfRange,
                  "column " + std::to_string(j) + " not in the row's support");
    }
    if (normalized.d[j].infinite()) return std::nullopt;
    covered += it->second * normalized.d[j].value();
  }
  if (covered >= 1) return std::nullopt;

  KcCut cut;
  cut.row = row;
  cut.fixed.assign(in_f.begin(), in_f.end());
  cut.rhs = 1 - covered;
  for (const auto& [j, a] : support) {
    if (in_f.count(j)) continue;
    cut.coeffs.push_back({j, std::min(a, cut.rhs)});
  }
  return cut;
}

CoverResult SolveCover(const SparseIP& inst, const CoverOptions& options) {
  RequireValid(inst);
  if (inst.sense != Sense::kCover) {
    throw Error(ErrorCode::kInvalidArgument, "SolveCover needs a covering instance");
  }
  const SparseIP normalized = NormalizeCover(inst);
  CoverResult result;
  CoverReport& report = result.report;
  report.k = normalized.RowSparsity();
  report.ratio_bound = Rational(report.k);
  const Rational k(report.k);

  // Roundable replacement rows; the KC cuts are taken over these.
  SparseIP replaced = normalized;
  replaced.entries.clear();
  const auto rows = normalized.Rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].empty()) {
      throw Error(ErrorCode::kInfeasible,
                  "row " + std::to_string(i) + " has no entries");
    }
    const RoundableRow rr = MakeRoundable(rows[i], report.k);
    if (rr.provenance == RoundableRow::Provenance::kReplaced) {
      ++report.rows_replaced;
    }
    for (const Term& t : rr.coeffs) replaced.entries.push_back({i, t.index, t.value});
  }

  lp::LpProblem problem = lp::Relaxation(replaced);
  const auto replaced_rows = replaced.Rows();
  std::set<std::pair<std::size_t, std::vector<std::size_t>>> added;
  lp::LpSolution sol;
  for (;;) {
    sol = lp::Solve(problem);
    ++report.lp_solves;
    if (sol.status == lp::Status::kInfeasible) {
      throw Error(ErrorCode::kInfeasible, "covering relaxation is infeasible");
    }
    SPARSEIP_CHECK(sol.status == lp::Status::kOptimal,
                   "covering relaxation cannot be unbounded");
    bool progress = false;
    for (std::size_t i = 0; i < replaced.num_rows; ++i) {
      std::vector<std::size_t> f;
      for (const Term& t : replaced_rows[i]) {
        const UpperBound& dj = replaced.d[t.index];
        if (dj.finite() && k * sol.x[t.index] >= dj.value()) f.push_back(t.index);
      }
      if (f.empty() || added.count({i, f})) continue;
      const auto cut = MakeKcCut(replaced, i, f);
      if (!cut) continue;
      Rational lhs = 0;
      for (const Term& t : cut->coeffs) lhs += t.value * sol.x[t.index];
      if (lhs >= cut->rhs) continue;
      added.insert({i, f});
      problem.rows.push_back({cut->coeffs, lp::Relation::kGreaterEqual, cut->rhs});
      ++report.cuts_added;
      progress = true;
    }
    if (!progress) break;
  }
  SPARSEIP_CHECK(report.cuts_added <= replaced.num_rows << std::min<std::size_t>(report.k, 60),
                 "more knapsack-cover cuts than (row, F) pairs");
  report.lp_value = sol.value;

  std::vector<Integer> x(inst.num_cols);
  for (std::size_t j = 0; j < inst.num_cols; ++j) {
    x[j] = Floor(k * sol.x[j]);
    if (inst.d[j].finite() && x[j] > inst.d[j].value()) x[j] = inst.d[j].value().get_num();
  }
  SPARSEIP_CHECK(IsFeasible(inst, x), "rounded covering solution is infeasible");

  if (options.trim) {
    const auto cols = inst.Columns();
    auto activity = RowActivity(inst, x);
    for (std::size_t j = 0; j < inst.num_cols; ++j) {
      const Integer floor_target = Ceil(sol.x[j]);
      while (x[j] > floor_target) {
        bool ok = true;
        for (const Term& t : cols[j]) {
          if (activity[t.index] - t.value < inst.b[t.index]) {
            ok = false;
            break;
          }
        }
        if (!ok) break;
        for (const Term& t : cols[j]) activity[t.index] -= t.value;
        x[j] -= 1;
        ++report.units_trimmed;
      }
    }
    SPARSEIP_CHECK(IsFeasible(inst, x), "trimmed covering solution is infeasible");
  }

  result.solution = MakeSolution(inst, std::move(x));
  SPARSEIP_CHECK(result.solution.objective <= k * report.lp_value,
                 "covering cost exceeds k times the LP value");
  return result;
}

}  // namespace sparseip::cover
