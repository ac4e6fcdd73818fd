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

#include "sparseip/oracle.h"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "sparseip/errors.h"

namespace sparseip::oracle {

std::vector<Integer> SearchBox(const SparseIP& inst) {
  const auto cols = inst.Columns();
  std::vector<Integer> box(inst.num_cols);
  for (std::size_t j = 0; j < inst.num_cols; ++j) {
    std::optional<Integer> cap;
    if (inst.sense == Sense::kCover) {
      if (cols[j].empty()) {
        cap = Integer(0);
      } else {
        for (const Term& t : cols[j]) {
          const Integer need = std::max(Integer(0), Ceil(inst.b[t.index] / t.value));
          if (!cap || need > *cap) cap = need;
        }
      }
    } else {
      if (cols[j].empty() && inst.d[j].infinite()) {
        if (sgn(inst.c[j]) > 0) {
          throw Error(ErrorCode::kUnbounded,
                      "column " + std::to_string(j) + " is unbounded");
        }
        cap = Integer(0);
      }
      for (const Term& t : cols[j]) {
        const Integer fit = Floor(inst.b[t.index] / t.value);
        if (!cap || fit < *cap) cap = fit;
      }
    }
    if (inst.d[j].finite()) {
      const Integer dj = inst.d[j].value().get_num();
      box[j] = cap ? std::min(*cap, dj) : dj;
    } else {
      box[j] = *cap;
    }
  }
  return box;
}

namespace {

struct Variable {
  std::vector<Term> col;               // rows and coefficients
  Rational cost;
  Integer upper;
  std::vector<std::size_t> members;    // original columns, ascending
  std::vector<Integer> member_upper;
};

class BudgetExhausted {};

class Search {
 public:
  Search(const SparseIP& inst, std::vector<Variable> vars, std::uint64_t budget)
      : inst_(inst), vars_(std::move(vars)), budget_(budget) {
    // Branch on the most expensive / most profitable variables first.
    order_.resize(vars_.size());
    std::iota(order_.begin(), order_.end(), 0);
    std::stable_sort(order_.begin(), order_.end(), [this](std::size_t a, std::size_t b) {
      return vars_[a].cost > vars_[b].cost;
    });
    const std::size_t n = order_.size();
    const std::size_t m = inst.num_rows;
    suffix_cap_.assign(n + 1, std::vector<Rational>(m, Rational(0)));
    suffix_ratio_.assign(n + 1, std::vector<std::optional<Rational>>(m));
    suffix_value_.assign(n + 1, Rational(0));
    for (std::size_t pos = n; pos-- > 0;) {
      suffix_cap_[pos] = suffix_cap_[pos + 1];
      suffix_ratio_[pos] = suffix_ratio_[pos + 1];
      const Variable& v = vars_[order_[pos]];
      suffix_value_[pos] = suffix_value_[pos + 1] + v.cost * v.upper;
      for (const Term& t : v.col) {
        suffix_cap_[pos][t.index] += t.value * v.upper;
        if (v.upper > 0) {
          const Rational ratio = v.cost / t.value;
          auto& best = suffix_ratio_[pos][t.index];
          if (!best || ratio < *best) best = ratio;
        }
      }
    }
    assignment_.assign(n, Integer(0));
  }

  std::uint64_t nodes() const { return nodes_; }

  std::optional<std::vector<Integer>> RunCover() {
    // x = upper is the most covering point; if it fails nothing works.
    std::vector<Rational> residual(inst_.b);
    for (std::size_t p = 0; p < vars_.size(); ++p) {
      for (const Term& t : vars_[p].col) residual[t.index] -= t.value * vars_[p].upper;
    }
    for (const Rational& r : residual) {
      if (sgn(r) > 0) return std::nullopt;
    }
    best_value_ = 0;
    best_.assign(vars_.size(), Integer(0));
    for (std::size_t p = 0; p < vars_.size(); ++p) {
      best_value_ += vars_[p].cost * vars_[p].upper;
      best_[p] = vars_[p].upper;
    }
    std::vector<Rational> need(inst_.b);
    CoverNode(0, Rational(0), need);
    return best_;
  }

  std::vector<Integer> RunPack() {
    best_value_ = 0;
    best_.assign(vars_.size(), Integer(0));
    std::vector<Rational> slack(inst_.b);
    PackNode(0, Rational(0), slack);
    return best_;
  }

 private:
  void Tick() {
    if (++nodes_ > budget_) throw BudgetExhausted();
  }

  void CoverNode(std::size_t pos, const Rational& cost, std::vector<Rational>& need) {
    Tick();
    Rational bound = cost;
    for (std::size_t i = 0; i < need.size(); ++i) {
      if (sgn(need[i]) <= 0) continue;
      if (need[i] > suffix_cap_[pos][i]) return;
      const auto& ratio = suffix_ratio_[pos][i];
      if (ratio) bound = std::max(bound, Rational(cost + need[i] * *ratio));
    }
    if (bound >= best_value_) return;
    const bool covered = std::all_of(need.begin(), need.end(),
                                     [](const Rational& r) { return sgn(r) <= 0; });
    if (covered || pos == order_.size()) {
      if (!covered) return;
      best_value_ = cost;
      for (std::size_t p = 0; p < order_.size(); ++p) {
        best_[order_[p]] = p < pos ? assignment_[p] : Integer(0);
      }
      return;
    }
    const Variable& v = vars_[order_[pos]];
    for (Integer val = 0; val <= v.upper; ++val) {
      const Rational next = cost + v.cost * val;
      if (next >= best_value_) break;
      if (val > 0) {
        for (const Term& t : v.col) need[t.index] -= t.value;
      }
      assignment_[pos] = val;
      CoverNode(pos + 1, next, need);
    }
    for (const Term& t : v.col) need[t.index] += t.value * assignment_[pos];
    assignment_[pos] = 0;
  }

  void PackNode(std::size_t pos, const Rational& value, std::vector<Rational>& slack) {
    Tick();
    if (value + suffix_value_[pos] <= best_value_) return;
    if (pos == order_.size()) {
      best_value_ = value;
      for (std::size_t p = 0; p < order_.size(); ++p) best_[order_[p]] = assignment_[p];
      return;
    }
    const Variable& v = vars_[order_[pos]];
    // Largest value that fits the remaining slack.
    Integer top = v.upper;
    for (const Term& t : v.col) top = std::min(top, Floor(slack[t.index] / t.value));
    for (Integer val = top; val >= 0; --val) {
      for (const Term& t : v.col) slack[t.index] -= t.value * val;
      assignment_[pos] = val;
      PackNode(pos + 1, value + v.cost * val, slack);
      for (const Term& t : v.col) slack[t.index] += t.value * val;
    }
    assignment_[pos] = 0;
  }

  const SparseIP& inst_;
  std::vector<Variable> vars_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<std::size_t> order_;
  std::vector<std::vector<Rational>> suffix_cap_;
  std::vector<std::vector<std::optional<Rational>>> suffix_ratio_;
  std::vector<Rational> suffix_value_;
  std::vector<Integer> assignment_;
  std::vector<Integer> best_;
  Rational best_value_;
};

std::string ColumnKey(const std::vector<Term>& col, const Rational& cost) {
  std::string key = ToString(cost);
  for (const Term& t : col) key += "|" + std::to_string(t.index) + ":" + ToString(t.value);
  return key;
}

}  // namespace

OracleResult SolveExact(const SparseIP& inst, std::uint64_t node_budget) {
  RequireValid(inst);
  const std::vector<Integer> box = SearchBox(inst);
  const auto cols = inst.Columns();

  // Variables with zero cost are fixed: at their cap when covering, at 0
  // when packing.
  std::vector<Integer> fixed(inst.num_cols, Integer(0));
  std::vector<Variable> vars;
  std::map<std::string, std::size_t> by_key;
  for (std::size_t j = 0; j < inst.num_cols; ++j) {
    if (sgn(inst.c[j]) == 0) {
      if (inst.sense == Sense::kCover) fixed[j] = box[j];
      continue;
    }
    const std::string key = ColumnKey(cols[j], inst.c[j]);
    auto [it, inserted] = by_key.try_emplace(key, vars.size());
    if (inserted) vars.push_back({cols[j], inst.c[j], Integer(0), {}, {}});
    Variable& v = vars[it->second];
    v.upper += box[j];
    v.members.push_back(j);
    v.member_upper.push_back(box[j]);
  }

  SparseIP residual = inst;
  if (inst.sense == Sense::kCover) {
    const auto act = RowActivity(inst, fixed);
    for (std::size_t i = 0; i < inst.num_rows; ++i) residual.b[i] -= act[i];
  }

  std::vector<std::pair<std::vector<std::size_t>, std::vector<Integer>>> groups;
  for (const Variable& v : vars) groups.push_back({v.members, v.member_upper});

  OracleResult result;
  Search search(residual, std::move(vars), node_budget);
  std::optional<std::vector<Integer>> merged;
  try {
    if (inst.sense == Sense::kCover) {
      merged = search.RunCover();
    } else {
      merged = search.RunPack();
    }
  } catch (const BudgetExhausted&) {
    result.outcome = Outcome::kBudgetExceeded;
    result.nodes = search.nodes();
    return result;
  }
  result.nodes = search.nodes();
  if (!merged) {
    result.outcome = Outcome::kInfeasible;
    return result;
  }

  // Spread merged totals over member columns in index order.
  std::vector<Integer> x = fixed;
  for (std::size_t v = 0; v < groups.size(); ++v) {
    Integer left = (*merged)[v];
    for (std::size_t q = 0; q < groups[v].first.size(); ++q) {
      const Integer take = std::min(left, groups[v].second[q]);
      x[groups[v].first[q]] = take;
      left -= take;
    }
    SPARSEIP_CHECK(left == 0, "merged column total exceeds member bounds");
  }
  result.outcome = Outcome::kOptimal;
  result.solution = MakeSolution(inst, std::move(x));
  return result;
}

}  // namespace sparseip::oracle
