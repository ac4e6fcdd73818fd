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

#include "support.h"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <stdexcept>

namespace sparseip::testing {

Rational Q(const char* text) {
  const auto r = ParseRational(text);
  if (!r) throw std::invalid_argument(std::string("bad rational ") + text);
  return *r;
}

SparseIP MakeInstance(Sense sense, std::size_t m, std::size_t n,
                      const std::vector<EntrySpec>& entries,
                      const std::vector<const char*>& b,
                      const std::vector<const char*>& c,
                      const std::vector<const char*>& d) {
  SparseIP inst;
  inst.sense = sense;
  inst.num_rows = m;
  inst.num_cols = n;
  for (const auto& e : entries) inst.entries.push_back({e.row, e.col, Q(e.value)});
  std::sort(inst.entries.begin(), inst.entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.row, x.col) < std::tie(y.row, y.col);
  });
  for (const char* v : b) inst.b.push_back(Q(v));
  for (const char* v : c) inst.c.push_back(Q(v));
  for (const char* v : d) inst.d.push_back(*ParseUpperBound(v));
  return inst;
}

std::vector<Integer> Ints(const std::vector<int>& values) {
  std::vector<Integer> out;
  for (int v : values) out.emplace_back(v);
  return out;
}

std::vector<Rational> Activity(const SparseIP& inst, const std::vector<Integer>& x) {
  std::vector<Rational> act(inst.num_rows, Rational(0));
  for (const Entry& e : inst.entries) act[e.row] += e.value * Rational(x[e.col]);
  return act;
}

bool Feasible(const SparseIP& inst, const std::vector<Integer>& x) {
  if (x.size() != inst.num_cols) return false;
  for (std::size_t j = 0; j < x.size(); ++j) {
    if (sgn(x[j]) < 0) return false;
    if (inst.d[j].finite() && Rational(x[j]) > inst.d[j].value()) return false;
  }
  const auto act = Activity(inst, x);
  for (std::size_t i = 0; i < inst.num_rows; ++i) {
    if (inst.sense == Sense::kCover ? act[i] < inst.b[i] : act[i] > inst.b[i]) return false;
  }
  return true;
}

Rational Cost(const SparseIP& inst, const std::vector<Integer>& x) {
  Rational total = 0;
  for (std::size_t j = 0; j < x.size(); ++j) total += inst.c[j] * Rational(x[j]);
  return total;
}

std::optional<std::vector<Integer>> EnumerationBox(const SparseIP& inst) {
  std::vector<std::optional<Integer>> reach(inst.num_cols);
  for (const Entry& e : inst.entries) {
    const Rational q = inst.b[e.row] / e.value;
    Integer v;
    if (inst.sense == Sense::kCover) {
      mpz_cdiv_q(v.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      if (sgn(v) < 0) v = 0;
      if (!reach[e.col] || v > *reach[e.col]) reach[e.col] = v;
    } else {
      mpz_fdiv_q(v.get_mpz_t(), q.get_num_mpz_t(), q.get_den_mpz_t());
      if (!reach[e.col] || v < *reach[e.col]) reach[e.col] = v;
    }
  }
  std::vector<Integer> box(inst.num_cols);
  for (std::size_t j = 0; j < inst.num_cols; ++j) {
    std::optional<Integer> cap;
    if (inst.d[j].finite()) cap = inst.d[j].value().get_num();
    if (!reach[j]) {
      if (inst.sense == Sense::kCover || sgn(inst.c[j]) == 0) {
        box[j] = 0;
        continue;
      }
      if (!cap) return std::nullopt;
      box[j] = *cap;
      continue;
    }
    box[j] = cap ? std::min(*cap, *reach[j]) : *reach[j];
  }
  return box;
}

namespace {

// Calls visit on every point of the box in lexicographic order.
void ForEachPoint(const std::vector<Integer>& box,
                  const std::function<void(const std::vector<Integer>&)>& visit) {
  std::vector<Integer> x(box.size(), Integer(0));
  for (;;) {
    visit(x);
    std::size_t j = box.size();
    while (j > 0) {
      --j;
      if (x[j] < box[j]) {
        ++x[j];
        for (std::size_t t = j + 1; t < box.size(); ++t) x[t] = 0;
        break;
      }
      if (j == 0) return;
    }
    if (box.empty()) return;
  }
}

}  // namespace

std::optional<Enumeration> EnumerateAll(const SparseIP& inst, std::size_t max_points) {
  const auto box = EnumerationBox(inst);
  if (!box) return std::nullopt;
  double volume = 1;
  for (const Integer& u : *box) volume *= u.get_d() + 1;
  if (volume > static_cast<double>(max_points)) return std::nullopt;
  Enumeration result;
  ForEachPoint(*box, [&](const std::vector<Integer>& x) {
    ++result.points;
    if (!Feasible(inst, x)) return;
    const Rational cost = Cost(inst, x);
    const bool better = !result.feasible ||
                        (inst.sense == Sense::kCover ? cost < result.best : cost > result.best);
    if (better) {
      result.feasible = true;
      result.best = cost;
      result.argbest = x;
    }
  });
  return result;
}

std::vector<std::vector<Integer>> FeasiblePoints(const SparseIP& inst,
                                                 const std::vector<Integer>& box) {
  std::vector<std::vector<Integer>> out;
  ForEachPoint(box, [&](const std::vector<Integer>& x) {
    if (Feasible(inst, x)) out.push_back(x);
  });
  return out;
}

namespace {

struct Constraint {
  std::vector<Rational> a;
  Rational rhs;
};

// Unique solution of the square system, if it is nonsingular.
std::optional<std::vector<Rational>> SolveSquare(std::vector<Constraint> sys) {
  const std::size_t n = sys.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && sgn(sys[pivot].a[col]) == 0) ++pivot;
    if (pivot == n) return std::nullopt;
    std::swap(sys[pivot], sys[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || sgn(sys[r].a[col]) == 0) continue;
      const Rational f = sys[r].a[col] / sys[col].a[col];
      for (std::size_t t = 0; t < n; ++t) sys[r].a[t] -= f * sys[col].a[t];
      sys[r].rhs -= f * sys[col].rhs;
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = sys[i].rhs / sys[i].a[i];
  return x;
}

}  // namespace

VertexResult VertexOptimum(const lp::LpProblem& problem) {
  const std::size_t n = problem.num_vars();
  std::vector<Constraint> cons;
  for (const auto& row : problem.rows) {
    Constraint c{std::vector<Rational>(n, Rational(0)), row.rhs};
    for (const Term& t : row.coeffs) c.a[t.index] += t.value;
    cons.push_back(std::move(c));
  }
  for (std::size_t j = 0; j < n; ++j) {
    Constraint lo{std::vector<Rational>(n, Rational(0)), problem.bounds[j].lower};
    lo.a[j] = 1;
    cons.push_back(lo);
    if (!problem.bounds[j].upper.finite()) {
      throw std::invalid_argument("vertex enumeration needs finite upper bounds");
    }
    Constraint hi{std::vector<Rational>(n, Rational(0)), problem.bounds[j].upper.value()};
    hi.a[j] = 1;
    cons.push_back(hi);
  }
  auto feasible = [&](const std::vector<Rational>& x) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[j] < problem.bounds[j].lower || x[j] > problem.bounds[j].upper.value()) return false;
    }
    for (const auto& row : problem.rows) {
      Rational act = 0;
      for (const Term& t : row.coeffs) act += t.value * x[t.index];
      switch (row.relation) {
        case lp::Relation::kLessEqual: if (act > row.rhs) return false; break;
        case lp::Relation::kGreaterEqual: if (act < row.rhs) return false; break;
        case lp::Relation::kEqual: if (act != row.rhs) return false; break;
      }
    }
    return true;
  };
  VertexResult result;
  std::vector<std::size_t> pick;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (pick.size() == n) {
      std::vector<Constraint> sys;
      for (std::size_t p : pick) sys.push_back(cons[p]);
      const auto x = SolveSquare(std::move(sys));
      if (!x || !feasible(*x)) return;
      ++result.vertices;
      Rational value = 0;
      for (std::size_t j = 0; j < n; ++j) value += problem.objective[j] * (*x)[j];
      const bool better = !result.feasible ||
                          (problem.sense == lp::ObjectiveSense::kMax ? value > result.best
                                                                     : value < result.best);
      if (better) {
        result.feasible = true;
        result.best = value;
      }
      return;
    }
    for (std::size_t p = start; p < cons.size(); ++p) {
      pick.push_back(p);
      choose(p + 1);
      pick.pop_back();
    }
  };
  choose(0);
  return result;
}

std::string CheckIteratedIndependently(const SparseIP& inst, const pack::IteratedOutcome& out,
                                       std::size_t k) {
  const std::size_t n = inst.num_cols;
  if (out.x0.size() != n || out.x1.size() != n) return "solution length";
  std::vector<Integer> sum(n);
  for (std::size_t j = 0; j < n; ++j) {
    if (sgn(out.x0[j]) < 0) return "x0 negative";
    if (out.x1[j] != 0 && out.x1[j] != 1) return "x1 not 0-1";
    sum[j] = out.x0[j] + out.x1[j];
    if (inst.d[j].finite() && Rational(sum[j]) > inst.d[j].value()) return "x0 + x1 exceeds d";
  }
  if (Cost(inst, sum) < out.lp_value) return "(a) c.(x0 + x1) below the LP value";

  std::map<std::pair<std::size_t, std::size_t>, Rational> entry;
  for (const Entry& e : inst.entries) entry[{e.row, e.col}] = e.value;
  std::vector<std::size_t> per_row(inst.num_rows, 0);
  for (const auto& [i, j] : out.special) {
    if (!entry.count({i, j})) return "special pair is not a stored entry";
    ++per_row[i];
  }
  for (std::size_t i = 0; i < inst.num_rows; ++i) {
    if (per_row[i] > k) return "(b) row " + std::to_string(i) + " has more than k special entries";
  }

  std::vector<Rational> relaxed(inst.num_rows, Rational(0));
  std::vector<Rational> full(inst.num_rows, Rational(0));
  std::vector<Rational> largest(inst.num_rows, Rational(0));
  for (const Entry& e : inst.entries) {
    relaxed[e.row] += e.value * Rational(out.x0[e.col]);
    if (!out.special.count({e.row, e.col})) relaxed[e.row] += e.value * Rational(out.x1[e.col]);
    full[e.row] += e.value * Rational(sum[e.col]);
    largest[e.row] = std::max(largest[e.row], e.value);
  }
  for (std::size_t i = 0; i < inst.num_rows; ++i) {
    if (relaxed[i] > inst.b[i]) return "(c) row " + std::to_string(i) + " violated off S";
    if (full[i] > inst.b[i] + Rational(static_cast<unsigned long>(k)) * largest[i]) {
      return "row " + std::to_string(i) + " exceeds b + k max A";
    }
  }
  return "";
}

Rational Uniform(gen::Rng& rng, std::size_t den_bound, std::uint64_t lo_num_per_den,
                 std::uint64_t hi_num_per_den) {
  const std::uint64_t q = rng.Uniform(1, den_bound);
  const std::uint64_t lo = std::max<std::uint64_t>(1, lo_num_per_den * q);
  const std::uint64_t p = rng.Uniform(lo, hi_num_per_den * q);
  return Rational(Integer(static_cast<unsigned long>(p)), Integer(static_cast<unsigned long>(q)));
}

std::vector<Term> RandomRow(gen::Rng& rng, std::size_t k, std::size_t den) {
  const std::size_t size = rng.Uniform(1, k);
  std::vector<Term> row;
  for (std::size_t j = 0; j < size; ++j) {
    Rational v = Uniform(rng, den, 0, 1);
    v.canonicalize();
    row.push_back({j, v});
  }
  return row;
}

lp::LpProblem RandomTinyLp(gen::Rng& rng) {
  lp::LpProblem p;
  p.sense = rng.Coin() ? lp::ObjectiveSense::kMax : lp::ObjectiveSense::kMin;
  const std::size_t n = rng.Uniform(1, 4);
  const std::size_t m = rng.Uniform(0, 4);
  auto signed_value = [&](std::uint64_t hi) {
    Rational v = Uniform(rng, 5, 0, hi);
    v.canonicalize();
    if (rng.Uniform(0, 3) == 0) v = -v;
    if (rng.Uniform(0, 5) == 0) v = 0;
    return v;
  };
  for (std::size_t j = 0; j < n; ++j) {
    p.objective.push_back(signed_value(3));
    lp::VariableBounds b;
    b.lower = rng.Uniform(0, 3) == 0 ? signed_value(2) : Rational(0);
    Rational width = Uniform(rng, 5, 0, 4);
    width.canonicalize();
    b.upper = UpperBound(Rational(b.lower + width));
    p.bounds.push_back(b);
  }
  for (std::size_t i = 0; i < m; ++i) {
    lp::Row row;
    for (std::size_t j = 0; j < n; ++j) {
      if (rng.Uniform(0, 3) == 0) continue;
      const Rational v = signed_value(3);
      if (sgn(v) != 0) row.coeffs.push_back({j, v});
    }
    const std::uint64_t rel = rng.Uniform(0, 5);
    row.relation = rel < 3 ? lp::Relation::kLessEqual
                           : (rel < 5 ? lp::Relation::kGreaterEqual : lp::Relation::kEqual);
    row.rhs = signed_value(4);
    p.rows.push_back(std::move(row));
  }
  return p;
}

std::vector<std::pair<std::size_t, std::size_t>> RandomArcs(gen::Rng& rng, std::size_t n,
                                                            std::size_t d) {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t v = 0; v < n; ++v) {
    const std::size_t indeg = rng.Uniform(0, std::min(d, n - 1));
    std::set<std::size_t> sources;
    while (sources.size() < indeg) {
      const std::size_t u = rng.Uniform(0, n - 1);
      if (u != v) sources.insert(u);
    }
    for (std::size_t u : sources) arcs.emplace_back(u, v);
  }
  return arcs;
}

std::vector<std::pair<std::size_t, std::size_t>> RegularTournament(std::size_t d) {
  const std::size_t n = 2 * d + 1;
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t s = 1; s <= d; ++s) arcs.emplace_back(i, (i + s) % n);
  }
  return arcs;
}

bool ProperColoring(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                    const std::vector<int>& colors, int max_color) {
  if (colors.size() != n) return false;
  for (int c : colors) {
    if (c < 1 || c > max_color) return false;
  }
  for (const auto& [u, v] : arcs) {
    if (u != v && colors[u] == colors[v]) return false;
  }
  return true;
}

}  // namespace sparseip::testing
