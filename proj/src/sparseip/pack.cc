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

#include "sparseip/pack.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "sparseip/errors.h"
#include "sparseip/lp.h"

namespace sparseip::pack {

namespace {

struct IteratedConfig {
  std::size_t threshold = 0;
  bool extract_cycles = false;
};

void RequirePreprocessed(const SparseIP& inst) {
  for (const Entry& e : inst.entries) {
    if (e.value > inst.b[e.row]) {
      throw Error(ErrorCode::kInvalidArgument,
                  "entry (" + std::to_string(e.row) + "," +
                      std::to_string(e.col) + ") exceeds b; preprocess first");
    }
  }
}

void RequireBounded(const SparseIP& inst) {
  const auto cols = inst.Columns();
  for (std::size_t j = 0; j < inst.num_cols; ++j) {
    if (cols[j].empty() && sgn(inst.c[j]) > 0 && inst.d[j].infinite()) {
      throw Error(ErrorCode::kUnbounded,
                  "column " + std::to_string(j) +
                      " has positive profit, no rows and no upper bound");
    }
  }
}

std::size_t Find(std::vector<std::size_t>& parent, std::size_t v) {
  while (parent[v] != v) {
    parent[v] = parent[parent[v]];
    v = parent[v];
  }
  return v;
}

// One edge per cycle of the graph (rows, columns in `active`); columns with a
// single row are loops. Throws kStructureViolation when a component has more
// than one cycle.
std::vector<std::size_t> CycleEdges(const SparseIP& inst,
                                    const std::vector<std::vector<Term>>& cols,
                                    const std::vector<std::size_t>& active) {
  const std::size_t m = inst.num_rows;
  std::vector<std::size_t> parent(m);
  std::iota(parent.begin(), parent.end(), 0);
  std::vector<std::size_t> cycle_edges;
  std::vector<std::size_t> cycle_of_edge;
  for (std::size_t j : active) {
    SPARSEIP_CHECK(!cols[j].empty() && cols[j].size() <= 2,
                   "2-CS cycle extraction on a column with no or many rows");
    const std::size_t u = cols[j].front().index;
    const std::size_t v = cols[j].back().index;
    const std::size_t ru = Find(parent, u), rv = Find(parent, v);
    if (ru == rv) {
      cycle_edges.push_back(j);
    } else {
      parent[ru] = rv;
    }
  }
  // Each component may hold at most one cycle edge.
  std::vector<int> per_component(m, 0);
  for (std::size_t j : cycle_edges) {
    if (++per_component[Find(parent, cols[j].front().index)] > 1) {
      throw Error(ErrorCode::kStructureViolation,
                  "fractional support has a component with two cycles");
    }
  }
  return cycle_edges;
}

Rational Dot(const std::vector<Rational>& c, const std::vector<Integer>& x) {
  Rational total = 0;
  for (std::size_t j = 0; j < c.size(); ++j) total += c[j] * x[j];
  return total;
}

IteratedOutcome RunIterated(const SparseIP& inst, const IteratedConfig& cfg) {
  RequirePreprocessed(inst);
  RequireBounded(inst);
  const std::size_t n = inst.num_cols;
  const std::size_t m = inst.num_rows;
  const auto rows = inst.Rows();
  const auto cols = inst.Columns();

  IteratedOutcome out;
  const lp::LpSolution first = lp::Solve(lp::Relaxation(inst));
  if (first.status == lp::Status::kUnbounded) {
    throw Error(ErrorCode::kUnbounded, "packing relaxation is unbounded");
  }
  SPARSEIP_CHECK(first.status == lp::Status::kOptimal,
                 "packing relaxation must be feasible at x = 0");
  out.lp_value = first.value;
  out.x0.resize(n);
  out.x1.assign(n, Integer(0));
  out.matching.assign(n, Integer(0));
  for (std::size_t j = 0; j < n; ++j) out.x0[j] = Floor(first.x[j]);

  std::vector<std::size_t> active_cols = lp::FractionalSupport(first);
  std::vector<bool> active_row(m, true);
  std::size_t num_active_rows = m;
  out.trace.push_back({first.value, num_active_rows, active_cols.size()});

  if (cfg.extract_cycles) {
    const auto cycle = CycleEdges(inst, cols, active_cols);
    for (std::size_t j : cycle) out.matching[j] = 1;
    std::erase_if(active_cols, [&](std::size_t j) { return out.matching[j] == 1; });
  }

  while (!active_cols.empty()) {
    // Residual LP over J' in [0,1]^J'. Active rows carry no special entries.
    std::vector<std::size_t> local(n, n);
    for (std::size_t p = 0; p < active_cols.size(); ++p) local[active_cols[p]] = p;
    lp::LpProblem residual;
    residual.sense = lp::ObjectiveSense::kMax;
    for (std::size_t j : active_cols) {
      residual.objective.push_back(inst.c[j]);
      residual.bounds.push_back({Rational(0), UpperBound(Rational(1))});
    }
    for (std::size_t i = 0; i < m; ++i) {
      if (!active_row[i]) continue;
      lp::Row row;
      row.relation = lp::Relation::kLessEqual;
      row.rhs = inst.b[i];
      for (const Term& t : rows[i]) {
        row.rhs -= t.value * (out.x0[t.index] + out.x1[t.index]);
        if (local[t.index] != n) row.coeffs.push_back({local[t.index], t.value});
      }
      SPARSEIP_CHECK(row.rhs >= 0, "iterated solver left a row overfull");
      if (!row.coeffs.empty()) residual.rows.push_back(std::move(row));
    }
    const lp::LpSolution sol = lp::Solve(residual);
    SPARSEIP_CHECK(sol.status == lp::Status::kOptimal,
                   "residual LP must be feasible at x = 0");
    out.trace.push_back({sol.value, num_active_rows, active_cols.size()});

    std::vector<std::size_t> still;
    for (std::size_t p = 0; p < active_cols.size(); ++p) {
      if (sgn(sol.x[p]) == 0) continue;
      if (sol.x[p] == 1) {
        out.x1[active_cols[p]] = 1;
        continue;
      }
      still.push_back(active_cols[p]);
    }
    active_cols = std::move(still);
    if (active_cols.empty()) break;

    std::vector<bool> in_active(n, false);
    for (std::size_t j : active_cols) in_active[j] = true;
    bool dropped = false;
    for (std::size_t i = 0; i < m; ++i) {
      if (!active_row[i]) continue;
      std::size_t count = 0;
      for (const Term& t : rows[i]) count += in_active[t.index] ? 1 : 0;
      if (count > cfg.threshold) continue;
      for (const Term& t : rows[i]) {
        if (in_active[t.index]) out.special.insert({i, t.index});
      }
      active_row[i] = false;
      --num_active_rows;
      dropped = true;
    }
    SPARSEIP_CHECK(dropped, "iterated solver made no progress");
  }
  return out;
}

std::vector<Integer> ClassToVector(std::size_t n,
                                   const std::vector<std::size_t>& members) {
  std::vector<Integer> y(n, Integer(0));
  for (std::size_t j : members) y[j] = 1;
  return y;
}

PackResult Finish(const SparseIP& original, const PackPreprocessResult& pre,
                  std::vector<std::vector<Integer>> candidates,
                  std::vector<std::string> names, PackReport report) {
  std::size_t best = 0;
  for (std::size_t t = 0; t < candidates.size(); ++t) {
    const Rational value = Dot(pre.reduced.c, candidates[t]);
    report.candidates.push_back({names[t], value});
    if (value > report.candidates[best].value) best = t;
  }
  SPARSEIP_CHECK(!candidates.empty(), "no candidate solutions");
  report.chosen = best;
  report.deleted_cols = pre.deleted_cols.size();
  PackResult result;
  result.solution = MakeSolution(original, ExpandSolution(pre, candidates[best]));
  result.report = std::move(report);
  SPARSEIP_CHECK(IsFeasible(original, result.solution.x),
                 "chosen packing solution is infeasible");
  SPARSEIP_CHECK(result.solution.objective * result.report.ratio_bound >=
                     result.report.lp_value,
                 "packing value below LP value over the ratio bound");
  return result;
}

void RequirePack(const SparseIP& inst) {
  RequireValid(inst);
  if (inst.sense != Sense::kPack) {
    throw Error(ErrorCode::kInvalidArgument, "packing solver needs a packing instance");
  }
}

}  // namespace

IteratedOutcome IteratedSolve(const SparseIP& inst) {
  RequirePack(inst);
  IteratedConfig cfg;
  cfg.threshold = inst.ColSparsity();
  return RunIterated(inst, cfg);
}

std::string CheckIteratedOutcome(const SparseIP& inst,
                                 const IteratedOutcome& out, std::size_t k) {
  const std::size_t n = inst.num_cols;
  for (std::size_t j = 0; j < n; ++j) {
    if (out.x0[j] < 0) return "x0 negative at " + std::to_string(j);
    if (out.x1[j] != 0 && out.x1[j] != 1) return "x1 not 0-1 at " + std::to_string(j);
    if (inst.d[j].finite() && out.x0[j] + out.x1[j] > inst.d[j].value()) {
      return "x0 + x1 exceeds d at " + std::to_string(j);
    }
  }
  std::vector<std::size_t> per_row(inst.num_rows, 0);
  for (const auto& [i, j] : out.special) ++per_row[i];
  for (std::size_t i = 0; i < inst.num_rows; ++i) {
    if (per_row[i] > k) return "row " + std::to_string(i) + " has too many special entries";
  }
  std::vector<Rational> relaxed(inst.num_rows, Rational(0));
  std::vector<Rational> full(inst.num_rows, Rational(0));
  std::vector<Rational> max_entry(inst.num_rows, Rational(0));
  for (const Entry& e : inst.entries) {
    relaxed[e.row] += e.value * out.x0[e.col];
    if (!out.special.count({e.row, e.col})) relaxed[e.row] += e.value * out.x1[e.col];
    full[e.row] += e.value * (out.x0[e.col] + out.x1[e.col]);
    max_entry[e.row] = std::max(max_entry[e.row], e.value);
  }
  for (std::size_t i = 0; i < inst.num_rows; ++i) {
    if (relaxed[i] > inst.b[i]) {
      return "A x0 + A_{S->0} x1 exceeds b at row " + std::to_string(i);
    }
    if (full[i] > inst.b[i] + Rational(k) * max_entry[i]) {
      return "row " + std::to_string(i) + " violated by more than k max_j A_ij";
    }
  }
  Rational value = Dot(inst.c, out.x0) + Dot(inst.c, out.x1);
  if (!out.matching.empty()) value += Dot(inst.c, out.matching);
  if (value < out.lp_value) return "c.(x0 + x1) below the LP value";
  return "";
}

std::size_t ConflictDigraph::MaxIndegree() const {
  std::size_t best = 0;
  for (const auto& v : in) best = std::max(best, v.size());
  return best;
}

std::size_t ConflictDigraph::NumArcs() const {
  std::size_t total = 0;
  for (const auto& v : out) total += v.size();
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> ConflictDigraph::Arcs() const {
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (std::size_t u = 0; u < out.size(); ++u) {
    for (std::size_t v : out[u]) arcs.push_back({u, v});
  }
  return arcs;
}

ConflictDigraph MakeDigraph(
    std::size_t num_nodes,
    const std::vector<std::pair<std::size_t, std::size_t>>& arcs) {
  ConflictDigraph g;
  g.nodes.resize(num_nodes);
  std::iota(g.nodes.begin(), g.nodes.end(), 0);
  g.out.assign(num_nodes, {});
  g.in.assign(num_nodes, {});
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const auto& [u, v] : arcs) {
    if (u >= num_nodes || v >= num_nodes) {
      throw Error(ErrorCode::kIndexOutOfRange, "arc endpoint out of range");
    }
    if (u == v || !seen.insert({u, v}).second) continue;
    g.out[u].push_back(v);
    g.in[v].push_back(u);
  }
  for (auto& list : g.out) std::sort(list.begin(), list.end());
  for (auto& list : g.in) std::sort(list.begin(), list.end());
  return g;
}

ConflictDigraph BuildConflictDigraph(const SparseIP& inst,
                                     const IteratedOutcome& out) {
  std::vector<std::size_t> position(inst.num_cols, inst.num_cols);
  std::vector<std::size_t> nodes;
  for (std::size_t j = 0; j < inst.num_cols; ++j) {
    if (out.x1[j] == 1) {
      position[j] = nodes.size();
      nodes.push_back(j);
    }
  }
  const auto rows = inst.Rows();
  std::vector<std::pair<std::size_t, std::size_t>> arcs;
  for (const auto& [i, j] : out.special) {
    if (position[j] == inst.num_cols) continue;
    for (const Term& t : rows[i]) {
      if (t.index != j && position[t.index] != inst.num_cols) {
        arcs.push_back({position[j], position[t.index]});
      }
    }
  }
  ConflictDigraph g = MakeDigraph(nodes.size(), arcs);
  g.nodes = std::move(nodes);
  return g;
}

std::vector<int> ColorDigraph(const ConflictDigraph& g, std::size_t d) {
  const std::size_t n = g.out.size();
  if (g.MaxIndegree() > d) {
    throw Error(ErrorCode::kDegreeContractViolated,
                "digraph has indegree " + std::to_string(g.MaxIndegree()) +
                    " > " + std::to_string(d));
  }
  std::vector<bool> removed(n, false);
  std::vector<std::size_t> outdeg(n);
  for (std::size_t u = 0; u < n; ++u) outdeg[u] = g.out[u].size();
  std::vector<std::size_t> order;
  order.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    std::size_t pick = n;
    for (std::size_t u = 0; u < n; ++u) {
      if (!removed[u] && outdeg[u] <= d) {
        pick = u;
        break;
      }
    }
    if (pick == n) {
      throw Error(ErrorCode::kDegreeContractViolated,
                  "no node of outdegree <= " + std::to_string(d));
    }
    removed[pick] = true;
    order.push_back(pick);
    for (std::size_t w : g.in[pick]) {
      if (!removed[w]) --outdeg[w];
    }
  }
  std::vector<int> color(n, 0);
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    const std::size_t u = *it;
    std::vector<bool> used(2 * d + 3, false);
    for (std::size_t w : g.out[u]) {
      if (color[w] > 0 && color[w] < static_cast<int>(used.size())) used[color[w]] = true;
    }
    for (std::size_t w : g.in[u]) {
      if (color[w] > 0 && color[w] < static_cast<int>(used.size())) used[color[w]] = true;
    }
    int c = 1;
    while (used[c]) ++c;
    SPARSEIP_CHECK(c <= static_cast<int>(2 * d + 1), "coloring exceeded 2d+1 colors");
    color[u] = c;
  }
  return color;
}

Decomposition Decompose(const SparseIP& inst, const IteratedOutcome& out,
                        std::size_t k) {
  const ConflictDigraph g = BuildConflictDigraph(inst, out);
  SPARSEIP_CHECK(g.MaxIndegree() <= k * k, "conflict digraph indegree exceeds k^2");
  Decomposition dec;
  if (g.nodes.empty()) return dec;
  const std::vector<int> color = ColorDigraph(g, k * k);
  const int used = *std::max_element(color.begin(), color.end());
  std::vector<std::vector<std::size_t>> members(used);
  for (std::size_t p = 0; p < g.nodes.size(); ++p) {
    members[color[p] - 1].push_back(g.nodes[p]);
  }
  for (const auto& cls : members) {
    dec.classes.push_back(ClassToVector(inst.num_cols, cls));
    SPARSEIP_CHECK(IsFeasible(inst, dec.classes.back()),
                   "decomposition class is infeasible");
  }
  return dec;
}

PackResult SolvePack(const SparseIP& inst) {
  RequirePack(inst);
  const PackPreprocessResult pre = PreprocessPack(inst);
  const SparseIP& red = pre.reduced;
  PackReport report;
  report.variant = "pack-general";
  report.k = red.ColSparsity();
  report.ratio_bound = Rational(2 * report.k * report.k + 2);

  IteratedConfig cfg;
  cfg.threshold = report.k;
  const IteratedOutcome out = RunIterated(red, cfg);
  const std::string problem = CheckIteratedOutcome(red, out, report.k);
  SPARSEIP_CHECK(problem.empty(), problem);
  report.lp_value = out.lp_value;
  report.iterations = out.trace.size();

  const Decomposition dec = Decompose(red, out, report.k);
  SPARSEIP_CHECK(dec.classes.size() <= 2 * report.k * report.k + 1,
                 "decomposition has more than 2k^2+1 classes");
  std::vector<std::vector<Integer>> candidates{out.x0};
  std::vector<std::string> names{"x0"};
  for (std::size_t t = 0; t < dec.classes.size(); ++t) {
    candidates.push_back(dec.classes[t]);
    names.push_back("y" + std::to_string(t + 1));
  }
  return Finish(inst, pre, std::move(candidates), std::move(names), std::move(report));
}

PackResult SolvePack2cs(const SparseIP& inst) {
  RequirePack(inst);
  if (inst.ColSparsity() > 2) {
    throw Error(ErrorCode::kInvalidArgument, "pack-2cs needs column sparsity <= 2");
  }
  const PackPreprocessResult pre = PreprocessPack(inst);
  const SparseIP& red = pre.reduced;
  PackReport report;
  report.variant = "pack-2cs";
  report.k = red.ColSparsity();
  report.ratio_bound = Rational(4);

  IteratedConfig cfg;
  cfg.threshold = 1;
  cfg.extract_cycles = true;
  const IteratedOutcome out = RunIterated(red, cfg);
  const std::string problem = CheckIteratedOutcome(red, out, 1);
  SPARSEIP_CHECK(problem.empty(), problem);
  SPARSEIP_CHECK(IsFeasible(red, out.matching), "cycle edge set M is infeasible");
  report.lp_value = out.lp_value;
  report.iterations = out.trace.size();

  std::vector<std::vector<Integer>> candidates{out.x0};
  std::vector<std::string> names{"x0"};
  if (std::any_of(out.matching.begin(), out.matching.end(),
                  [](const Integer& v) { return v != 0; })) {
    candidates.push_back(out.matching);
    names.push_back("M");
  }

  // Two-class split: breadth-first 2-coloring of the undirected conflict
  // graph; every row carries at most one special entry here.
  const ConflictDigraph g = BuildConflictDigraph(red, out);
  const std::size_t nn = g.nodes.size();
  std::vector<std::vector<std::size_t>> adj(nn);
  for (std::size_t u = 0; u < nn; ++u) {
    for (std::size_t v : g.out[u]) {
      adj[u].push_back(v);
      adj[v].push_back(u);
    }
  }
  std::vector<int> side(nn, -1);
  bool bipartite = true;
  for (std::size_t s = 0; s < nn && bipartite; ++s) {
    if (side[s] != -1) continue;
    side[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty() && bipartite) {
      const std::size_t u = queue.front();
      queue.pop_front();
      for (std::size_t v : adj[u]) {
        if (side[v] == -1) {
          side[v] = 1 - side[u];
          queue.push_back(v);
        } else if (side[v] == side[u]) {
          bipartite = false;
          break;
        }
      }
    }
  }
  if (bipartite) {
    std::vector<std::size_t> first, second;
    for (std::size_t p = 0; p < nn; ++p) {
      (side[p] == 0 ? first : second).push_back(g.nodes[p]);
    }
    int t = 0;
    for (const auto* cls : {&first, &second}) {
      candidates.push_back(ClassToVector(red.num_cols, *cls));
      SPARSEIP_CHECK(IsFeasible(red, candidates.back()), "2-CS class is infeasible");
      names.push_back("y" + std::to_string(++t));
    }
  } else {
    report.fallback_used = true;
    report.ratio_bound = Rational(11);
    const Decomposition dec = Decompose(red, out, 2);
    for (std::size_t t = 0; t < dec.classes.size(); ++t) {
      candidates.push_back(dec.classes[t]);
      names.push_back("y" + std::to_string(t + 1));
    }
  }
  return Finish(inst, pre, std::move(candidates), std::move(names), std::move(report));
}

std::optional<Rational> Width(const SparseIP& inst) {
  std::optional<Rational> w;
  for (const Entry& e : inst.entries) {
    const Rational r = inst.b[e.row] / e.value;
    if (!w || r < *w) w = r;
  }
  return w;
}

PackResult SolvePackWidth(const SparseIP& inst) {
  RequirePack(inst);
  const PackPreprocessResult pre = PreprocessPack(inst);
  // Scale rows to b = 1; rows with b = 0 are empty after preprocessing.
  SparseIP norm = pre.reduced;
  for (Entry& e : norm.entries) e.value /= norm.b[e.row];
  for (Rational& bi : norm.b) bi = 1;

  PackReport report;
  report.variant = "pack-width";
  report.k = norm.ColSparsity();
  const std::optional<Rational> width = Width(norm);
  const Rational k(report.k);
  report.width_infinite = !width.has_value();
  if (width) {
    report.width = *width;
    if (*width <= k) {
      throw Error(ErrorCode::kWidthTooSmall,
                  "width " + ToString(*width) + " is not above k = " +
                      std::to_string(report.k));
    }
    report.ratio_bound = 1 + 2 * k / (*width - k);
  } else {
    report.ratio_bound = 1;
  }

  IteratedConfig cfg;
  cfg.threshold = report.k;
  const IteratedOutcome out = RunIterated(norm, cfg);
  const std::string problem = CheckIteratedOutcome(norm, out, report.k);
  SPARSEIP_CHECK(problem.empty(), problem);
  report.lp_value = out.lp_value;
  report.iterations = out.trace.size();

  std::vector<Integer> xhat(norm.num_cols);
  for (std::size_t j = 0; j < norm.num_cols; ++j) xhat[j] = out.x0[j] + out.x1[j];
  const auto rows = norm.Rows();
  std::optional<Rational> last_value;
  for (;;) {
    const auto act = RowActivity(norm, xhat);
    std::vector<std::size_t> violated;
    for (std::size_t i = 0; i < norm.num_rows; ++i) {
      if (act[i] > 1) violated.push_back(i);
    }
    if (!report.violated_trace.empty()) {
      SPARSEIP_CHECK(violated.size() < report.violated_trace.back(),
                     "reducer did not shrink the violated set");
    }
    report.violated_trace.push_back(violated.size());
    if (violated.empty()) break;
    SPARSEIP_CHECK(width.has_value(), "violation without any entries");

    lp::LpProblem reduce;
    reduce.sense = lp::ObjectiveSense::kMax;
    reduce.objective = norm.c;
    for (std::size_t j = 0; j < norm.num_cols; ++j) {
      reduce.bounds.push_back({Rational(0), UpperBound(Rational(xhat[j]))});
    }
    const Rational cap = 1 - k / *width;
    for (std::size_t i : violated) {
      reduce.rows.push_back({rows[i], lp::Relation::kLessEqual, cap});
    }
    const lp::LpSolution sol = lp::Solve(reduce);
    SPARSEIP_CHECK(sol.status == lp::Status::kOptimal, "reducer LP must be feasible");
    if (last_value) {
      SPARSEIP_CHECK(sol.value >= *last_value, "reducer LP value decreased");
    }
    last_value = sol.value;
    report.reducer_values.push_back(sol.value);
    for (std::size_t j = 0; j < norm.num_cols; ++j) xhat[j] = Ceil(sol.x[j]);
  }

  PackPreprocessResult lifted = pre;
  lifted.reduced = norm;
  return Finish(inst, lifted, {xhat}, {"x"}, std::move(report));
}

}  // namespace sparseip::pack
