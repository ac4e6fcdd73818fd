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

#include "sparseip/generators.h"

#include <algorithm>
#include <array>
#include <numeric>
#include <sstream>

#include "json.hpp"
#include "sparseip/errors.h"

namespace sparseip::gen {

std::uint64_t Rng::Uniform(std::uint64_t lo, std::uint64_t hi) {
  const std::uint64_t span = hi - lo;
  if (span == std::numeric_limits<std::uint64_t>::max()) return engine_();
  const std::uint64_t range = span + 1;
  // Rejection sampling keeps the draw exactly uniform.
  const std::uint64_t limit =
      std::numeric_limits<std::uint64_t>::max() -
      std::numeric_limits<std::uint64_t>::max() % range;
  std::uint64_t v;
  do {
    v = engine_();
  } while (v >= limit);
  return lo + v % range;
}

namespace {

[[noreturn]] void BadParam(const std::string& msg) {
  throw Error(ErrorCode::kInvalidArgument, "parameter error: " + msg);
}

Rational Draw(Rng& rng, std::size_t den_bound, std::uint64_t lo_mult,
              std::uint64_t hi_mult) {
  const std::uint64_t q = rng.Uniform(1, den_bound);
  const std::uint64_t p = rng.Uniform(lo_mult == 0 ? 1 : lo_mult * q, hi_mult * q);
  return MakeRational(Integer(static_cast<unsigned long>(p)),
                      Integer(static_cast<unsigned long>(q)));
}

std::vector<std::size_t> Choose(Rng& rng, std::size_t universe, std::size_t count) {
  std::vector<std::size_t> pool(universe);
  std::iota(pool.begin(), pool.end(), 0);
  for (std::size_t t = 0; t < count; ++t) {
    const std::size_t pick = rng.Uniform(t, universe - 1);
    std::swap(pool[t], pool[pick]);
  }
  pool.resize(count);
  std::sort(pool.begin(), pool.end());
  return pool;
}

}  // namespace

SparseIP RandomInstance(const RandomParams& p) {
  if (p.n == 0) BadParam("n must be positive");
  if (p.k == 0) BadParam("k must be positive");
  if (p.denominator_bound == 0) BadParam("denominator bound must be positive");
  const std::size_t dim = p.mode == SparsityMode::kRowSparse ? p.n : p.m;
  if (p.k > dim) BadParam("k exceeds the dimension it bounds");
  if (p.max_entry && (*p.max_entry <= 0 || *p.max_entry > 1)) {
    BadParam("max entry must lie in (0, 1]");
  }

  Rng rng(p.seed);
  SparseIP inst;
  inst.sense = p.sense;
  inst.num_rows = p.m;
  inst.num_cols = p.n;

  auto coefficient = [&]() -> Rational {
    if (p.max_entry) return *p.max_entry * Draw(rng, p.denominator_bound, 0, 1);
    return Draw(rng, p.denominator_bound, 0, 2);
  };

  std::vector<std::vector<std::size_t>> row_cols(p.m);
  if (p.mode == SparsityMode::kRowSparse) {
    for (std::size_t i = 0; i < p.m; ++i) {
      row_cols[i] = Choose(rng, p.n, rng.Uniform(1, p.k));
    }
  } else {
    std::vector<std::vector<bool>> has(p.n, std::vector<bool>(p.m, false));
    std::vector<std::size_t> col_count(p.n, 0);
    auto link = [&](std::size_t i, std::size_t j) {
      has[j][i] = true;
      ++col_count[j];
      row_cols[i].push_back(j);
    };
    if (p.sense == Sense::kCover) {
      // Anchor every row in a column with spare capacity first.
      if (p.m > p.n * p.k) BadParam("cannot cover every row within column sparsity k");
      for (std::size_t i = 0; i < p.m; ++i) {
        std::vector<std::size_t> open;
        for (std::size_t j = 0; j < p.n; ++j) {
          if (col_count[j] < p.k) open.push_back(j);
        }
        link(i, open[rng.Uniform(0, open.size() - 1)]);
      }
    }
    for (std::size_t j = 0; j < p.n; ++j) {
      const std::size_t target = rng.Uniform(1, p.k);
      if (col_count[j] >= target) continue;
      std::vector<std::size_t> free_rows;
      for (std::size_t i = 0; i < p.m; ++i) {
        if (!has[j][i]) free_rows.push_back(i);
      }
      const std::size_t need = target - col_count[j];
      for (std::size_t t : Choose(rng, free_rows.size(), need)) link(free_rows[t], j);
    }
    for (auto& cols : row_cols) std::sort(cols.begin(), cols.end());
  }
  for (std::size_t i = 0; i < p.m; ++i) {
    for (std::size_t j : row_cols[i]) inst.entries.push_back({i, j, coefficient()});
  }
  for (std::size_t i = 0; i < p.m; ++i) {
    inst.b.push_back(p.max_entry ? Rational(1) : Draw(rng, p.denominator_bound, 1, 3));
  }
  std::vector<bool> used(p.n, false);
  for (const Entry& e : inst.entries) used[e.col] = true;
  for (std::size_t j = 0; j < p.n; ++j) {
    const Rational cj = Draw(rng, p.denominator_bound, 0, 3);
    inst.c.push_back(used[j] ? cj : Rational(0));
  }
  for (std::size_t j = 0; j < p.n; ++j) {
    switch (p.d_mode) {
      case DMode::kUnit:
        inst.d.push_back(UpperBound(1));
        break;
      case DMode::kSmall:
        inst.d.push_back(UpperBound(static_cast<int>(rng.Uniform(1, 3))));
        break;
      case DMode::kMixed: {
        const std::uint64_t v = rng.Uniform(1, 4);
        inst.d.push_back(v == 4 ? UpperBound::Infinity()
                                : UpperBound(static_cast<int>(v)));
        break;
      }
      case DMode::kInfinite:
        inst.d.push_back(UpperBound::Infinity());
        break;
    }
  }
  return inst;
}

bool ParseSparsityMode(std::string_view text, SparsityMode& out) {
  if (text == "row-sparse") {
    out = SparsityMode::kRowSparse;
  } else if (text == "col-sparse") {
    out = SparsityMode::kColSparse;
  } else {
    return false;
  }
  return true;
}

bool ParseDMode(std::string_view text, DMode& out) {
  if (text == "unit") {
    out = DMode::kUnit;
  } else if (text == "small") {
    out = DMode::kSmall;
  } else if (text == "mixed") {
    out = DMode::kMixed;
  } else if (text == "inf") {
    out = DMode::kInfinite;
  } else {
    return false;
  }
  return true;
}

SparseIP GapFixture(std::string_view name, std::int64_t M) {
  if (M < 1) throw Error(ErrorCode::kInvalidArgument, "M must be at least 1");
  const Rational big(static_cast<long>(M));
  SparseIP inst;
  inst.sense = Sense::kCover;
  if (name == "naive-M") {
    inst.num_rows = 1;
    inst.num_cols = 1;
    inst.entries = {{0, 0, big}};
    inst.b = {Rational(1)};
    inst.c = {Rational(1)};
    inst.d = {UpperBound::Infinity()};
  } else if (name == "multiplicity-M") {
    inst.num_rows = 1;
    inst.num_cols = 2;
    inst.entries = {{0, 0, big}, {0, 1, big}};
    inst.b = {big + 1};
    inst.c = {Rational(0), Rational(1)};
    inst.d = {UpperBound(1), UpperBound::Infinity()};
  } else {
    throw Error(ErrorCode::kUnknownFixture,
                "unknown fixture '" + std::string(name) + "'");
  }
  return inst;
}

std::vector<std::size_t> Max3Lin2::Degrees() const {
  std::vector<std::size_t> deg(num_vars, 0);
  for (const Clause& c : clauses) {
    for (std::size_t v : c.vars) ++deg[v];
  }
  return deg;
}

std::size_t Max3Lin2::Unsatisfied(const std::vector<int>& assignment) const {
  std::size_t t = 0;
  for (const Clause& c : clauses) {
    const int sum = assignment[c.vars[0]] + assignment[c.vars[1]] + assignment[c.vars[2]];
    if (sum % 2 != c.parity) ++t;
  }
  return t;
}

Max3Lin2 ParseFormula(std::string_view text, std::size_t num_vars) {
  Max3Lin2 f;
  f.num_vars = num_vars;
  std::istringstream in{std::string(text)};
  std::string line;
  std::size_t lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.resize(hash);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream ls(line);
    long long a, b, c, parity;
    std::string rest;
    if (!(ls >> a >> b >> c >> parity) || (ls >> rest) || a < 0 || b < 0 || c < 0 ||
        (parity != 0 && parity != 1) || a == b || b == c || a == c) {
      throw Error(ErrorCode::kParse,
                  "parse failed: formula line " + std::to_string(lineno) +
                      " must be 'i j k C' with distinct i, j, k and C in {0,1}");
    }
    Clause cl;
    cl.vars[0] = a;
    cl.vars[1] = b;
    cl.vars[2] = c;
    cl.parity = static_cast<int>(parity);
    f.clauses.push_back(cl);
    f.num_vars = std::max<std::size_t>(f.num_vars, std::max({a, b, c}) + 1);
  }
  return f;
}

std::string SerializeFormula(const Max3Lin2& formula) {
  std::ostringstream out;
  for (const Clause& c : formula.clauses) {
    out << c.vars[0] << ' ' << c.vars[1] << ' ' << c.vars[2] << ' ' << c.parity << '\n';
  }
  return out.str();
}

namespace {

constexpr std::size_t kUnset = static_cast<std::size_t>(-1);

// Bits of a clause-local assignment: bit p (value 4, 2, 1 for p = 0, 1, 2)
// is the value of the clause's p-th variable.
int Bit(int bits, int p) { return (bits >> (2 - p)) & 1; }

// Row and column numbering shared by the instance and the certificate.
struct Layout {
  std::vector<std::size_t> degree;
  std::vector<std::array<std::size_t, 2>> literal_row;  // per variable
  std::vector<std::size_t> var_row;
  std::vector<std::array<std::size_t, 8>> clause_row;   // per clause, by bits
  std::vector<std::array<std::size_t, 2>> heavy_col;
  // unit_col[c][bits][p] is the first of three parallel columns.
  std::vector<std::array<std::array<std::size_t, 3>, 8>> unit_col;
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::size_t literal_rows = 0;

  explicit Layout(const Max3Lin2& f) : degree(f.Degrees()) {
    const std::size_t nv = f.num_vars;
    literal_row.assign(nv, {kUnset, kUnset});
    var_row.assign(nv, kUnset);
    heavy_col.assign(nv, {kUnset, kUnset});
    for (std::size_t i = 0; i < nv; ++i) {
      if (degree[i] == 0) continue;
      literal_row[i] = {rows, rows + 1};
      rows += 2;
    }
    literal_rows = rows;
    for (std::size_t i = 0; i < nv; ++i) {
      if (degree[i] > 0) var_row[i] = rows++;
    }
    clause_row.resize(f.clauses.size());
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
      clause_row[c].fill(kUnset);
      for (int bits = 0; bits < 8; ++bits) {
        if (Falsifies(f.clauses[c], bits)) clause_row[c][bits] = rows++;
      }
    }
    for (std::size_t i = 0; i < nv; ++i) {
      if (degree[i] == 0) continue;
      heavy_col[i] = {cols, cols + 1};
      cols += 2;
    }
    unit_col.resize(f.clauses.size());
    for (std::size_t c = 0; c < f.clauses.size(); ++c) {
      for (int bits = 0; bits < 8; ++bits) {
        unit_col[c][bits].fill(kUnset);
        if (clause_row[c][bits] == kUnset) continue;
        for (int p = 0; p < 3; ++p) {
          unit_col[c][bits][p] = cols;
          cols += 3;
        }
      }
    }
  }

  static bool Falsifies(const Clause& cl, int bits) {
    return (Bit(bits, 0) + Bit(bits, 1) + Bit(bits, 2)) % 2 != cl.parity;
  }
};

std::string VertexLabel(const Clause& cl, int bits) {
  std::string s;
  for (int p = 0; p < 3; ++p) {
    if (p) s += ",";
    s += "x" + std::to_string(cl.vars[p]) + "=" + std::to_string(Bit(bits, p));
  }
  return s;
}

int LocalBits(const Clause& cl, const std::vector<int>& assignment) {
  return (assignment[cl.vars[0]] << 2) | (assignment[cl.vars[1]] << 1) |
         assignment[cl.vars[2]];
}

int FlipBit(int p) { return 1 << (2 - p); }

}  // namespace

GadgetInstance HardnessInstance(const Max3Lin2& formula) {
  const Layout layout(formula);
  GadgetInstance g;
  SparseIP& inst = g.instance;
  inst.sense = Sense::kCover;
  inst.num_rows = layout.rows;
  inst.num_cols = layout.cols;
  inst.b.assign(layout.rows, Rational(0));
  inst.c.assign(layout.cols, Rational(0));
  inst.d.assign(layout.cols, UpperBound(1));
  g.row_labels.assign(layout.rows, "");
  g.col_labels.assign(layout.cols, "");
  g.literal_rows = layout.literal_rows;

  for (std::size_t i = 0; i < formula.num_vars; ++i) {
    if (layout.degree[i] == 0) continue;
    const Rational heavy(static_cast<unsigned long>(4 * layout.degree[i]));
    const std::string name = "x" + std::to_string(i);
    g.row_labels[layout.var_row[i]] = name;
    inst.b[layout.var_row[i]] = heavy;
    for (int a = 0; a < 2; ++a) {
      const std::size_t lit = layout.literal_row[i][a];
      const std::size_t col = layout.heavy_col[i][a];
      g.row_labels[lit] = name + "=" + std::to_string(a);
      inst.b[lit] = heavy;
      inst.c[col] = heavy;
      g.col_labels[col] = name + "--" + g.row_labels[lit];
      inst.entries.push_back({layout.var_row[i], col, heavy});
      inst.entries.push_back({lit, col, heavy});
    }
  }
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const Clause& cl = formula.clauses[c];
    for (int bits = 0; bits < 8; ++bits) {
      const std::size_t row = layout.clause_row[c][bits];
      if (row == kUnset) continue;
      g.row_labels[row] = VertexLabel(cl, bits);
      inst.b[row] = 3;
      for (int p = 0; p < 3; ++p) {
        const std::size_t lit = layout.literal_row[cl.vars[p]][Bit(bits, p)];
        for (int t = 0; t < 3; ++t) {
          const std::size_t col = layout.unit_col[c][bits][p] + t;
          inst.c[col] = 1;
          g.col_labels[col] = g.row_labels[row] + "--" + g.row_labels[lit] + "#" +
                              std::to_string(t);
          inst.entries.push_back({lit, col, Rational(1)});
          inst.entries.push_back({row, col, Rational(1)});
        }
      }
    }
  }
  std::sort(inst.entries.begin(), inst.entries.end(), [](const Entry& x, const Entry& y) {
    return std::tie(x.row, x.col) < std::tie(y.row, y.col);
  });
  return g;
}

std::string SerializeGadget(const GadgetInstance& gadget) {
  auto doc = nlohmann::ordered_json::parse(SerializeInstance(gadget.instance));
  doc["labels"] = {{"rows", gadget.row_labels},
                   {"cols", gadget.col_labels},
                   {"literal_rows", gadget.literal_rows}};
  return doc.dump();
}

HardnessCertificate CertifyHardness(const Max3Lin2& formula,
                                    const GadgetInstance& gadget,
                                    const std::vector<int>& assignment) {
  if (assignment.size() != formula.num_vars) {
    throw Error(ErrorCode::kInvalidArgument,
                "assignment has " + std::to_string(assignment.size()) +
                    " values for " + std::to_string(formula.num_vars) + " variables");
  }
  for (int a : assignment) {
    if (a != 0 && a != 1) throw Error(ErrorCode::kInvalidArgument, "assignment must be 0-1");
  }
  const Layout layout(formula);
  SPARSEIP_CHECK(layout.cols == gadget.instance.num_cols,
                 "gadget does not match the formula");
  std::vector<std::size_t> edges;
  for (std::size_t i = 0; i < formula.num_vars; ++i) {
    if (layout.degree[i] > 0) edges.push_back(layout.heavy_col[i][assignment[i]]);
  }
  HardnessCertificate cert;
  for (std::size_t c = 0; c < formula.clauses.size(); ++c) {
    const Clause& cl = formula.clauses[c];
    const int here = LocalBits(cl, assignment);
    const auto& unit = layout.unit_col[c];
    if (!Layout::Falsifies(cl, here)) {
      // Flip one literal: three parallel edges to the flipped literal.
      for (int p = 0; p < 3; ++p) {
        const int bits = here ^ FlipBit(p);
        for (int t = 0; t < 3; ++t) edges.push_back(unit[bits][p] + t);
      }
      // Flip all three: one edge of each parallel triple.
      const int all = here ^ 7;
      for (int p = 0; p < 3; ++p) edges.push_back(unit[all][p]);
    } else {
      ++cert.unsatisfied;
      // The three least-index edges at the assignment's own vertex.
      for (int t = 0; t < 3; ++t) edges.push_back(unit[here][0] + t);
      // The 6-cycle through the flipped literals and the two-flip vertices:
      // two edges from each parallel triple.
      for (int p = 0; p < 3; ++p) {
        for (int q = p + 1; q < 3; ++q) {
          const int bits = here ^ FlipBit(p) ^ FlipBit(q);
          for (int side : {p, q}) {
            for (int t = 0; t < 2; ++t) edges.push_back(unit[bits][side] + t);
          }
        }
      }
    }
  }
  std::sort(edges.begin(), edges.end());
  SPARSEIP_CHECK(std::adjacent_find(edges.begin(), edges.end()) == edges.end(),
                 "certificate picked an edge twice");
  std::vector<Integer> x(gadget.instance.num_cols, Integer(0));
  for (std::size_t e : edges) x[e] = 1;
  cert.edges = std::move(edges);
  cert.solution = MakeSolution(gadget.instance, std::move(x));
  cert.cost = cert.solution.objective;
  const std::size_t m = formula.clauses.size();
  SPARSEIP_CHECK(cert.cost == Rational(static_cast<unsigned long>(24 * m + 3 * cert.unsatisfied)),
                 "certificate cost differs from 24m + 3t");
  SPARSEIP_CHECK(IsFeasible(gadget.instance, cert.solution.x),
                 "certificate is not a feasible edge cover");
  return cert;
}

}  // namespace sparseip::gen
