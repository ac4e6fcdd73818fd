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

// Independent reference computations for the test suites. Nothing here
// calls the solver pipelines it is used to judge.

#ifndef SPARSEIP_TESTS_SUPPORT_H_
#define SPARSEIP_TESTS_SUPPORT_H_

#include <cstddef>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "sparseip/generators.h"
#include "sparseip/instance.h"
#include "sparseip/lp.h"
#include "sparseip/pack.h"

namespace sparseip::testing {

Rational Q(const char* text);

struct EntrySpec {
  std::size_t row;
  std::size_t col;
  const char* value;
};

SparseIP MakeInstance(Sense sense, std::size_t m, std::size_t n,
                      const std::vector<EntrySpec>& entries,
                      const std::vector<const char*>& b,
                      const std::vector<const char*>& c,
                      const std::vector<const char*>& d);

std::vector<Integer> Ints(const std::vector<int>& values);

// a_i . x for every row, computed directly from the entry list.
std::vector<Rational> Activity(const SparseIP& inst, const std::vector<Integer>& x);
bool Feasible(const SparseIP& inst, const std::vector<Integer>& x);
Rational Cost(const SparseIP& inst, const std::vector<Integer>& x);

// Per-column integer range containing every optimal solution, derived only
// from single-entry reasoning; nullopt marks an unbounded packing column.
std::optional<std::vector<Integer>> EnumerationBox(const SparseIP& inst);

struct Enumeration {
  bool feasible = false;
  Rational best;
  std::vector<Integer> argbest;  // first optimum in lexicographic order
  std::size_t points = 0;
};

// Visits every integer point of EnumerationBox. Returns nullopt when the box
// holds more than max_points points.
std::optional<Enumeration> EnumerateAll(const SparseIP& inst, std::size_t max_points);

// Feasible integer points of a box in lexicographic order.
std::vector<std::vector<Integer>> FeasiblePoints(const SparseIP& inst,
                                                 const std::vector<Integer>& box);

struct VertexResult {
  bool feasible = false;
  Rational best;
  std::size_t vertices = 0;
};

// Optimum over all basic points: every choice of n linearly independent
// constraints among rows and finite bounds, made tight and solved by exact
// elimination. Needs every variable to have a finite upper bound.
VertexResult VertexOptimum(const lp::LpProblem& problem);

// Lemma-type guarantees of an iterated outcome, recomputed from scratch.
// Returns the first failure or an empty string.
std::string CheckIteratedIndependently(const SparseIP& inst,
                                       const pack::IteratedOutcome& out,
                                       std::size_t k);

Rational Uniform(gen::Rng& rng, std::size_t den_bound, std::uint64_t lo_num_per_den,
                 std::uint64_t hi_num_per_den);

// Between 1 and k terms, coefficients in (0, 1] with denominators <= den.
std::vector<Term> RandomRow(gen::Rng& rng, std::size_t k, std::size_t den);

// At most 4 variables and 4 rows, finite bounds, mixed relations and signs.
lp::LpProblem RandomTinyLp(gen::Rng& rng);

// Arcs of a digraph on n nodes where every node has indegree <= d.
std::vector<std::pair<std::size_t, std::size_t>> RandomArcs(gen::Rng& rng, std::size_t n,
                                                            std::size_t d);

// Regular tournament on 2d + 1 nodes: i -> i + s (mod 2d + 1), s = 1..d.
std::vector<std::pair<std::size_t, std::size_t>> RegularTournament(std::size_t d);

// True iff no arc joins two nodes of equal color and all colors are in
// [1, max_color].
bool ProperColoring(std::size_t n, const std::vector<std::pair<std::size_t, std::size_t>>& arcs,
                    const std::vector<int>& colors, int max_color);

}  // namespace sparseip::testing

#endif  // SPARSEIP_TESTS_SUPPORT_H_
