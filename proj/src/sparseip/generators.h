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

#ifndef SPARSEIP_GENERATORS_H_
#define SPARSEIP_GENERATORS_H_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include "sparseip/instance.h"

namespace sparseip::gen {

// Portable uniform draws on top of mt19937_64 (whose output sequence is
// fixed by the standard, unlike the std distributions).
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}
  // Uniform in [lo, hi].
  std::uint64_t Uniform(std::uint64_t lo, std::uint64_t hi);
  bool Coin() { return Uniform(0, 1) == 1; }

 private:
  std::mt19937_64 engine_;
};

enum class SparsityMode { kRowSparse, kColSparse };

enum class DMode {
  kUnit,      // all 1
  kSmall,     // {1, 2, 3}
  kMixed,     // {1, 2, 3, inf}
  kInfinite,  // all inf
};

struct RandomParams {
  std::uint64_t seed = 0;
  Sense sense = Sense::kCover;
  std::size_t n = 4;
  std::size_t m = 4;
  std::size_t k = 2;
  SparsityMode mode = SparsityMode::kRowSparse;
  std::size_t denominator_bound = 5;
  DMode d_mode = DMode::kMixed;
  // When set, rows get b = 1 and every entry is at most this value.
  std::optional<Rational> max_entry;
};

// Deterministic per parameter set. Each row (row-sparse) or column
// (col-sparse) draws between 1 and k distinct partners. Covering instances
// never keep an empty row; any column left empty gets c_j = 0. Throws
// kInvalidArgument on bad parameters.
SparseIP RandomInstance(const RandomParams& params);

bool ParseSparsityMode(std::string_view text, SparsityMode& out);
bool ParseDMode(std::string_view text, DMode& out);

// "naive-M":        min x1  s.t.  M x1 >= 1
// "multiplicity-M": min x2  s.t.  M x1 + M x2 >= M + 1,  x1 <= 1
// Throws kUnknownFixture, or kInvalidArgument for M < 1.
SparseIP GapFixture(std::string_view name, std::int64_t M);

struct Clause {
  std::size_t vars[3] = {0, 0, 0};
  int parity = 0;
};

struct Max3Lin2 {
  std::size_t num_vars = 0;
  std::vector<Clause> clauses;

  std::vector<std::size_t> Degrees() const;
  // Number of clauses whose parity the assignment misses.
  std::size_t Unsatisfied(const std::vector<int>& assignment) const;
};

// One clause per line: "i j k C" with 0-based distinct variables. Blank lines
// and '#' comments are skipped. The variable count is 1 + the largest index
// unless `num_vars` is larger. Throws kParse.
Max3Lin2 ParseFormula(std::string_view text, std::size_t num_vars = 0);
std::string SerializeFormula(const Max3Lin2& formula);

struct GadgetInstance {
  SparseIP instance;  // covering; every column hits two rows with equal values
  std::vector<std::string> row_labels;
  std::vector<std::string> col_labels;
  // Rows [0, literal_rows) form one side of the bipartition.
  std::size_t literal_rows = 0;
};

// Demand edge cover instance for a Max-3-Lin(2) formula. Per variable of
// nonzero degree: vertices "x_i", "x_i=0", "x_i=1" and two heavy edges of
// value 4 deg(x_i). Per clause: one vertex for each falsifying assignment,
// demand 3, with three parallel unit edges to each of its literal vertices.
GadgetInstance HardnessInstance(const Max3Lin2& formula);

// JSON instance document with an extra "labels" object.
std::string SerializeGadget(const GadgetInstance& gadget);

struct HardnessCertificate {
  std::vector<std::size_t> edges;  // chosen columns, ascending
  IntSolution solution;
  std::size_t unsatisfied = 0;
  Rational cost;
};

// The explicit edge cover built from an assignment: cost 24m + 3t, where t
// counts unsatisfied clauses. Throws kInvalidArgument on a length mismatch.
HardnessCertificate CertifyHardness(const Max3Lin2& formula,
                                    const GadgetInstance& gadget,
                                    const std::vector<int>& assignment);

}  // namespace sparseip::gen

#endif  // SPARSEIP_GENERATORS_H_
