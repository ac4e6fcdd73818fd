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

#ifndef SPARSEIP_INSTANCE_H_
#define SPARSEIP_INSTANCE_H_

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "sparseip/rational.h"

namespace sparseip {

enum class Sense { kCover, kPack };

const char* SenseName(Sense sense);

struct Entry {
  std::size_t row = 0;
  std::size_t col = 0;
  Rational value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

// A term of a sparse row or column: the other coordinate plus the value.
struct Term {
  std::size_t index = 0;
  Rational value;
};

// Covering  {min c.x : Ax >= b, 0 <= x <= d, x integral}  or
// packing   {max c.x : Ax <= b, 0 <= x <= d, x integral}.
// Plain data: construct freely, then Validate() before handing to a solver.
struct SparseIP {
  Sense sense = Sense::kCover;
  std::size_t num_rows = 0;
  std::size_t num_cols = 0;
  std::vector<Entry> entries;
  std::vector<Rational> b;
  std::vector<Rational> c;
  std::vector<UpperBound> d;

  // Max stored nonzeros in any row / column.
  std::size_t RowSparsity() const;
  std::size_t ColSparsity() const;

  // Row i's terms sorted by column, and column j's terms sorted by row.
  std::vector<std::vector<Term>> Rows() const;
  std::vector<std::vector<Term>> Columns() const;

  friend bool operator==(const SparseIP&, const SparseIP&) = default;
};

struct Violation {
  std::string message;
};

// Every structural problem of `inst`; empty means valid.
std::vector<Violation> Validate(const SparseIP& inst);

// Throws Error(kValidation) listing the violations, if any.
void RequireValid(const SparseIP& inst);

struct IntSolution {
  std::vector<Integer> x;
  Rational objective;
};

Rational Objective(const SparseIP& inst, const std::vector<Integer>& x);
IntSolution MakeSolution(const SparseIP& inst, std::vector<Integer> x);

// a_i . x for every row.
std::vector<Rational> RowActivity(const SparseIP& inst,
                                  const std::vector<Integer>& x);

// True iff 0 <= x <= d and every row holds for the instance's sense.
bool IsFeasible(const SparseIP& inst, const std::vector<Integer>& x);

// Scales each covering row to b_i = 1 and clips entries at 1. Throws
// kZeroDemandRow when some b_i <= 0.
SparseIP NormalizeCover(const SparseIP& inst);

struct PackPreprocessResult {
  SparseIP reduced;
  std::vector<std::size_t> kept_cols;     // reduced column -> original column
  std::vector<std::size_t> deleted_cols;  // original indices, ascending
};

// Drops every packing column with some A_ij > b_i; such columns are fixed to
// zero in every feasible solution.
PackPreprocessResult PreprocessPack(const SparseIP& inst);

// Lifts a solution of `reduced` back to the original column space.
std::vector<Integer> ExpandSolution(const PackPreprocessResult& pre,
                                    const std::vector<Integer>& x);

// Canonical one-line JSON document. Entries are written sorted by (i, j).
std::string SerializeInstance(const SparseIP& inst);
// Throws Error(kParse). Unknown top-level keys (e.g. "labels") are ignored.
SparseIP ParseInstance(std::string_view text);

std::string SerializeSolution(const IntSolution& sol);
IntSolution ParseSolution(std::string_view text);

}  // namespace sparseip

#endif  // SPARSEIP_INSTANCE_H_
