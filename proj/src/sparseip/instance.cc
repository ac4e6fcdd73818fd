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

#include "sparseip/instance.h"

#include <algorithm>
#include <set>
#include <sstream>
#include <utility>

#include "json.hpp"
#include "sparseip/errors.h"

namespace sparseip {

using Json = nlohmann::ordered_json;

const char* SenseName(Sense sense) {
  return sense == Sense::kCover ? "cover" : "pack";
}

std::size_t SparseIP::RowSparsity() const {
  std::vector<std::size_t> count(num_rows, 0);
  for (const Entry& e : entries) {
    if (e.row < num_rows) ++count[e.row];
  }
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

std::size_t SparseIP::ColSparsity() const {
  std::vector<std::size_t> count(num_cols, 0);
  for (const Entry& e : entries) {
    if (e.col < num_cols) ++count[e.col];
  }
  return count.empty() ? 0 : *std::max_element(count.begin(), count.end());
}

std::vector<std::vector<Term>> SparseIP::Rows() const {
  std::vector<std::vector<Term>> rows(num_rows);
  for (const Entry& e : entries) rows[e.row].push_back({e.col, e.value});
  for (auto& r : rows) {
    std::sort(r.begin(), r.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
  }
  return rows;
}

std::vector<std::vector<Term>> SparseIP::Columns() const {
  std::vector<std::vector<Term>> cols(num_cols);
  for (const Entry& e : entries) cols[e.col].push_back({e.row, e.value});
  for (auto& col : cols) {
    std::sort(col.begin(), col.end(),
              [](const Term& a, const Term& b) { return a.index < b.index; });
  }
  return cols;
}

std::vector<Violation> Validate(const SparseIP& inst) {
  std::vector<Violation> out;
  auto add = [&out](std::string msg) { out.push_back({std::move(msg)}); };

  if (inst.b.size() != inst.num_rows) {
    add("b has length " + std::to_string(inst.b.size()) + ", expected m = " +
        std::to_string(inst.num_rows));
  }
  if (inst.c.size() != inst.num_cols) {
    add("c has length " + std::to_string(inst.c.size()) + ", expected n = " +
        std::to_string(inst.num_cols));
  }
  if (inst.d.size() != inst.num_cols) {
    add("d has length " + std::to_string(inst.d.size()) + ", expected n = " +
        std::to_string(inst.num_cols));
  }
  for (std::size_t i = 0; i < inst.b.size(); ++i) {
    if (inst.b[i] < 0) add("b[" + std::to_string(i) + "] negative");
  }
  for (std::size_t j = 0; j < inst.c.size(); ++j) {
    if (inst.c[j] < 0) add("c[" + std::to_string(j) + "] negative");
  }
  for (std::size_t j = 0; j < inst.d.size(); ++j) {
    if (inst.d[j].infinite()) continue;
    if (inst.d[j].value() < 0) add("d[" + std::to_string(j) + "] negative");
    if (!IsInteger(inst.d[j].value())) {
      add("d[" + std::to_string(j) + "] not integral");
    }
  }
  std::set<std::pair<std::size_t, std::size_t>> seen;
  for (const Entry& e : inst.entries) {
    const std::string coord =
        "(" + std::to_string(e.row) + "," + std::to_string(e.col) + ")";
    if (e.row >= inst.num_rows || e.col >= inst.num_cols) {
      add("entry " + coord + " out of range");
      continue;
    }
    if (e.value <= 0) add("entry " + coord + " not positive");
    if (!seen.insert({e.row, e.col}).second) {
      add("duplicate coordinate " + coord);
    }
  }
  return out;
}

void RequireValid(const SparseIP& inst) {
  const auto violations = Validate(inst);
  if (violations.empty()) return;
  std::string msg = "validation failed:";
  for (const auto& v : violations) msg += " " + v.message + ";";
  throw Error(ErrorCode::kValidation, msg);
}

Rational Objective(const SparseIP& inst, const std::vector<Integer>& x) {
  Rational total = 0;
  for (std::size_t j = 0; j < inst.num_cols; ++j) total += inst.c[j] * x[j];
  return total;
}

IntSolution MakeSolution(const SparseIP& inst, std::vector<Integer> x) {
  IntSolution sol;
  sol.objective = Objective(inst, x);
  sol.x = std::move(x);
  return sol;
}

std::vector<Rational> RowActivity(const SparseIP& inst,
                                  const std::vector<Integer>& x) {
  std::vector<Rational> act(inst.num_rows, Rational(0));
  for (const Entry& e : inst.entries) act[e.row] += e.value * x[e.col];
  return act;
}

bool IsFeasible(const SparseIP& inst, const std::vector<Integer>& x) {
  if (x.size() != inst.num_cols) return false;
  for (std::size_t j = 0; j < inst.num_cols; ++j) {
    if (x[j] < 0) return false;
    if (inst.d[j].finite() && x[j] > inst.d[j].value()) return false;
  }
  const auto act = RowActivity(inst, x);
  for (std::size_t i = 0; i < inst.num_rows; ++i) {
    if (inst.sense == Sense::kCover ? act[i] < inst.b[i] : act[i] > inst.b[i]) {
      return false;
    }
  }
  return true;
}

SparseIP NormalizeCover(const SparseIP& inst) {
  if (inst.sense != Sense::kCover) {
    throw Error(ErrorCode::kInvalidArgument,
                "NormalizeCover needs a covering instance");
  }
  for (std::size_t i = 0; i < inst.num_rows; ++i) {
    if (inst.b[i] <= 0) {
      throw Error(ErrorCode::kZeroDemandRow,
                  "row " + std::to_string(i) + " has b <= 0");
    }
  }
  SparseIP out = inst;
  for (Entry& e : out.entries) {
    e.value /= inst.b[e.row];
    if (e.value > 1) e.value = 1;
  }
  for (Rational& bi : out.b) bi = 1;
  return out;
}

PackPreprocessResult PreprocessPack(const SparseIP& inst) {
  if (inst.sense != Sense::kPack) {
    throw Error(ErrorCode::kInvalidArgument,
                "PreprocessPack needs a packing instance");
  }
  std::vector<bool> drop(inst.num_cols, false);
  for (const Entry& e : inst.entries) {
    if (e.value > inst.b[e.row]) drop[e.col] = true;
  }
  PackPreprocessResult res;
  std::vector<std::size_t> new_index(inst.num_cols, 0);
  for (std::size_t j = 0; j < inst.num_cols; ++j) {
    if (drop[j]) {
      res.deleted_cols.push_back(j);
    } else {
      new_index[j] = res.kept_cols.size();
      res.kept_cols.push_back(j);
    }
  }
  SparseIP& r = res.reduced;
  r.sense = Sense::kPack;
  r.num_rows = inst.num_rows;
  r.num_cols = res.kept_cols.size();
  r.b = inst.b;
  for (std::size_t j : res.kept_cols) {
    r.c.push_back(inst.c[j]);
    r.d.push_back(inst.d[j]);
  }
  for (const Entry& e : inst.entries) {
    if (!drop[e.col]) r.entries.push_back({e.row, new_index[e.col], e.value});
  }
  return res;
}

std::vector<Integer> ExpandSolution(const PackPreprocessResult& pre,
                                    const std::vector<Integer>& x) {
  std::vector<Integer> out(pre.kept_cols.size() + pre.deleted_cols.size(),
                           Integer(0));
  for (std::size_t j = 0; j < pre.kept_cols.size(); ++j) {
    out[pre.kept_cols[j]] = x[j];
  }
  return out;
}

namespace {

[[noreturn]] void ParseFail(const std::string& what) {
  throw Error(ErrorCode::kParse, "parse failed: " + what);
}

Rational RationalField(const Json& v, const std::string& where) {
  if (!v.is_string()) ParseFail(where + " must be a rational string");
  auto r = ParseRational(v.get<std::string>());
  if (!r) ParseFail(where + ": bad rational '" + v.get<std::string>() + "'");
  return *r;
}

std::size_t CountField(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_number_integer() ||
      doc[key].get<long long>() < 0) {
    ParseFail(std::string("field '") + key + "' must be a nonnegative integer");
  }
  return doc[key].get<std::size_t>();
}

const Json& ArrayField(const Json& doc, const char* key) {
  if (!doc.contains(key) || !doc[key].is_array()) {
    ParseFail(std::string("field '") + key + "' must be an array");
  }
  return doc[key];
}

Json ParseJson(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const nlohmann::json::parse_error& e) {
    ParseFail(e.what());
  }
}

}  // namespace

std::string SerializeInstance(const SparseIP& inst) {
  Json doc;
  doc["sense"] = SenseName(inst.sense);
  doc["m"] = inst.num_rows;
  doc["n"] = inst.num_cols;
  Json b = Json::array(), c = Json::array(), d = Json::array();
  for (const auto& v : inst.b) b.push_back(ToString(v));
  for (const auto& v : inst.c) c.push_back(ToString(v));
  for (const auto& v : inst.d) d.push_back(ToString(v));
  doc["b"] = std::move(b);
  doc["c"] = std::move(c);
  doc["d"] = std::move(d);
  std::vector<const Entry*> sorted;
  sorted.reserve(inst.entries.size());
  for (const Entry& e : inst.entries) sorted.push_back(&e);
  std::stable_sort(sorted.begin(), sorted.end(),
                   [](const Entry* x, const Entry* y) {
                     return std::tie(x->row, x->col) < std::tie(y->row, y->col);
                   });
  Json entries = Json::array();
  for (const Entry* e : sorted) {
    entries.push_back(Json::array({e->row, e->col, ToString(e->value)}));
  }
  doc["entries"] = std::move(entries);
  return doc.dump();
}

SparseIP ParseInstance(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) ParseFail("instance must be a JSON object");
  SparseIP inst;
  if (!doc.contains("sense") || !doc["sense"].is_string()) {
    ParseFail("field 'sense' must be \"cover\" or \"pack\"");
  }
  const std::string sense = doc["sense"].get<std::string>();
  if (sense == "cover") {
    inst.sense = Sense::kCover;
  } else if (sense == "pack") {
    inst.sense = Sense::kPack;
  } else {
    ParseFail("field 'sense' must be \"cover\" or \"pack\"");
  }
  inst.num_rows = CountField(doc, "m");
  inst.num_cols = CountField(doc, "n");
  const Json& b = ArrayField(doc, "b");
  for (std::size_t i = 0; i < b.size(); ++i) {
    inst.b.push_back(RationalField(b[i], "b[" + std::to_string(i) + "]"));
  }
  const Json& c = ArrayField(doc, "c");
  for (std::size_t j = 0; j < c.size(); ++j) {
    inst.c.push_back(RationalField(c[j], "c[" + std::to_string(j) + "]"));
  }
  const Json& d = ArrayField(doc, "d");
  for (std::size_t j = 0; j < d.size(); ++j) {
    if (!d[j].is_string()) ParseFail("d entries must be strings");
    auto bound = ParseUpperBound(d[j].get<std::string>());
    if (!bound) ParseFail("d[" + std::to_string(j) + "]: bad value");
    inst.d.push_back(*bound);
  }
  const Json& entries = ArrayField(doc, "entries");
  for (const Json& t : entries) {
    if (!t.is_array() || t.size() != 3 || !t[0].is_number_unsigned() ||
        !t[1].is_number_unsigned()) {
      ParseFail("entries must be [i, j, \"rational\"] triples");
    }
    inst.entries.push_back({t[0].get<std::size_t>(), t[1].get<std::size_t>(),
                            RationalField(t[2], "entry value")});
  }
  std::stable_sort(inst.entries.begin(), inst.entries.end(),
                   [](const Entry& x, const Entry& y) {
                     return std::tie(x.row, x.col) < std::tie(y.row, y.col);
                   });
  return inst;
}

std::string SerializeSolution(const IntSolution& sol) {
  Json doc;
  Json x = Json::array();
  for (const auto& v : sol.x) x.push_back(ToString(v));
  doc["x"] = std::move(x);
  doc["objective"] = ToString(sol.objective);
  return doc.dump();
}

IntSolution ParseSolution(std::string_view text) {
  const Json doc = ParseJson(text);
  if (!doc.is_object()) ParseFail("solution must be a JSON object");
  // Reports nest the solution under "solution"; accept both forms.
  const Json& body = doc.contains("solution") ? doc["solution"] : doc;
  const Json& x = ArrayField(body, "x");
  IntSolution sol;
  for (std::size_t j = 0; j < x.size(); ++j) {
    Rational v = RationalField(x[j], "x[" + std::to_string(j) + "]");
    if (!IsInteger(v)) ParseFail("x[" + std::to_string(j) + "] not an integer");
    sol.x.push_back(v.get_num());
  }
  if (body.contains("objective")) {
    sol.objective = RationalField(body["objective"], "objective");
  }
  return sol;
}

}  // namespace sparseip
