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

#include "sparseip/runner.h"

#include <chrono>
#include <cstdio>

#include "json.hpp"
#include "sparseip/cover.h"
#include "sparseip/errors.h"
#include "sparseip/oracle.h"
#include "sparseip/pack.h"

namespace sparseip::run {
namespace {

using Json = nlohmann::ordered_json;

Json SolutionJson(const IntSolution& sol) { return Json::parse(SerializeSolution(sol)); }

const char* OutcomeName(oracle::Outcome o) {
  switch (o) {
    case oracle::Outcome::kOptimal: return "optimal";
    case oracle::Outcome::kInfeasible: return "infeasible";
    case oracle::Outcome::kBudgetExceeded: return "budget_exceeded";
  }
  return "infeasible";
}

std::string CoverDetails(const cover::CoverReport& r) {
  Json d;
  d["k"] = r.k;
  d["lp_solves"] = r.lp_solves;
  d["cuts_added"] = r.cuts_added;
  d["rows_replaced"] = r.rows_replaced;
  d["units_trimmed"] = r.units_trimmed;
  return d.dump();
}

std::string PackDetails(const pack::PackReport& r) {
  Json d;
  d["k"] = r.k;
  Json cands = Json::array();
  for (const auto& c : r.candidates) cands.push_back({{"name", c.name}, {"value", ToString(c.value)}});
  d["candidates"] = std::move(cands);
  d["chosen"] = r.candidates.empty() ? "" : r.candidates[r.chosen].name;
  d["iterations"] = r.iterations;
  d["deleted_cols"] = r.deleted_cols;
  if (r.variant == "pack-2cs") d["fallback_used"] = r.fallback_used;
  if (r.variant == "pack-width") {
    d["width"] = r.width_infinite ? std::string("inf") : ToString(r.width);
    d["violated_trace"] = r.violated_trace;
  }
  return d.dump();
}

RunReport FromPack(const pack::PackResult& res) {
  RunReport rep;
  rep.variant = res.report.variant;
  rep.solution = res.solution;
  rep.lp_value = res.report.lp_value;
  rep.ratio_bound = res.report.ratio_bound;
  rep.fallback_used = res.report.fallback_used;
  rep.details = PackDetails(res.report);
  return rep;
}

void RequireSense(const SparseIP& inst, Sense sense, std::string_view algorithm) {
  if (inst.sense != sense) {
    throw Error(ErrorCode::kInvalidArgument,
                std::string(algorithm) + " needs a " + SenseName(sense) + " instance");
  }
}

RunReport Dispatch(const SparseIP& inst, std::string_view algorithm) {
  if (algorithm == "cover-k" || (algorithm == "auto" && inst.sense == Sense::kCover)) {
    RequireSense(inst, Sense::kCover, "cover-k");
    const cover::CoverResult res = cover::SolveCover(inst);
    RunReport rep;
    rep.variant = "cover-k";
    rep.solution = res.solution;
    rep.lp_value = res.report.lp_value;
    rep.ratio_bound = res.report.ratio_bound;
    rep.details = CoverDetails(res.report);
    return rep;
  }
  if (algorithm == "pack-general") {
    RequireSense(inst, Sense::kPack, algorithm);
    return FromPack(pack::SolvePack(inst));
  }
  if (algorithm == "pack-2cs") {
    RequireSense(inst, Sense::kPack, algorithm);
    return FromPack(pack::SolvePack2cs(inst));
  }
  if (algorithm == "pack-width") {
    RequireSense(inst, Sense::kPack, algorithm);
    return FromPack(pack::SolvePackWidth(inst));
  }
  if (algorithm != "auto") {
    throw Error(ErrorCode::kInvalidArgument,
                "unknown algorithm '" + std::string(algorithm) + "'");
  }
  RunReport best = FromPack(inst.ColSparsity() <= 2 ? pack::SolvePack2cs(inst)
                                                    : pack::SolvePack(inst));
  try {
    RunReport wide = FromPack(pack::SolvePackWidth(inst));
    if (wide.solution.objective > best.solution.objective) {
      wide.alternatives.push_back(best.variant);
      return wide;
    }
    best.alternatives.push_back(wide.variant);
  } catch (const Error& e) {
    if (e.code() != ErrorCode::kWidthTooSmall) throw;
  }
  return best;
}

}  // namespace

std::string Digest(const SparseIP& inst) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : SerializeInstance(inst)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

RunReport Solve(const SparseIP& inst, std::string_view algorithm,
                std::optional<std::uint64_t> oracle_budget) {
  RequireValid(inst);
  const auto start = std::chrono::steady_clock::now();
  RunReport rep = Dispatch(inst, algorithm);
  rep.digest = Digest(inst);
  if (oracle_budget) {
    const oracle::OracleResult exact = oracle::SolveExact(inst, *oracle_budget);
    rep.oracle_outcome = OutcomeName(exact.outcome);
    if (exact.solution) {
      const Rational opt = exact.solution->objective;
      rep.oracle_value = opt;
      const Rational value = rep.solution.objective;
      const Rational& num = inst.sense == Sense::kCover ? value : opt;
      const Rational& den = inst.sense == Sense::kCover ? opt : value;
      if (sgn(den) == 0) {
        if (sgn(num) == 0) {
          rep.observed_ratio = Rational(1);
        } else {
          rep.ratio_infinite = true;
        }
      } else {
        rep.observed_ratio = num / den;
      }
    }
  }
  rep.wall_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                    std::chrono::steady_clock::now() - start)
                    .count();
  return rep;
}

std::string SerializeReport(const RunReport& r) {
  Json doc;
  doc["digest"] = r.digest;
  doc["variant"] = r.variant;
  doc["solution"] = SolutionJson(r.solution);
  doc["lp_value"] = ToString(r.lp_value);
  doc["ratio_bound"] = ToString(r.ratio_bound);
  if (r.variant == "pack-2cs") doc["fallback_used"] = r.fallback_used;
  if (!r.oracle_outcome.empty()) doc["oracle"] = r.oracle_outcome;
  if (r.oracle_value) doc["oracle_value"] = ToString(*r.oracle_value);
  if (r.ratio_infinite) {
    doc["observed_ratio"] = "inf";
  } else if (r.observed_ratio) {
    doc["observed_ratio"] = ToString(*r.observed_ratio);
  }
  if (r.observed_ratio || r.ratio_infinite) doc["ratio_violated"] = r.RatioViolated();
  doc["wall_ms"] = r.wall_ms;
  if (!r.alternatives.empty()) doc["alternatives"] = r.alternatives;
  if (!r.details.empty()) doc["details"] = Json::parse(r.details);
  return doc.dump();
}

std::string Oracle(const SparseIP& inst, std::uint64_t node_budget) {
  const oracle::OracleResult res = oracle::SolveExact(inst, node_budget);
  if (res.outcome == oracle::Outcome::kBudgetExceeded) {
    throw Error(ErrorCode::kBudgetExceeded,
                "oracle gave up after " + std::to_string(res.nodes) + " nodes");
  }
  Json doc;
  doc["digest"] = Digest(inst);
  doc["outcome"] = OutcomeName(res.outcome);
  if (res.solution) doc["solution"] = SolutionJson(*res.solution);
  doc["nodes"] = res.nodes;
  return doc.dump();
}

CheckResult Check(std::string_view instance_text, std::string_view solution_text) {
  const SparseIP inst = ParseInstance(instance_text);
  RequireValid(inst);
  Json doc;
  try {
    doc = Json::parse(solution_text);
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::kParse, std::string("parse failed: ") + e.what());
  }
  if (doc.is_object() && doc.contains("solution")) doc = doc["solution"];
  if (!doc.is_object() || !doc.contains("x") || !doc["x"].is_array()) {
    throw Error(ErrorCode::kParse, "parse failed: solution needs an array \"x\"");
  }
  std::vector<Rational> x;
  for (std::size_t j = 0; j < doc["x"].size(); ++j) {
    const Json& v = doc["x"][j];
    std::optional<Rational> r;
    if (v.is_string()) {
      r = ParseRational(v.get<std::string>());
    } else if (v.is_number_integer()) {
      r = ParseRational(v.dump());
    }
    if (!r) {
      throw Error(ErrorCode::kParse,
                  "parse failed: x[" + std::to_string(j) + "] is not a rational");
    }
    x.push_back(*r);
  }

  Json violations = Json::array();
  auto add = [&](const std::string& kind, std::size_t index, const std::string& message,
                 const std::optional<Rational>& slack) {
    Json v;
    v["kind"] = kind;
    v["index"] = index;
    v["message"] = message;
    if (slack) v["slack"] = ToString(*slack);
    violations.push_back(std::move(v));
  };
  if (x.size() != inst.num_cols) {
    add("length", x.size(),
        "solution has " + std::to_string(x.size()) + " values for " +
            std::to_string(inst.num_cols) + " columns",
        std::nullopt);
  } else {
    for (std::size_t j = 0; j < x.size(); ++j) {
      if (!IsInteger(x[j])) add("integrality", j, "integrality " + std::to_string(j), std::nullopt);
      if (sgn(x[j]) < 0 || (inst.d[j].finite() && x[j] > inst.d[j].value())) {
        add("bound", j, "bound " + std::to_string(j), std::nullopt);
      }
    }
    std::vector<Rational> activity(inst.num_rows, Rational(0));
    for (const Entry& e : inst.entries) activity[e.row] += e.value * x[e.col];
    for (std::size_t i = 0; i < inst.num_rows; ++i) {
      // Positive slack means the row holds with room to spare.
      const Rational slack = inst.sense == Sense::kCover ? Rational(activity[i] - inst.b[i])
                                                         : Rational(inst.b[i] - activity[i]);
      if (sgn(slack) < 0) add("row", i, "row " + std::to_string(i), slack);
    }
  }
  CheckResult result;
  result.feasible = violations.empty();
  Json out;
  out["feasible"] = result.feasible;
  out["violations"] = std::move(violations);
  if (result.feasible) {
    Rational obj = 0;
    for (std::size_t j = 0; j < x.size(); ++j) obj += inst.c[j] * x[j];
    out["objective"] = ToString(obj);
  }
  result.document = out.dump();
  return result;
}

CampaignResult Campaign(const CampaignParams& params) {
  CampaignResult result;
  std::string lines;
  std::optional<Rational> worst;
  bool worst_infinite = false;
  std::size_t budget_exceeded = 0;
  std::size_t errors = 0;
  for (std::size_t t = 0; t < params.count; ++t) {
    gen::RandomParams family = params.family;
    family.seed = params.family.seed + t;
    Json row;
    row["index"] = t;
    row["seed"] = family.seed;
    try {
      const SparseIP inst = gen::RandomInstance(family);
      row["digest"] = Digest(inst);
      const RunReport rep = Solve(inst, params.algorithm, params.oracle_budget);
      row["variant"] = rep.variant;
      row["value"] = ToString(rep.solution.objective);
      row["lp_value"] = ToString(rep.lp_value);
      row["ratio_bound"] = ToString(rep.ratio_bound);
      row["oracle"] = rep.oracle_outcome;
      if (rep.oracle_value) row["oracle_value"] = ToString(*rep.oracle_value);
      if (rep.ratio_infinite) {
        row["observed_ratio"] = "inf";
        worst_infinite = true;
      } else if (rep.observed_ratio) {
        row["observed_ratio"] = ToString(*rep.observed_ratio);
        if (!worst || *rep.observed_ratio > *worst) worst = *rep.observed_ratio;
      }
      if (rep.fallback_used) row["fallback_used"] = true;
      std::string status = "ok";
      if (rep.RatioViolated()) {
        status = "violation";
        ++result.violations;
      } else if (rep.oracle_outcome == "budget_exceeded") {
        status = "budget_exceeded";
        ++budget_exceeded;
      }
      row["status"] = status;
    } catch (const InvariantFailure&) {
      throw;
    } catch (const Error& e) {
      row["status"] = e.code() == ErrorCode::kInfeasible ? "infeasible" : "error";
      row["message"] = e.what();
      if (e.code() != ErrorCode::kInfeasible) ++errors;
    }
    lines += row.dump();
    lines += '\n';
  }
  Json summary;
  summary["summary"] = true;
  summary["count"] = params.count;
  summary["violations"] = result.violations;
  summary["budget_exceeded"] = budget_exceeded;
  summary["errors"] = errors;
  if (worst_infinite) {
    summary["worst_ratio"] = "inf";
  } else if (worst) {
    summary["worst_ratio"] = ToString(*worst);
  }
  lines += summary.dump();
  lines += '\n';
  result.document = std::move(lines);
  return result;
}

std::string Certificate(const gen::Max3Lin2& formula, const std::vector<int>& assignment) {
  const gen::GadgetInstance gadget = gen::HardnessInstance(formula);
  const gen::HardnessCertificate cert = gen::CertifyHardness(formula, gadget, assignment);
  Json doc;
  doc["clauses"] = formula.clauses.size();
  doc["unsatisfied"] = cert.unsatisfied;
  doc["cost"] = ToString(cert.cost);
  doc["edges"] = cert.edges;
  doc["solution"] = SolutionJson(cert.solution);
  return doc.dump();
}

std::string ErrorDocument(const std::exception& e) {
  Json doc;
  const auto* err = dynamic_cast<const Error*>(&e);
  const ErrorCode code = err ? err->code() : ErrorCode::kInternal;
  switch (code) {
    case ErrorCode::kParse: doc["error"] = "parse failed"; break;
    case ErrorCode::kValidation: doc["error"] = "validation failed"; break;
    case ErrorCode::kInternal: doc["error"] = "internal failure"; break;
    default: doc["error"] = "solver error"; break;
  }
  doc["code"] = ErrorCodeName(code);
  doc["message"] = e.what();
  return doc.dump();
}

}  // namespace sparseip::run
