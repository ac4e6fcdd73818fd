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

#include "sparseip/sparseip.h"

#include <cstdlib>
#include <cstring>
#include <exception>
#include <string>

#include "json.hpp"
#include "sparseip/errors.h"
#include "sparseip/generators.h"
#include "sparseip/instance.h"
#include "sparseip/runner.h"

struct sip_instance {
  sparseip::SparseIP value;
};

namespace {

thread_local std::string last_error;

sip_status StatusFor(sparseip::ErrorCode code) {
  using sparseip::ErrorCode;
  switch (code) {
    case ErrorCode::kParse: return SIP_ERR_PARSE;
    case ErrorCode::kValidation: return SIP_ERR_VALIDATION;
    case ErrorCode::kInfeasible: return SIP_ERR_INFEASIBLE;
    case ErrorCode::kUnbounded: return SIP_ERR_UNBOUNDED;
    case ErrorCode::kBudgetExceeded: return SIP_ERR_BUDGET;
    case ErrorCode::kInternal: return SIP_ERR_INTERNAL;
    default: return SIP_ERR_INPUT;
  }
}

char* Copy(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void NeedPointer(const void* p, const char* what) {
  if (!p) {
    throw sparseip::Error(sparseip::ErrorCode::kInvalidArgument,
                          std::string(what) + " must not be null");
  }
}

template <typename F>
sip_status Guard(F&& body) {
  try {
    body();
    last_error.clear();
    return SIP_OK;
  } catch (const sparseip::Error& e) {
    last_error = sparseip::run::ErrorDocument(e);
    return StatusFor(e.code());
  } catch (const std::exception& e) {
    last_error = sparseip::run::ErrorDocument(e);
    return SIP_ERR_INTERNAL;
  } catch (...) {
    last_error = R"({"error":"internal failure","code":"internal","message":"unknown exception"})";
    return SIP_ERR_INTERNAL;
  }
}

sparseip::gen::RandomParams ToParams(const sip_random_params* p) {
  using namespace sparseip;
  NeedPointer(p, "params");
  gen::RandomParams out;
  out.seed = p->seed;
  const std::string sense = p->sense ? p->sense : "cover";
  if (sense == "cover") {
    out.sense = Sense::kCover;
  } else if (sense == "pack") {
    out.sense = Sense::kPack;
  } else {
    throw Error(ErrorCode::kInvalidArgument, "unknown sense '" + sense + "'");
  }
  out.n = p->n;
  out.m = p->m;
  out.k = p->k;
  if (!gen::ParseSparsityMode(p->mode ? p->mode : "row-sparse", out.mode)) {
    throw Error(ErrorCode::kInvalidArgument, std::string("unknown mode '") + p->mode + "'");
  }
  out.denominator_bound = p->denominator_bound;
  if (!gen::ParseDMode(p->d_mode ? p->d_mode : "mixed", out.d_mode)) {
    throw Error(ErrorCode::kInvalidArgument, std::string("unknown d mode '") + p->d_mode + "'");
  }
  if (p->max_entry) {
    out.max_entry = ParseRational(p->max_entry);
    if (!out.max_entry) {
      throw Error(ErrorCode::kInvalidArgument,
                  std::string("max entry '") + p->max_entry + "' is not a rational");
    }
  }
  return out;
}

}  // namespace

extern "C" {

const char* sip_version(void) { return "0.1.0"; }

const char* sip_last_error(void) { return last_error.c_str(); }

void sip_string_free(char* text) { std::free(text); }

void sip_random_params_init(sip_random_params* params) {
  if (!params) return;
  params->seed = 0;
  params->sense = "cover";
  params->n = 4;
  params->m = 4;
  params->k = 2;
  params->mode = "row-sparse";
  params->denominator_bound = 5;
  params->d_mode = "mixed";
  params->max_entry = nullptr;
}

sip_status sip_instance_parse(const char* text, sip_instance** out) {
  return Guard([&] {
    NeedPointer(text, "text");
    NeedPointer(out, "out");
    *out = new sip_instance{sparseip::ParseInstance(text)};
  });
}

sip_status sip_instance_serialize(const sip_instance* inst, char** out) {
  return Guard([&] {
    NeedPointer(inst, "instance");
    NeedPointer(out, "out");
    *out = Copy(sparseip::SerializeInstance(inst->value));
  });
}

sip_status sip_instance_validate(const sip_instance* inst, char** out) {
  return Guard([&] {
    NeedPointer(inst, "instance");
    NeedPointer(out, "out");
    nlohmann::ordered_json doc;
    nlohmann::ordered_json list = nlohmann::ordered_json::array();
    for (const auto& v : sparseip::Validate(inst->value)) list.push_back(v.message);
    doc["valid"] = list.empty();
    doc["violations"] = std::move(list);
    *out = Copy(doc.dump());
  });
}

void sip_instance_free(sip_instance* inst) { delete inst; }

sip_status sip_solve(const sip_instance* inst, const char* algorithm,
                     int64_t oracle_budget, char** report, int* ratio_violated) {
  return Guard([&] {
    NeedPointer(inst, "instance");
    NeedPointer(report, "report");
    std::optional<std::uint64_t> budget;
    if (oracle_budget >= 0) budget = static_cast<std::uint64_t>(oracle_budget);
    const auto rep =
        sparseip::run::Solve(inst->value, algorithm ? algorithm : "auto", budget);
    *report = Copy(sparseip::run::SerializeReport(rep));
    if (ratio_violated) *ratio_violated = rep.RatioViolated() ? 1 : 0;
  });
}

sip_status sip_oracle(const sip_instance* inst, uint64_t node_budget, char** out) {
  return Guard([&] {
    NeedPointer(inst, "instance");
    NeedPointer(out, "out");
    *out = Copy(sparseip::run::Oracle(inst->value, node_budget));
  });
}

sip_status sip_check(const char* instance_text, const char* solution_text, char** out,
                     int* feasible) {
  return Guard([&] {
    NeedPointer(instance_text, "instance text");
    NeedPointer(solution_text, "solution text");
    NeedPointer(out, "out");
    const auto res = sparseip::run::Check(instance_text, solution_text);
    *out = Copy(res.document);
    if (feasible) *feasible = res.feasible ? 1 : 0;
  });
}

sip_status sip_gen_random(const sip_random_params* params, sip_instance** out) {
  return Guard([&] {
    NeedPointer(out, "out");
    *out = new sip_instance{sparseip::gen::RandomInstance(ToParams(params))};
  });
}

sip_status sip_gen_gap(const char* fixture, int64_t m, sip_instance** out) {
  return Guard([&] {
    NeedPointer(fixture, "fixture");
    NeedPointer(out, "out");
    *out = new sip_instance{sparseip::gen::GapFixture(fixture, m)};
  });
}

sip_status sip_gen_hardness(const char* formula_text, char** out) {
  return Guard([&] {
    NeedPointer(formula_text, "formula");
    NeedPointer(out, "out");
    const auto formula = sparseip::gen::ParseFormula(formula_text);
    *out = Copy(sparseip::gen::SerializeGadget(sparseip::gen::HardnessInstance(formula)));
  });
}

sip_status sip_certify_hardness(const char* formula_text, const int* assignment,
                                size_t length, char** out) {
  return Guard([&] {
    NeedPointer(formula_text, "formula");
    NeedPointer(out, "out");
    if (length > 0) NeedPointer(assignment, "assignment");
    const auto formula = sparseip::gen::ParseFormula(formula_text);
    const std::vector<int> values(assignment, assignment + length);
    *out = Copy(sparseip::run::Certificate(formula, values));
  });
}

sip_status sip_campaign(const sip_random_params* family, size_t count,
                        const char* algorithm, uint64_t oracle_budget, char** out,
                        size_t* violations) {
  return Guard([&] {
    NeedPointer(out, "out");
    sparseip::run::CampaignParams params;
    params.family = ToParams(family);
    params.count = count;
    params.algorithm = algorithm ? algorithm : "auto";
    params.oracle_budget = oracle_budget;
    const auto res = sparseip::run::Campaign(params);
    *out = Copy(res.document);
    if (violations) *violations = res.violations;
  });
}

}  // extern "C"
