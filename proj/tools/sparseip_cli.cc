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

// sparseip command-line tool. Links only the C interface.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "sparseip/sparseip.h"

namespace {

using Json = nlohmann::ordered_json;

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

int ExitFor(sip_status s) {
  switch (s) {
    case SIP_OK: return kExitOk;
    case SIP_ERR_BUDGET:
    case SIP_ERR_INTERNAL: return kExitInternal;
    default: return kExitInput;
  }
}

int Fail(sip_status s) {
  std::cout << sip_last_error() << '\n';
  return ExitFor(s);
}

int FailInput(const std::string& message) {
  Json doc;
  doc["error"] = "input error";
  doc["code"] = "input";
  doc["message"] = message;
  std::cout << doc.dump() << '\n';
  return kExitInput;
}

std::optional<std::string> ReadAll(const std::string& path) {
  std::ostringstream buf;
  if (path == "-") {
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) return std::nullopt;
  buf << in.rdbuf();
  return buf.str();
}

// Owns a library string.
struct Text {
  char* ptr = nullptr;
  ~Text() { sip_string_free(ptr); }
  std::string str() const { return ptr ? ptr : ""; }
};

struct Instance {
  sip_instance* ptr = nullptr;
  ~Instance() { sip_instance_free(ptr); }
};

std::string Field(const Json& doc, const char* key) {
  if (!doc.contains(key)) return "-";
  const Json& v = doc[key];
  return v.is_string() ? v.get<std::string>() : v.dump();
}

void PrintReportText(const Json& r) {
  std::cout << "variant        " << Field(r, "variant") << '\n'
            << "value          " << Field(r["solution"], "objective") << '\n'
            << "lp_value       " << Field(r, "lp_value") << '\n'
            << "ratio_bound    " << Field(r, "ratio_bound") << '\n';
  if (r.contains("oracle_value")) std::cout << "oracle_value   " << Field(r, "oracle_value") << '\n';
  if (r.contains("observed_ratio")) std::cout << "observed_ratio " << Field(r, "observed_ratio") << '\n';
  std::cout << "x              ";
  for (const auto& v : r["solution"]["x"]) std::cout << v.get<std::string>() << ' ';
  std::cout << '\n';
}

void PrintCampaignText(const std::string& doc) {
  std::istringstream in(doc);
  std::string line;
  std::printf("%-6s %-12s %-13s %-12s %-12s %-10s %-8s %s\n", "index", "seed", "variant",
              "value", "oracle", "ratio", "bound", "status");
  while (std::getline(in, line)) {
    const Json row = Json::parse(line);
    if (row.contains("summary")) {
      std::cout << "worst ratio " << Field(row, "worst_ratio") << ", violations "
                << Field(row, "violations") << ", budget exceeded "
                << Field(row, "budget_exceeded") << ", errors " << Field(row, "errors")
                << '\n';
      continue;
    }
    std::printf("%-6s %-12s %-13s %-12s %-12s %-10s %-8s %s\n", Field(row, "index").c_str(),
                Field(row, "seed").c_str(), Field(row, "variant").c_str(),
                Field(row, "value").c_str(), Field(row, "oracle_value").c_str(),
                Field(row, "observed_ratio").c_str(), Field(row, "ratio_bound").c_str(),
                Field(row, "status").c_str());
  }
}

struct FamilyOptions {
  std::uint64_t seed = 0;
  std::string sense = "cover";
  std::size_t n = 6;
  std::size_t m = 6;
  std::size_t k = 2;
  std::string mode = "row-sparse";
  std::size_t denominators = 5;
  std::string d_mode = "mixed";
  std::string max_entry;

  void Register(CLI::App* app) {
    app->add_option("--seed", seed, "Seed (first instance's seed for campaigns)");
    app->add_option("--sense", sense, "cover or pack")->check(CLI::IsMember({"cover", "pack"}));
    app->add_option("--n", n, "Number of columns");
    app->add_option("--m", m, "Number of rows");
    app->add_option("--k", k, "Row or column sparsity bound");
    app->add_option("--mode", mode, "row-sparse or col-sparse")
        ->check(CLI::IsMember({"row-sparse", "col-sparse"}));
    app->add_option("--denominators", denominators, "Largest coefficient denominator");
    app->add_option("--d-mode", d_mode, "unit, small, mixed or inf")
        ->check(CLI::IsMember({"unit", "small", "mixed", "inf"}));
    app->add_option("--max-entry", max_entry, "Cap entries at this rational and set b = 1");
  }

  sip_random_params Params() const {
    sip_random_params p;
    sip_random_params_init(&p);
    p.seed = seed;
    p.sense = sense.c_str();
    p.n = n;
    p.m = m;
    p.k = k;
    p.mode = mode.c_str();
    p.denominator_bound = denominators;
    p.d_mode = d_mode.c_str();
    p.max_entry = max_entry.empty() ? nullptr : max_entry.c_str();
    return p;
  }
};

int LoadInstance(const std::string& path, Instance& inst) {
  const auto text = ReadAll(path);
  if (!text) return FailInput("cannot read '" + path + "'");
  const sip_status s = sip_instance_parse(text->c_str(), &inst.ptr);
  return s == SIP_OK ? kExitOk : Fail(s);
}

int PrintInstance(const Instance& inst) {
  Text out;
  const sip_status s = sip_instance_serialize(inst.ptr, &out.ptr);
  if (s != SIP_OK) return Fail(s);
  std::cout << out.str() << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Approximation algorithms for sparse covering and packing integer programs"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", std::string(sip_version()));
  std::string format = "json";
  app.add_option("--format", format, "Output format: json or text")
      ->check(CLI::IsMember({"json", "text"}));

  std::string instance_path;
  std::string solution_path;
  std::string formula_path;
  std::string algorithm = "auto";
  std::int64_t budget = -1;
  std::uint64_t oracle_budget = 2000000;

  auto* solve = app.add_subcommand("solve", "Solve an instance file ('-' reads stdin)");
  solve->add_option("instance", instance_path)->required();
  solve->add_option("--algorithm", algorithm, "cover-k, pack-general, pack-2cs, pack-width or auto")
      ->check(CLI::IsMember({"cover-k", "pack-general", "pack-2cs", "pack-width", "auto"}));
  solve->add_option("--budget", budget, "Also run the exact oracle with this node budget");

  auto* check = app.add_subcommand("check", "Verify a solution against an instance");
  check->add_option("instance", instance_path)->required();
  check->add_option("solution", solution_path)->required();

  auto* oracle = app.add_subcommand("oracle", "Exact optimum by branch and bound");
  oracle->add_option("instance", instance_path)->required();
  oracle->add_option("--budget", oracle_budget, "Node budget");

  FamilyOptions family;
  auto* gen_random = app.add_subcommand("gen-random", "Seeded random sparse instance");
  family.Register(gen_random);

  std::string fixture;
  std::int64_t big_m = 2;
  auto* gen_gap = app.add_subcommand("gen-gap", "Integrality-gap fixture");
  gen_gap->add_option("fixture", fixture, "naive-M or multiplicity-M")->required();
  gen_gap->add_option("--M", big_m, "Fixture parameter M >= 1");

  auto* gen_hardness = app.add_subcommand("gen-hardness", "Demand edge cover gadget for a formula");
  gen_hardness->add_option("formula", formula_path, "Lines 'i j k C'")->required();

  std::vector<int> assignment;
  auto* certify = app.add_subcommand("certify-hardness", "Edge cover of cost 24m + 3t for an assignment");
  certify->add_option("formula", formula_path)->required();
  certify->add_option("--assignment", assignment, "0-1 values, comma separated")
      ->delimiter(',')
      ->required();

  std::size_t count = 0;
  FamilyOptions campaign_family;
  auto* campaign = app.add_subcommand("campaign", "Solve and oracle a seeded random family");
  campaign_family.Register(campaign);
  campaign->add_option("--count", count, "Number of instances");
  campaign->add_option("--algorithm", algorithm)
      ->check(CLI::IsMember({"cover-k", "pack-general", "pack-2cs", "pack-width", "auto"}));
  campaign->add_option("--budget", oracle_budget, "Oracle node budget per instance");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (solve->parsed()) {
    Instance inst;
    if (int rc = LoadInstance(instance_path, inst)) return rc;
    Text report;
    int violated = 0;
    const sip_status s =
        sip_solve(inst.ptr, algorithm.c_str(), budget, &report.ptr, &violated);
    if (s != SIP_OK) return Fail(s);
    if (format == "text") {
      PrintReportText(Json::parse(report.str()));
    } else {
      std::cout << report.str() << '\n';
    }
    return violated ? kExitViolation : kExitOk;
  }
  if (check->parsed()) {
    const auto inst_text = ReadAll(instance_path);
    if (!inst_text) return FailInput("cannot read '" + instance_path + "'");
    const auto sol_text = ReadAll(solution_path);
    if (!sol_text) return FailInput("cannot read '" + solution_path + "'");
    Text out;
    int feasible = 0;
    const sip_status s = sip_check(inst_text->c_str(), sol_text->c_str(), &out.ptr, &feasible);
    if (s != SIP_OK) return Fail(s);
    if (format == "text") {
      const Json doc = Json::parse(out.str());
      if (feasible) {
        std::cout << "feasible, objective " << Field(doc, "objective") << '\n';
      } else {
        for (const auto& v : doc["violations"]) {
          std::cout << v["message"].get<std::string>();
          if (v.contains("slack")) std::cout << " slack " << v["slack"].get<std::string>();
          std::cout << '\n';
        }
      }
    } else {
      std::cout << out.str() << '\n';
    }
    return feasible ? kExitOk : kExitViolation;
  }
  if (oracle->parsed()) {
    Instance inst;
    if (int rc = LoadInstance(instance_path, inst)) return rc;
    Text out;
    const sip_status s = sip_oracle(inst.ptr, oracle_budget, &out.ptr);
    if (s != SIP_OK) return Fail(s);
    if (format == "text") {
      const Json doc = Json::parse(out.str());
      std::cout << "outcome        " << doc["outcome"].get<std::string>() << '\n'
                << "nodes          " << doc["nodes"] << '\n';
      if (doc.contains("solution")) {
        std::cout << "value          " << doc["solution"]["objective"].get<std::string>() << '\n'
                  << "x              ";
        for (const auto& v : doc["solution"]["x"]) std::cout << v.get<std::string>() << ' ';
        std::cout << '\n';
      }
    } else {
      std::cout << out.str() << '\n';
    }
    return kExitOk;
  }
  if (gen_random->parsed()) {
    const sip_random_params p = family.Params();
    Instance inst;
    const sip_status s = sip_gen_random(&p, &inst.ptr);
    if (s != SIP_OK) return Fail(s);
    return PrintInstance(inst);
  }
  if (gen_gap->parsed()) {
    Instance inst;
    const sip_status s = sip_gen_gap(fixture.c_str(), big_m, &inst.ptr);
    if (s != SIP_OK) return Fail(s);
    return PrintInstance(inst);
  }
  if (gen_hardness->parsed() || certify->parsed()) {
    const auto text = ReadAll(formula_path);
    if (!text) return FailInput("cannot read '" + formula_path + "'");
    Text out;
    const sip_status s =
        gen_hardness->parsed()
            ? sip_gen_hardness(text->c_str(), &out.ptr)
            : sip_certify_hardness(text->c_str(), assignment.data(), assignment.size(), &out.ptr);
    if (s != SIP_OK) return Fail(s);
    std::cout << out.str() << '\n';
    return kExitOk;
  }
  if (campaign->parsed()) {
    const sip_random_params p = campaign_family.Params();
    Text out;
    std::size_t violations = 0;
    const sip_status s =
        sip_campaign(&p, count, algorithm.c_str(), oracle_budget, &out.ptr, &violations);
    if (s != SIP_OK) return Fail(s);
    if (format == "text") {
      PrintCampaignText(out.str());
    } else {
      std::cout << out.str();
    }
    return violations ? kExitViolation : kExitOk;
  }
  return kExitInput;
}
