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

#include <gtest/gtest.h>

#include "json.hpp"
#include "sparseip/errors.h"
#include "support/support.h"

namespace sparseip::run {
namespace {

using Json = nlohmann::json;
using testing::MakeInstance;

SparseIP Triangle() {
  return MakeInstance(
      Sense::kCover, 3, 3, {{0, 0, "1"}, {0, 1, "1"}, {1, 1, "1"}, {1, 2, "1"}, {2, 0, "1"}, {2, 2, "1"}},
      {"1", "1", "1"}, {"1", "1", "1"}, {"1", "1", "1"});
}

TEST(RunnerTest, TriangleReport) {
  const RunReport rep = Solve(Triangle(), "cover-k", 10000u);
  EXPECT_EQ(rep.solution.objective, 3);
  EXPECT_EQ(rep.ratio_bound, 2);
  ASSERT_TRUE(rep.observed_ratio.has_value());
  EXPECT_EQ(*rep.observed_ratio, Rational(3, 2));
  EXPECT_FALSE(rep.RatioViolated());
  const Json doc = Json::parse(SerializeReport(rep));
  EXPECT_EQ(doc["ratio_bound"], "2");
  EXPECT_EQ(doc["solution"]["objective"], "3");
  EXPECT_EQ(doc["digest"].get<std::string>().size(), 16u);
}

TEST(RunnerTest, NoOracleNoRatio) {
  const RunReport rep = Solve(Triangle(), "auto", std::nullopt);
  EXPECT_EQ(rep.variant, "cover-k");
  EXPECT_FALSE(rep.observed_ratio.has_value());
  EXPECT_FALSE(Json::parse(SerializeReport(rep)).contains("observed_ratio"));
}

TEST(RunnerTest, AutoPicksTwoCs) {
  const SparseIP inst = MakeInstance(Sense::kPack, 2, 2, {{0, 0, "1"}, {1, 0, "1"}, {1, 1, "1"}},
                                     {"1", "1"}, {"1", "1"}, {"1", "1"});
  EXPECT_EQ(Solve(inst, "auto", std::nullopt).variant, "pack-2cs");
  const SparseIP wide = MakeInstance(Sense::kPack, 3, 1, {{0, 0, "1"}, {1, 0, "1"}, {2, 0, "1"}},
                                     {"1", "1", "1"}, {"1"}, {"1"});
  EXPECT_EQ(Solve(wide, "auto", std::nullopt).variant, "pack-general");
}

TEST(RunnerTest, AutoTriesWidth) {
  const SparseIP inst = MakeInstance(Sense::kPack, 1, 2, {{0, 0, "1/8"}, {0, 1, "1/8"}}, {"1"},
                                     {"1", "1"}, {"3", "3"});
  const RunReport rep = Solve(inst, "auto", std::nullopt);
  EXPECT_EQ(rep.alternatives.size(), 1u);
}

TEST(RunnerTest, ReportedBoundsMatchTheory) {
  const SparseIP pack = MakeInstance(Sense::kPack, 3, 2, {{0, 0, "1"}, {1, 0, "1"}, {2, 0, "1"}, {0, 1, "1"}},
                                     {"1", "1", "1"}, {"1", "1"}, {"1", "1"});
  EXPECT_EQ(Solve(pack, "pack-general", std::nullopt).ratio_bound, 2 * 9 + 2);
  EXPECT_THROW(Solve(pack, "cover-k", std::nullopt), Error);
  EXPECT_THROW(Solve(pack, "greedy", std::nullopt), Error);
}

TEST(RunnerTest, MalformedInstance) {
  SparseIP inst = Triangle();
  inst.entries[0].value = 0;
  try {
    Solve(inst, "auto", std::nullopt);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(Json::parse(ErrorDocument(e))["error"], "validation failed");
  }
}

TEST(CheckTest, Verdicts) {
  const std::string inst = SerializeInstance(Triangle());
  EXPECT_TRUE(Check(inst, R"({"x":["1","1","0"]})").feasible);

  const CheckResult over = Check(inst, R"({"x":["2","1","0"]})");
  EXPECT_FALSE(over.feasible);
  EXPECT_EQ(Json::parse(over.document)["violations"][0]["message"], "bound 0");

  const std::string quarter = SerializeInstance(
      MakeInstance(Sense::kCover, 1, 1, {{0, 0, "3/4"}}, {"1"}, {"1"}, {"1"}));
  const Json doc = Json::parse(Check(quarter, R"({"x":["1"]})").document);
  EXPECT_EQ(doc["violations"][0]["slack"], "-1/4");
  EXPECT_EQ(doc["violations"][0]["kind"], "row");

  const Json frac = Json::parse(Check(quarter, R"({"x":["1/2"]})").document);
  EXPECT_EQ(frac["violations"][0]["kind"], "integrality");
  EXPECT_FALSE(Check(quarter, R"({"x":["1","1"]})").feasible);
  EXPECT_THROW(Check(quarter, R"({"y":[]})"), Error);
  EXPECT_THROW(Check(quarter, "not json"), Error);
}

TEST(CampaignTest, EmptyCampaign) {
  CampaignParams p;
  const CampaignResult res = Campaign(p);
  EXPECT_EQ(res.violations, 0u);
  const Json summary = Json::parse(res.document);
  EXPECT_EQ(summary["count"], 0);
}

TEST(CampaignTest, CoverAndPackRatios) {
  for (Sense sense : {Sense::kCover, Sense::kPack}) {
    CampaignParams p;
    p.count = 100;
    p.family.sense = sense;
    p.family.k = 2;
    p.family.n = 6;
    p.family.m = 5;
    p.family.mode = sense == Sense::kCover ? gen::SparsityMode::kRowSparse
                                           : gen::SparsityMode::kColSparse;
    const CampaignResult res = Campaign(p);
    EXPECT_EQ(res.violations, 0u);
    std::istringstream in(res.document);
    std::string line;
    std::size_t rows = 0;
    const Rational bound = sense == Sense::kCover ? Rational(2) : Rational(10);
    while (std::getline(in, line)) {
      const Json row = Json::parse(line);
      if (row.contains("summary")) continue;
      ++rows;
      if (row.contains("observed_ratio")) {
        EXPECT_LE(*ParseRational(row["observed_ratio"].get<std::string>()), bound);
      }
    }
    EXPECT_EQ(rows, 100u);
  }
}

TEST(CertificateTest, Document) {
  const Json doc = Json::parse(Certificate(gen::ParseFormula("0 1 2 0\n"), {0, 0, 0}));
  EXPECT_EQ(doc["cost"], "24");
  EXPECT_EQ(doc["unsatisfied"], 0);
}

}  // namespace
}  // namespace sparseip::run
