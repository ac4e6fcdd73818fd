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

#include <gtest/gtest.h>

#include <string>

namespace {

const char* kTriangle =
    R"({"sense":"cover","m":3,"n":3,"b":["1","1","1"],"c":["1","1","1"],"d":["1","1","1"],)"
    R"("entries":[[0,0,"1"],[0,1,"1"],[1,1,"1"],[1,2,"1"],[2,0,"1"],[2,2,"1"]]})";

std::string Take(char* text) {
  std::string out = text ? text : "";
  sip_string_free(text);
  return out;
}

TEST(CApiTest, ParseSerializeRoundTrip) {
  sip_instance* inst = nullptr;
  ASSERT_EQ(sip_instance_parse(kTriangle, &inst), SIP_OK);
  char* text = nullptr;
  ASSERT_EQ(sip_instance_serialize(inst, &text), SIP_OK);
  EXPECT_EQ(Take(text), kTriangle);
  ASSERT_EQ(sip_instance_validate(inst, &text), SIP_OK);
  EXPECT_NE(Take(text).find("\"valid\":true"), std::string::npos);
  sip_instance_free(inst);
}

TEST(CApiTest, ParseErrorSetsLastError) {
  sip_instance* inst = nullptr;
  EXPECT_EQ(sip_instance_parse("{", &inst), SIP_ERR_PARSE);
  EXPECT_EQ(inst, nullptr);
  EXPECT_NE(std::string(sip_last_error()).find("parse failed"), std::string::npos);
  EXPECT_EQ(sip_instance_parse(nullptr, &inst), SIP_ERR_INPUT);
}

TEST(CApiTest, SolveWithOracle) {
  sip_instance* inst = nullptr;
  ASSERT_EQ(sip_instance_parse(kTriangle, &inst), SIP_OK);
  char* report = nullptr;
  int violated = -1;
  ASSERT_EQ(sip_solve(inst, "cover-k", 10000, &report, &violated), SIP_OK);
  const std::string text = Take(report);
  EXPECT_EQ(violated, 0);
  EXPECT_NE(text.find("\"ratio_bound\":\"2\""), std::string::npos);
  EXPECT_NE(text.find("\"observed_ratio\":\"3/2\""), std::string::npos);
  EXPECT_EQ(sip_solve(inst, "pack-2cs", -1, &report, nullptr), SIP_ERR_INPUT);
  ASSERT_EQ(sip_oracle(inst, 10000, &report), SIP_OK);
  EXPECT_NE(Take(report).find("\"objective\":\"2\""), std::string::npos);
  sip_instance_free(inst);
}

TEST(CApiTest, ValidationStatus) {
  sip_instance* inst = nullptr;
  ASSERT_EQ(sip_instance_parse(
                R"({"sense":"cover","m":1,"n":1,"b":["1"],"c":["1"],"d":["3/2"],"entries":[[0,0,"1"]]})",
                &inst),
            SIP_OK);
  char* report = nullptr;
  EXPECT_EQ(sip_solve(inst, "auto", -1, &report, nullptr), SIP_ERR_VALIDATION);
  EXPECT_NE(std::string(sip_last_error()).find("validation failed"), std::string::npos);
  sip_instance_free(inst);
}

TEST(CApiTest, Check) {
  char* out = nullptr;
  int feasible = -1;
  ASSERT_EQ(sip_check(kTriangle, R"({"x":["1","1","0"]})", &out, &feasible), SIP_OK);
  sip_string_free(out);
  EXPECT_EQ(feasible, 1);
  ASSERT_EQ(sip_check(kTriangle, R"({"x":["1","0","0"]})", &out, &feasible), SIP_OK);
  EXPECT_NE(Take(out).find("\"slack\":\"-1\""), std::string::npos);
  EXPECT_EQ(feasible, 0);
}

TEST(CApiTest, Generators) {
  sip_random_params p;
  sip_random_params_init(&p);
  p.seed = 3;
  sip_instance* a = nullptr;
  sip_instance* b = nullptr;
  ASSERT_EQ(sip_gen_random(&p, &a), SIP_OK);
  ASSERT_EQ(sip_gen_random(&p, &b), SIP_OK);
  char* ta = nullptr;
  char* tb = nullptr;
  sip_instance_serialize(a, &ta);
  sip_instance_serialize(b, &tb);
  EXPECT_EQ(Take(ta), Take(tb));
  sip_instance_free(a);
  sip_instance_free(b);

  p.mode = "diagonal";
  EXPECT_EQ(sip_gen_random(&p, &a), SIP_ERR_INPUT);

  sip_instance* gap = nullptr;
  ASSERT_EQ(sip_gen_gap("naive-M", 4, &gap), SIP_OK);
  sip_instance_free(gap);
  EXPECT_EQ(sip_gen_gap("other", 4, &gap), SIP_ERR_INPUT);

  char* gadget = nullptr;
  ASSERT_EQ(sip_gen_hardness("0 1 2 1\n", &gadget), SIP_OK);
  EXPECT_NE(Take(gadget).find("\"labels\""), std::string::npos);
  const int assignment[] = {0, 0, 0};
  char* cert = nullptr;
  ASSERT_EQ(sip_certify_hardness("0 1 2 1\n", assignment, 3, &cert), SIP_OK);
  EXPECT_NE(Take(cert).find("\"cost\":\"27\""), std::string::npos);
  EXPECT_EQ(sip_certify_hardness("0 1 2 1\n", assignment, 2, &cert), SIP_ERR_INPUT);
}

TEST(CApiTest, Campaign) {
  sip_random_params p;
  sip_random_params_init(&p);
  char* out = nullptr;
  size_t violations = 7;
  ASSERT_EQ(sip_campaign(&p, 0, "auto", 1000, &out, &violations), SIP_OK);
  EXPECT_EQ(violations, 0u);
  EXPECT_NE(Take(out).find("\"count\":0"), std::string::npos);
  ASSERT_EQ(sip_campaign(&p, 5, "auto", 100000, &out, &violations), SIP_OK);
  EXPECT_EQ(violations, 0u);
  sip_string_free(out);
}

}  // namespace
