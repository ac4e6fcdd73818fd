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

// Runs the installed command-line tool as a subprocess.

#include <gtest/gtest.h>
#include <sys/wait.h>
#include <unistd.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#ifndef SPARSEIP_CLI
#error "SPARSEIP_CLI must name the tool binary"
#endif

namespace {

struct Outcome {
  int code = -1;
  std::string out;
};

Outcome RunTool(const std::string& args) {
  const std::string cmd = std::string(SPARSEIP_CLI) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  Outcome o;
  if (!pipe) return o;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) o.out.append(buf, n);
  const int status = pclose(pipe);
  o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return o;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("sparseip_cli_" + std::to_string(::getpid()) + "_" +
            ::testing::UnitTest::GetInstance()->current_test_info()->name());
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const auto path = dir_ / name;
    std::ofstream(path) << text;
    return path.string();
  }

  std::filesystem::path dir_;
};

const char* kTriangle =
    R"({"sense":"cover","m":3,"n":3,"b":["1","1","1"],"c":["1","1","1"],"d":["1","1","1"],)"
    R"("entries":[[0,0,"1"],[0,1,"1"],[1,1,"1"],[1,2,"1"],[2,0,"1"],[2,2,"1"]]})";

TEST_F(CliTest, SolveTriangle) {
  const std::string path = Write("tri.json", kTriangle);
  const Outcome o = RunTool("solve " + path + " --algorithm cover-k --budget 10000");
  EXPECT_EQ(o.code, 0);
  EXPECT_NE(o.out.find("\"objective\":\"3\""), std::string::npos);
  EXPECT_NE(o.out.find("\"ratio_bound\":\"2\""), std::string::npos);
  const Outcome text = RunTool("solve " + path + " --format text");
  EXPECT_EQ(text.code, 0);
  EXPECT_NE(text.out.find("ratio_bound    2"), std::string::npos);
}

TEST_F(CliTest, MalformedInputExitsTwo) {
  const std::string bad = Write(
      "bad.json",
      R"({"sense":"cover","m":1,"n":1,"b":["1"],"c":["1"],"d":["1/2"],"entries":[[0,0,"1"]]})");
  const Outcome o = RunTool("solve " + bad);
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.out.find("\"error\":\"validation failed\""), std::string::npos);
  EXPECT_EQ(RunTool("solve " + Write("junk.json", "{")).code, 2);
  EXPECT_EQ(RunTool("solve " + (dir_ / "missing.json").string()).code, 2);
  EXPECT_EQ(RunTool("solve").code, 2);
  EXPECT_EQ(RunTool("frobnicate").code, 2);
}

TEST_F(CliTest, CheckVerdicts) {
  const std::string inst = Write("tri.json", kTriangle);
  EXPECT_EQ(RunTool("check " + inst + " " + Write("ok.json", R"({"x":["1","1","0"]})")).code, 0);
  const Outcome over = RunTool("check " + inst + " " + Write("over.json", R"({"x":["1","2","0"]})"));
  EXPECT_EQ(over.code, 1);
  EXPECT_NE(over.out.find("bound 1"), std::string::npos);
}

TEST_F(CliTest, GeneratorsPipeline) {
  const Outcome gen = RunTool("gen-random --seed 4 --sense pack --mode col-sparse --k 2");
  ASSERT_EQ(gen.code, 0);
  EXPECT_EQ(gen.out, RunTool("gen-random --seed 4 --sense pack --mode col-sparse --k 2").out);
  const std::string inst = Write("pack.json", gen.out);
  const Outcome solved = RunTool("solve " + inst + " --budget 1000000");
  EXPECT_EQ(solved.code, 0);
  EXPECT_NE(solved.out.find("\"variant\":\"pack-2cs\""), std::string::npos);
  const std::string sol = Write("sol.json", solved.out);
  EXPECT_EQ(RunTool("check " + inst + " " + sol).code, 0);
  EXPECT_EQ(RunTool("oracle " + inst).code, 0);

  const Outcome gap = RunTool("gen-gap multiplicity-M --M 5");
  ASSERT_EQ(gap.code, 0);
  const Outcome gap_solved = RunTool("solve " + Write("gap.json", gap.out));
  EXPECT_NE(gap_solved.out.find("\"objective\":\"1\""), std::string::npos);
  EXPECT_EQ(RunTool("gen-gap nothing").code, 2);
}

TEST_F(CliTest, HardnessPipeline) {
  const std::string formula = Write("f.txt", "0 1 2 1\n");
  const Outcome gadget = RunTool("gen-hardness " + formula);
  ASSERT_EQ(gadget.code, 0);
  const Outcome cert = RunTool("certify-hardness " + formula + " --assignment 0,0,0");
  ASSERT_EQ(cert.code, 0);
  EXPECT_NE(cert.out.find("\"cost\":\"27\""), std::string::npos);
  EXPECT_EQ(RunTool("check " + Write("g.json", gadget.out) + " " + Write("c.json", cert.out)).code, 0);
  EXPECT_EQ(RunTool("certify-hardness " + formula + " --assignment 0,1").code, 2);
}

TEST_F(CliTest, Campaign) {
  const Outcome empty = RunTool("campaign --count 0");
  EXPECT_EQ(empty.code, 0);
  EXPECT_NE(empty.out.find("\"count\":0"), std::string::npos);
  const Outcome table = RunTool("campaign --count 10 --k 2 --format text");
  EXPECT_EQ(table.code, 0);
  EXPECT_NE(table.out.find("worst ratio"), std::string::npos);
}

}  // namespace
