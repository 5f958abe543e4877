// Copyright 2026 The Authors.
//
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

// Runs the command-line binary as a subprocess. Its path comes from the
// MATROID_FORGE_CLI compile definition.

#include <sys/wait.h>
#include <unistd.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "gtest/gtest.h"

namespace {

struct ProcessResult {
  int exit_code = -1;
  std::string out;
};

ProcessResult Execute(const std::string& args) {
  const std::string command =
      std::string(MATROID_FORGE_CLI) + " " + args + " 2>/dev/null";
  ProcessResult run;
  FILE* pipe = popen(command.c_str(), "r");
  if (pipe == nullptr) return run;
  std::array<char, 4096> buffer;
  std::size_t n;
  while ((n = fread(buffer.data(), 1, buffer.size(), pipe)) > 0) {
    run.out.append(buffer.data(), n);
  }
  const int status = pclose(pipe);
  run.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return run;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("matroid_forge_cli_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& text) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << text;
    return path;
  }

  std::filesystem::path dir_;
};

constexpr char kTriangle[] = R"({"elements": [0, 1, 2],
  "M": {"type": "graphic", "edges": [[0, 0, 1], [1, 1, 2], [2, 2, 0]]},
  "N": {"parts": [{"elements": [0, 1], "cap": 1}, {"elements": [2], "cap": 1}]}})";

TEST_F(CliTest, IntersectIsByteIdenticalAcrossRuns) {
  const std::string input = Write("t.json", kTriangle);
  for (const char* flags : {"", "--trace", "--format text",
                            "--threshold-theta 0 --trace"}) {
    const std::string args = std::string(flags) + " intersect --input " + input;
    const ProcessResult first = Execute(args);
    ASSERT_EQ(first.exit_code, 0) << args;
    EXPECT_FALSE(first.out.empty());
    EXPECT_EQ(Execute(args).out, first.out) << args;
  }
  EXPECT_NE(Execute("intersect --input " + input).out.find("\"agreement\": true"),
            std::string::npos);
}

TEST_F(CliTest, GenerateIsByteIdenticalPerSeed) {
  for (const char* family : {"graphic", "linear_gf2", "uniform", "explicit"}) {
    const std::string args =
        std::string("--seed 9 gen --elements 7 --family ") + family;
    const ProcessResult first = Execute(args);
    ASSERT_EQ(first.exit_code, 0) << args;
    EXPECT_EQ(Execute(args).out, first.out);
    const std::string input = Write(std::string(family) + ".json", first.out);
    const ProcessResult a = Execute("intersect --input " + input);
    EXPECT_EQ(a.exit_code, 0) << family;
    EXPECT_EQ(Execute("intersect --input " + input).out, a.out);
  }
}

TEST_F(CliTest, OtherSubcommandsSucceed) {
  const std::string input = Write("t.json", kTriangle);
  EXPECT_EQ(Execute("edmonds --brute --input " + input).exit_code, 0);
  EXPECT_EQ(Execute("check-axioms --input " + input).exit_code, 0);
  EXPECT_EQ(Execute("classify-uniform --input " + input).exit_code, 0);
  const ProcessResult selftest = Execute("selftest --max-elements 3 --random 20");
  EXPECT_EQ(selftest.exit_code, 0) << selftest.out;
  EXPECT_EQ(Execute("selftest --max-elements 3 --random 20").out, selftest.out);
}

TEST_F(CliTest, VerifyExitCodes) {
  const std::string input = Write("t.json", kTriangle);
  const std::string good =
      Write("good.json", R"({"I": [0, 2], "I_M": [0, 2], "I_N": []})");
  const std::string bad =
      Write("bad.json", R"({"I": [0], "I_M": [0], "I_N": []})");
  EXPECT_EQ(Execute("verify --input " + input + " --witness " + good).exit_code,
            0);
  const ProcessResult failed = Execute("verify --input " + input + " --witness " + bad);
  EXPECT_EQ(failed.exit_code, 2);
  EXPECT_NE(failed.out.find("span_cover"), std::string::npos);
}

TEST_F(CliTest, ErrorExitCodes) {
  const std::string broken = Write("broken.json", "{\"elements\": [0,");
  EXPECT_EQ(Execute("intersect --input " + broken).exit_code, 1);
  EXPECT_EQ(Execute("intersect").exit_code, 1);
  EXPECT_EQ(Execute("--format yaml intersect --input " + broken).exit_code, 1);
  const std::string input = Write("t.json", kTriangle);
  EXPECT_EQ(
      Execute("--threshold-brute 2 edmonds --brute --input " + input).exit_code,
      3);
}

}  // namespace
