// Copyright 2026 The minss Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "minss/json_io.hpp"

namespace minss::cli {
namespace {

namespace fs = std::filesystem;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& path) {
  std::ifstream in(path, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

std::string data(const std::string& name) { return std::string(MINSS_TEST_DATA) + "/" + name; }
std::string golden(const std::string& name) { return slurp(fs::path(MINSS_GOLDEN_DIR) / name); }

class TempDir : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() / ("minss_cli_" + std::to_string(::testing::UnitTest::GetInstance()->random_seed()) +
                                        "_" + ::testing::UnitTest::GetInstance()->current_test_info()->name());
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }
  std::string path(const std::string& name) const { return (dir_ / name).string(); }
  fs::path dir_;
};

// Runs the installed binary through the shell and captures stdout.
Result spawn(const std::string& args) {
  const std::string cmd = std::string(MINSS_CLI_BINARY) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out, ""};
}

TEST(Entropy, UniformAtOrderTwo) {
  const auto r = invoke({"entropy", data("uniform4.json"), "--order", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "2.000000000000\n");
}

TEST(Entropy, ConditionalMinEntropyWithRational) {
  const auto r = invoke({"entropy", data("pi1_n2_p3_4.json"), "--joint", "--target", "S", "--given", "V2", "--order", "inf"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, "0.415037499279 (3/4)\n");
  const auto w = invoke({"entropy", data("pi1_n2_p3_4.json"), "--joint", "--target", "S", "--given", "V2", "--order",
                         "inf", "--measure", "worst"});
  EXPECT_EQ(w.out, "0.152003093445 (9/10)\n");
}

TEST(Entropy, OrderErrors) {
  EXPECT_EQ(invoke({"entropy", data("pi1_n2_p3_4.json"), "--joint", "--target", "S", "--given", "V2", "--order", "0"}).code,
            kBadOrder);
  EXPECT_EQ(invoke({"entropy", data("pi1_n2_p3_4.json"), "--joint", "--target", "S", "--given", "V2", "--order", "2",
                    "--measure", "worst"})
                .code,
            kBadOrder);
  EXPECT_EQ(invoke({"entropy", data("uniform4.json"), "--order", "-2"}).code, kBadOrder);
}

TEST_F(TempDir, EntropyInputErrors) {
  std::ofstream(path("bad.json")) << "{\"variables\": [\"X\"], \"entries\": [";
  EXPECT_EQ(invoke({"entropy", path("bad.json"), "--order", "2"}).code, kBadInput);
  EXPECT_EQ(invoke({"entropy", path("missing.json"), "--order", "2"}).code, kBadInput);
  EXPECT_EQ(invoke({"entropy", data("uniform4.json"), "--order", "0.5"}).code, kBadInput);
  std::ofstream(path("decimal.json")) << R"({"variables":["X"],"entries":[{"tuple":[0],"num":0.5,"den":1}]})";
  EXPECT_EQ(invoke({"entropy", path("decimal.json"), "--order", "2"}).code, kBadInput);
}

TEST(Table, GoldenAndShapes) {
  const auto r = invoke({"table", "--t", "2", "--k", "2", "--n", "2"});
  EXPECT_EQ(r.code, kOk);
  EXPECT_EQ(r.out, golden("table_t2_k2_n2.csv"));
  EXPECT_NE(r.err.find("warning"), std::string::npos);
  const auto k1 = invoke({"table", "--t", "3", "--k", "1", "--n", "2"});
  EXPECT_EQ(k1.out, "s,v1,v2\n0,0,0\n1,1,1\n2,2,2\n");
  const auto t223 = invoke({"table", "--t", "2", "--k", "2", "--n", "3"});
  EXPECT_EQ(t223.out.substr(0, 22), "s,v1,v2,v3\n0,0,0,0\n0,1");
  EXPECT_EQ(invoke({"table", "--t", "4", "--k", "2", "--n", "2"}).code, kBadInput);
  EXPECT_EQ(invoke({"table", "--t", "5", "--k", "0", "--n", "2"}).code, kBadInput);
}

TEST(Share, GoldenBundles) {
  const auto pi1 = invoke({"share", "--scheme", "pi1", "--n", "3", "--p", "3/4", "--secret", "1", "--seed", "7"});
  EXPECT_EQ(pi1.code, kOk);
  EXPECT_EQ(pi1.out, golden("share_pi1_n3_seed7.json"));
  const auto pi2 = invoke({"share", "--scheme", "pi2", "--t", "5", "--k", "2", "--n", "3", "--p", "3/8", "--secret",
                           "3", "--seed", "7"});
  EXPECT_EQ(pi2.out, golden("share_pi2_t5_k2_n3_seed7.json"));
}

TEST_F(TempDir, ShareCombineRoundTrips) {
  ASSERT_EQ(invoke({"share", "--scheme", "pi1", "--n", "3", "--p", "3/4", "--secret", "1", "--seed", "7", "--out",
                    path("pi1.json")})
                .code,
            kOk);
  EXPECT_EQ(invoke({"combine", path("pi1.json")}).out, "1\n");
  EXPECT_EQ(invoke({"combine", path("pi1.json"), "--parties", "1,2"}).code, kNotQualified);

  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    for (int s = 0; s < 5; ++s) {
      ASSERT_EQ(invoke({"share", "--scheme", "pi2", "--t", "5", "--k", "2", "--n", "3", "--p", "1/2", "--secret",
                        std::to_string(s), "--seed", std::to_string(seed), "--out", path("pi2.json")})
                    .code,
                kOk);
      ASSERT_EQ(invoke({"combine", path("pi2.json"), "--parties", "1,3"}).out, std::to_string(s) + "\n");
    }
  }
  const auto single = invoke({"combine", path("pi2.json"), "--parties", "2"});
  EXPECT_EQ(single.code, kNotQualified);
  EXPECT_NE(single.err.find("not a qualified set"), std::string::npos);

  ASSERT_EQ(invoke({"share", "--scheme", "general", "--k", "2", "--n", "3", "--p", "3/4", "--secret", "1", "--seed", "3",
                    "--out", path("gen.json")})
                .code,
            kOk);
  EXPECT_EQ(invoke({"combine", path("gen.json"), "--parties", "2"}).code, kNotQualified);
  EXPECT_EQ(invoke({"combine", path("gen.json"), "--parties", "2,3"}).out, "1\n");

  std::ofstream(path("access.json")) << R"({"n": 4, "min_qualified": [[1,2],[2,3],[3,4]]})";
  ASSERT_EQ(invoke({"share", "--scheme", "general", "--access", path("access.json"), "--p", "2/3", "--secret", "0",
                    "--seed", "5", "--out", path("gen4.json")})
                .code,
            kOk);
  EXPECT_EQ(invoke({"combine", path("gen4.json"), "--parties", "3,4"}).out, "0\n");
  EXPECT_EQ(invoke({"combine", path("gen4.json"), "--parties", "1,3"}).code, kNotQualified);
}

TEST(Share, SampledSecretIsReproducible) {
  const auto a = invoke({"share", "--scheme", "pi2", "--t", "5", "--k", "2", "--n", "3", "--p", "3/8", "--seed", "9"});
  const auto b = invoke({"share", "--scheme", "pi2", "--t", "5", "--k", "2", "--n", "3", "--p", "3/8", "--seed", "9"});
  EXPECT_EQ(a.code, kOk);
  EXPECT_EQ(a.out, b.out);
  EXPECT_EQ(a.err, b.err);
}

TEST(Share, ParameterErrors) {
  EXPECT_EQ(invoke({"share", "--scheme", "pi1", "--n", "3", "--p", "1/2", "--secret", "0", "--seed", "1"}).code, kBadInput);
  EXPECT_EQ(invoke({"share", "--scheme", "pi1", "--n", "3", "--p", "3/4", "--secret", "2", "--seed", "1"}).code, kBadInput);
  EXPECT_EQ(invoke({"share", "--scheme", "pi3", "--n", "3", "--p", "3/4", "--seed", "1"}).code, kBadInput);
  EXPECT_EQ(invoke({"share", "--scheme", "pi2", "--t", "3", "--k", "2", "--n", "3", "--p", "1/2", "--seed", "1"}).code,
            kBadInput);
  EXPECT_EQ(invoke({"share", "--scheme", "pi1", "--n", "3", "--p", "3/4"}).code, kBadInput);
  EXPECT_EQ(invoke({}).code, kBadInput);
  EXPECT_EQ(invoke({"--help"}).code, kOk);
}

TEST_F(TempDir, VerifyExamples) {
  const auto pi2 = invoke({"verify", "--scheme", "pi2", "--t", "5", "--k", "2", "--n", "3", "--p", "3/8", "--checks",
                           "t6,ideal,nonperfect", "--report", path("report.json")});
  EXPECT_EQ(pi2.code, kOk) << pi2.out;
  const Json report = read_json_file(path("report.json"));
  EXPECT_TRUE(report["pass"].get<bool>());
  EXPECT_TRUE(report["results"].contains("t6"));

  // A party at point 0 leaks the secret once points are reduced mod t.
  const auto reduced = invoke({"verify", "--scheme", "pi2", "--t", "2", "--k", "2", "--n", "3", "--p", "3/8",
                               "--checks", "t6,ideal,nonperfect", "--points", "reduced"});
  EXPECT_EQ(reduced.code, kCheckFailed);
  EXPECT_EQ(invoke({"verify", "--scheme", "pi2", "--t", "2", "--k", "2", "--n", "3", "--p", "3/8", "--checks",
                    "t6,ideal,nonperfect"})
                .code,
            kBadInput);

  const auto pi1 = invoke({"verify", "--scheme", "pi1", "--n", "3", "--p", "3/4", "--checks", "t5,ideal"});
  EXPECT_EQ(pi1.code, kCheckFailed);
  EXPECT_NE(pi1.out.find("ideal\t-\tFAIL\tparty 3"), std::string::npos);
  const auto pi1_two = invoke({"verify", "--scheme", "pi1", "--n", "2", "--p", "3/4", "--checks", "t5,t3"});
  EXPECT_EQ(pi1_two.code, kOk) << pi1_two.out;

  EXPECT_EQ(invoke({"verify", "--scheme", "pi1", "--n", "3", "--p", "1/2"}).code, kBadInput);
  EXPECT_EQ(invoke({"verify", "--scheme", "pi1", "--n", "3", "--p", "3/4", "--checks", "t6"}).code, kBadInput);
  EXPECT_EQ(invoke({"verify", "--scheme", "pi1", "--n", "3", "--p", "3/4", "--checks", "t3", "--orders", "0"}).code,
            kBadOrder);
  EXPECT_EQ(invoke({"verify", "--scheme", "general", "--k", "2", "--n", "3", "--p", "3/4", "--checks",
                    "t3,t4,ideal,nonperfect"})
                .code,
            kCheckFailed);
  EXPECT_EQ(invoke({"verify", "--scheme", "general", "--k", "2", "--n", "3", "--p", "3/4", "--checks", "t3,t4,nonperfect"})
                .code,
            kOk);
}

TEST(Report, ContainsSecurityAndIdeality) {
  const auto r = invoke({"report", "--scheme", "pi1", "--n", "2", "--p", "3/4", "--orders", "1,inf"});
  ASSERT_EQ(r.code, kOk);
  const Json doc = parse_json(r.out);
  EXPECT_EQ(doc["security"]["inf"]["epsilon"], 0.0);
  EXPECT_GT(doc["security"]["1"]["epsilon"].get<double>(), 0.143);
  EXPECT_FALSE(doc["ideality"]["ideal"].get<bool>());
  EXPECT_EQ(doc["witness"], (Json{2}));
}

// Separate processes, same invocation, byte-identical output.
TEST(Determinism, BinaryOutputIsStable) {
  for (const std::string args : {"table --t 2 --k 2 --n 2", "share --scheme pi1 --n 3 --p 3/4 --secret 1 --seed 7",
                                 "share --scheme general --k 2 --n 4 --p 3/5 --seed 11"}) {
    const auto a = spawn(args);
    const auto b = spawn(args);
    ASSERT_EQ(a.code, 0) << args;
    EXPECT_FALSE(a.out.empty());
    EXPECT_EQ(a.out, b.out) << args;
  }
  EXPECT_EQ(spawn("table --t 2 --k 2 --n 2").out, golden("table_t2_k2_n2.csv"));
  EXPECT_EQ(spawn("share --scheme pi1 --n 3 --p 3/4 --secret 1 --seed 7").out, golden("share_pi1_n3_seed7.json"));
}

TEST(ExitCodes, BinaryContract) {
  EXPECT_EQ(spawn("entropy /nonexistent.json --order 2").code, kBadInput);
  EXPECT_EQ(spawn(std::string("entropy ") + data("pi1_n2_p3_4.json") + " --joint --target S --given V2 --order 0").code,
            kBadOrder);
  EXPECT_EQ(spawn("verify --scheme pi1 --n 3 --p 3/4 --checks t5,ideal").code, kCheckFailed);
  EXPECT_EQ(spawn("frobnicate").code, kBadInput);
}

}  // namespace
}  // namespace minss::cli
