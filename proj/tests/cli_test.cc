// Copyright 2026 The ldpcore Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
//

// Runs the ldpcore binary end to end. LDPCORE_CLI_PATH is set by the build.

#include <sys/wait.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "gmock/gmock.h"
#include "gtest/gtest.h"
#include "ldpcore/local_sim.h"
#include "nlohmann/json.hpp"

namespace ldpcore {
namespace {

using ::testing::HasSubstr;
using ::testing::StartsWith;

struct Result {
  int code = -1;
  std::string out;
};

Result Cli(const std::string& args) {
  const std::string cmd =
      std::string(LDPCORE_CLI_PATH) + " " + args + " 2>/dev/null";
  Result r;
  FILE* pipe = popen(cmd.c_str(), "r");
  if (pipe == nullptr) return r;
  char buf[4096];
  size_t got;
  while ((got = fread(buf, 1, sizeof(buf), pipe)) > 0) r.out.append(buf, got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::string Slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = ::testing::TempDir();
    k4_ = Path("k4.txt");
    std::ofstream(k4_) << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n";
    pendant_ = Path("pendant.txt");
    std::ofstream(pendant_) << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n3 4\n";
  }
  std::string Path(const std::string& name) const { return dir_ + "/" + name; }

  std::string dir_;
  std::string k4_;
  std::string pendant_;
};

TEST_F(CliTest, OracleOnClique) {
  Result r = Cli("oracle --graph " + k4_);
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(r.out, StartsWith("k=3,3,3,3; k*=3; rho*=1.5"));
}

TEST_F(CliTest, OracleOnPath) {
  const std::string path = Path("p4.txt");
  ASSERT_EQ(Cli("generate --family path --n 4 --out " + path).code, 0);
  EXPECT_THAT(Cli("oracle --graph " + path).out, StartsWith("k=1,1,1,1;"));
}

TEST_F(CliTest, OracleWitnessIsTheLargerClique) {
  const std::string two = Path("two.txt");
  std::ofstream(two) << "0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n4 5\n5 6\n4 6\n";
  EXPECT_THAT(Cli("oracle --graph " + two).out, HasSubstr("witness=0,1,2,3"));
}

TEST_F(CliTest, GenerateIsReproducible) {
  Result a = Cli("generate --family gnp --n 50 --p 0.1 --seed 3");
  Result b = Cli("generate --family gnp --n 50 --p 0.1 --seed 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_THAT(Cli("generate --family regular --n 10 --degree 3 --seed 1").out,
              StartsWith("n 10\n"));
  Result q = Cli("generate --family query-graph --secret 11 --query 10");
  EXPECT_EQ(q.code, 0);
  EXPECT_THAT(q.out, StartsWith("n 5\n"));
}

TEST_F(CliTest, RunExactCsv) {
  Result r = Cli("run-exact --graph " + pendant_ + " --noise disabled");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(r.out,
            "vertex,k_true,k_est,round\n0,3,3,2\n1,3,3,2\n2,3,3,2\n3,3,3,2\n"
            "4,1,1,1\n");
}

TEST_F(CliTest, RunApproxHasPhaseColumn) {
  Result r = Cli("run-approx --graph " + k4_ + " --noise disabled --eta 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_THAT(r.out, StartsWith("vertex,k_true,k_est,round,phase\n0,3,3,1,1\n"));
}

TEST_F(CliTest, MemorylessCsvAndTranscriptAreByteIdentical) {
  const std::string g = Path("g.txt");
  ASSERT_EQ(Cli("generate --n 60 --degree 6 --seed 2 --out " + g).code, 0);
  for (const char* cmd : {"run-exact", "run-approx"}) {
    const std::string ta = Path("a.jsonl"), tb = Path("b.jsonl");
    Result a = Cli(std::string(cmd) + " --graph " + g +
                   " --seed 9 --memory memoryful --transcript " + ta);
    Result b = Cli(std::string(cmd) + " --graph " + g +
                   " --seed 9 --memory memoryless --transcript " + tb);
    EXPECT_EQ(a.code, 0);
    EXPECT_EQ(a.out, b.out);
    EXPECT_EQ(Slurp(ta), Slurp(tb));
    EXPECT_TRUE(Transcript::FromJsonLines(Slurp(ta), 60).ok());
  }
}

TEST_F(CliTest, RunDensestJson) {
  Result r = Cli("run-densest --graph " + pendant_ + " --noise disabled --mode exact");
  ASSERT_EQ(r.code, 0);
  nlohmann::json j = nlohmann::json::parse(r.out);
  EXPECT_EQ(j["subset"], nlohmann::json({0, 1, 2, 3}));
  EXPECT_EQ(j["density"], 1.5);
  EXPECT_EQ(j["rho_star"], 1.5);
  EXPECT_EQ(j["k_tilde_star"], 3.0);
}

TEST_F(CliTest, Audits) {
  Result r = Cli("audit counter-sensitivity --horizon 256 --trials 100");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["pass"].get<bool>());
  r = Cli("audit stream-discrepancy --graph " + pendant_ + " --u 0 --v 4");
  EXPECT_EQ(r.code, 0);
  r = Cli("audit alpha --graph " + pendant_ + " --seed 1");
  EXPECT_EQ(r.code, 0);
  EXPECT_TRUE(nlohmann::json::parse(r.out)["details"].contains("alpha_obs"));
}

TEST_F(CliTest, SweepIsReproducible) {
  const std::string args =
      "sweep --sizes 32,64 --trials 2 --protocols exact,approx --no-timing "
      "--seed 4";
  Result a = Cli(args + " --threads 1");
  Result b = Cli(args + " --threads 3");
  EXPECT_EQ(a.code, 0);
  EXPECT_EQ(a.out, b.out);
  EXPECT_THAT(a.out, StartsWith("family,n,eps,eta,counter,memory,trial,"
                                "protocol,max_err,rounds,alpha_obs,ms\n"));
}

TEST_F(CliTest, ExitCodes) {
  EXPECT_EQ(Cli("").code, 2);
  EXPECT_EQ(Cli("run-exact --graph " + k4_ + " --epsilon 0").code, 2);
  EXPECT_EQ(Cli("run-exact --graph " + k4_ + " --bogus").code, 2);
  EXPECT_EQ(Cli("run-exact --graph " + Path("missing.txt")).code, 4);
  EXPECT_EQ(Cli("run-exact --graph " + k4_ + " --out /nonexistent/dir/x.csv").code,
            4);
  EXPECT_EQ(Cli("run-exact --graph " + k4_ + " --noise disabled --assert-private")
                .code,
            2);
  EXPECT_EQ(Cli("run-exact --graph " + k4_ +
                " --counter exact-debug --assert-private")
                .code,
            2);
  const std::string path = Path("long.txt");
  ASSERT_EQ(Cli("generate --family path --n 30 --out " + path).code, 0);
  EXPECT_EQ(Cli("run-exact --graph " + path + " --noise disabled --max-rounds 2")
                .code,
            3);
  const std::string bad = Path("bad.txt");
  std::ofstream(bad) << "0 1\n1 one\n";
  EXPECT_EQ(Cli("oracle --graph " + bad).code, 2);
}

TEST_F(CliTest, HelpListsSubcommands) {
  Result r = Cli("--help");
  EXPECT_EQ(r.code, 0);
  for (const char* sub : {"generate", "oracle", "run-exact", "run-approx",
                          "run-densest", "audit", "sweep"}) {
    EXPECT_THAT(r.out, HasSubstr(sub));
  }
}

}  // namespace
}  // namespace ldpcore
