// Copyright 2026 The affmatch Authors.
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

#include "cli.h"

#include <sstream>

#include <gtest/gtest.h>

#include "json.hpp"
#include "test_util.h"

namespace affmatch::cli {
namespace {

using Json = nlohmann::ordered_json;
using affmatch::testing::FixturePath;

struct CliResult {
  int code;
  std::string out;
  std::string err;
};

CliResult Invoke(const std::vector<std::string>& args, const std::string& stdin_text = "") {
  std::istringstream in(stdin_text);
  std::ostringstream out, err;
  const int code = RunCli(args, in, out, err);
  return {code, out.str(), err.str()};
}

const std::string kExampleMarket = FixturePath("example_market.json");

std::string Generated(const std::string& strategy, int n = 3, int seed = 7) {
  const CliResult r = Invoke({"generate", "--seed", std::to_string(seed), "--n",
                        std::to_string(n), "--strategy", strategy});
  EXPECT_EQ(r.code, kExitOk) << r.err;
  return r.out;
}

TEST(CliTest, Validate) {
  const CliResult ok = Invoke({"validate", kExampleMarket});
  EXPECT_EQ(ok.code, kExitOk);
  EXPECT_EQ(ok.out, "valid: 3 applicants, 3 employers\n");
  const CliResult bad = Invoke({"validate", "-"}, "{\"version\": 3}");
  EXPECT_EQ(bad.code, kExitError);
  EXPECT_NE(bad.err.find("SyntaxError"), std::string::npos) << bad.err;
}

TEST(CliTest, EnumerateListsSixMatchings) {
  const CliResult r = Invoke({"enumerate", kExampleMarket});
  ASSERT_EQ(r.code, kExitOk);
  EXPECT_EQ(Json::parse(r.out)["matchings"].size(), 6u);
  const CliResult text = Invoke({"enumerate", kExampleMarket, "--format", "text"});
  EXPECT_EQ(text.out.rfind("6 matchings (n = 3)\n", 0), 0u) << text.out;
}

TEST(CliTest, StableExitCodes) {
  EXPECT_EQ(Invoke({"stable", kExampleMarket}).code, kExitEmptyCore);
  EXPECT_EQ(Invoke({"stable", kExampleMarket, "--notion", "strict"}).code, kExitOk);
  EXPECT_EQ(Invoke({"stable", "-"}, Generated("candidate_first")).code, kExitOk);
}

TEST(CliTest, SolveExitCodes) {
  EXPECT_EQ(Invoke({"solve", kExampleMarket}).code, kExitEmptyCore);
  EXPECT_EQ(Invoke({"solve", kExampleMarket, "--node-budget", "2"}).code, kExitBoundExceeded);
  const CliResult ok = Invoke({"solve", "-", "--objective", "min_egalitarian_sum", "--cuts",
                         "nogood+conditional"},
                        Generated("candidate_first"));
  EXPECT_EQ(ok.code, kExitOk) << ok.err;
  EXPECT_EQ(Json::parse(ok.out)["status"], "Stable");
  const CliResult timed = Invoke({"solve", kExampleMarket, "--timing"});
  EXPECT_NE(timed.out.find("wall_seconds"), std::string::npos);
}

TEST(CliTest, Reduce) {
  EXPECT_EQ(Invoke({"reduce", kExampleMarket}).code, kExitError);
  const CliResult r = Invoke({"reduce", "-"}, Generated("candidate_first"));
  ASSERT_EQ(r.code, kExitOk) << r.err;
  EXPECT_EQ(Json::parse(r.out)["greedily_stable"], true);
}

TEST(CliTest, GenerateFeedsValidate) {
  for (const char* strategy :
       {"candidate_first", "affiliate_first", "weighted", "uniform_random"}) {
    const CliResult r = Invoke({"validate", "-"}, Generated(strategy, 4));
    EXPECT_EQ(r.code, kExitOk) << strategy << r.err;
  }
  const CliResult partial = Invoke({"generate", "--n", "4", "--affiliation", "random_partial",
                              "--density", "0.8"});
  ASSERT_EQ(partial.code, kExitOk);
  EXPECT_EQ(Invoke({"validate", "-"}, partial.out).code, kExitOk);
}

TEST(CliTest, GenerateWarnsAboveOracleBound) {
  const CliResult r = Invoke({"generate", "--n", "9", "--strategy", "uniform_random"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_NE(r.err.find("warning"), std::string::npos);
}

TEST(CliTest, Deterministic) {
  EXPECT_EQ(Generated("uniform_random", 5), Generated("uniform_random", 5));
  EXPECT_NE(Generated("uniform_random", 5, 7), Generated("uniform_random", 5, 8));
  EXPECT_EQ(Invoke({"stable", kExampleMarket, "--notion", "strict", "--threads", "3"}).out,
            Invoke({"stable", kExampleMarket, "--notion", "strict"}).out);
}

TEST(CliTest, ReportRendersJson) {
  const CliResult json = Invoke({"stable", kExampleMarket});
  const CliResult text = Invoke({"report", "-"}, json.out);
  EXPECT_EQ(text.code, kExitOk);
  EXPECT_EQ(text.out, Invoke({"stable", kExampleMarket, "--format", "text"}).out);
  EXPECT_NE(text.out.find("core_empty: true"), std::string::npos);
  EXPECT_EQ(Invoke({"report", "-"}, "[1, 2]").code, kExitError);
}

TEST(CliTest, UsageErrors) {
  EXPECT_EQ(Invoke({}).code, kExitUsage);
  EXPECT_EQ(Invoke({"frobnicate"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"stable", kExampleMarket, "--notion", "weak"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"generate", "--n", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"solve", kExampleMarket, "--node-budget", "0"}).code, kExitUsage);
  EXPECT_EQ(Invoke({"--help"}).code, kExitOk);
}

TEST(CliTest, MissingFile) {
  const CliResult r = Invoke({"validate", FixturePath("absent.json")});
  EXPECT_EQ(r.code, kExitError);
}

}  // namespace
}  // namespace affmatch::cli
