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

#include "affmatch/oracle.h"

#include <cstdlib>
#include <set>

#include <gtest/gtest.h>

#include "affmatch/errors.h"
#include "affmatch/generator.h"
#include "test_util.h"

namespace affmatch {
namespace {

using testing::ExampleMarket;
using testing::Mu;

Market RandomMarket(std::uint64_t seed, int n,
                    StrategyKind strategy = StrategyKind::kUniformRandom) {
  GeneratorSpec spec;
  spec.seed = seed;
  spec.n = n;
  spec.strategy = strategy;
  return GenerateMarket(spec);
}

std::vector<Matching> StableMatchings(const StableSetReport& report) {
  return report.stable;
}

// Classical stable marriage on the reduced orders, by exhaustive check.
std::set<Matching> ClassicalStableSet(const Market& market,
                                      const std::vector<std::vector<int>>& emp_orders) {
  const int n = market.size();
  auto employer_rank = [&](int e, int a) {
    for (int i = 0; i < n; ++i) {
      if (emp_orders[e][i] == a) return i;
    }
    return n;
  };
  std::set<Matching> out;
  for (const Matching& mu : EnumerateMatchings(n)) {
    bool stable = true;
    for (int a = 0; a < n && stable; ++a) {
      for (int e = 0; e < n && stable; ++e) {
        if (market.ApplicantPrefers(a, e, mu.employer_of(a)) &&
            employer_rank(e, a) < employer_rank(e, mu.applicant_of(e))) {
          stable = false;
        }
      }
    }
    if (stable) out.insert(mu);
  }
  return out;
}

TEST(EnumerateMatchingsTest, CountsAndOrder) {
  for (int n = 1; n <= 6; ++n) {
    const auto all = EnumerateMatchings(n);
    ASSERT_EQ(all.size(), Factorial(n));
    for (std::size_t i = 0; i < all.size(); ++i) {
      EXPECT_EQ(CanonicalIndex(all[i]), i);
      EXPECT_EQ(MatchingAt(n, i), all[i]);
      if (i > 0) {
        EXPECT_LT(all[i - 1], all[i]);
      }
    }
  }
  const auto three = EnumerateMatchings(3);
  for (int k = 1; k <= 6; ++k) EXPECT_EQ(three[k - 1], Mu(k));
}

TEST(EnumerateMatchingsTest, TooLarge) {
  OracleLimits limits;
  limits.max_n = 4;
  try {
    EnumerateMatchings(5, limits);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInstanceTooLarge);
  }
}

TEST(StableSetTest, ExampleMarketGreedyCoreIsEmpty) {
  const auto report = StableSet(ExampleMarket(), StabilityNotion::kGreedy);
  EXPECT_TRUE(report.core_empty);
  EXPECT_TRUE(report.stable.empty());
  ASSERT_EQ(report.matchings.size(), 6u);
  const int expected_counts[] = {4, 4, 1, 2, 1, 1};
  for (int k = 0; k < 6; ++k) {
    EXPECT_EQ(report.matchings[k].index, static_cast<std::uint64_t>(k));
    EXPECT_EQ(report.matchings[k].blocking_pairs.size(),
              static_cast<std::size_t>(expected_counts[k]));
  }
  const auto& first = report.matchings[0].blocking_pairs.front();
  EXPECT_EQ(first.applicant, 0);
  EXPECT_EQ(first.employer, 1);
  EXPECT_EQ(first.witness, Mu(4));
}

TEST(StableSetTest, ExampleMarketStrictSet) {
  const auto report = StableSet(ExampleMarket(), StabilityNotion::kStrict);
  EXPECT_FALSE(report.core_empty);
  EXPECT_EQ(StableMatchings(report),
            (std::vector<Matching>{Mu(1), Mu(3), Mu(4), Mu(6)}));
  ASSERT_TRUE(report.matchings[1].coalition.has_value());
  EXPECT_EQ(report.matchings[1].coalition->applicants, std::vector<int>{2});
  EXPECT_EQ(report.matchings[1].coalition->employers, std::vector<int>{2});
  EXPECT_EQ(report.matchings[1].coalition->witness, Mu(1));
  ASSERT_TRUE(report.matchings[4].coalition.has_value());
  EXPECT_EQ(report.matchings[4].coalition->witness, Mu(1));
}

TEST(StableSetTest, ThreadingDoesNotChangeReport) {
  for (std::uint64_t seed = 0; seed < 6; ++seed) {
    const Market m = RandomMarket(seed, 5);
    for (auto notion : {StabilityNotion::kGreedy, StabilityNotion::kStrict}) {
      const auto serial = StableSet(m, notion);
      OracleOptions options;
      options.threads = 4;
      const auto threaded = StableSet(m, notion, options);
      EXPECT_EQ(serial.stable, threaded.stable);
      ASSERT_EQ(serial.matchings.size(), threaded.matchings.size());
      for (std::size_t i = 0; i < serial.matchings.size(); ++i) {
        EXPECT_EQ(serial.matchings[i].blocking_pairs.size(),
                  threaded.matchings[i].blocking_pairs.size());
        EXPECT_EQ(serial.matchings[i].coalition.has_value(),
                  threaded.matchings[i].coalition.has_value());
      }
    }
  }
}

TEST(StableSetTest, StrictLimitIsEnforced) {
  OracleOptions options;
  options.limits.strict_max_n = 3;
  try {
    StableSet(RandomMarket(3, 4), StabilityNotion::kStrict, options);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInstanceTooLarge);
  }
  EXPECT_NO_THROW(StableSet(RandomMarket(3, 4), StabilityNotion::kGreedy, options));
}

TEST(StableSetTest, ConsistentGreedySetIsClassicalStableSet) {
  for (std::uint64_t seed = 0; seed < 30; ++seed) {
    const int n = 2 + static_cast<int>(seed % 4);
    const Market m = RandomMarket(seed, n, StrategyKind::kCandidateFirst);
    std::vector<std::vector<int>> emp_orders;
    for (int e = 0; e < n; ++e) {
      auto base = InferConsistency(m.profile(e), n);
      ASSERT_TRUE(base.has_value());
      emp_orders.push_back(*base);
    }
    const auto report = StableSet(m, StabilityNotion::kGreedy);
    const std::set<Matching> got(report.stable.begin(), report.stable.end());
    EXPECT_EQ(got, ClassicalStableSet(m, emp_orders)) << "seed " << seed;
    EXPECT_FALSE(report.core_empty);
  }
}

TEST(StableSetTest, GreedyStableSubsetOfStrict) {
  for (std::uint64_t seed = 50; seed < 70; ++seed) {
    const int n = 2 + static_cast<int>(seed % 3);
    const Market m = RandomMarket(seed, n);
    const auto greedy = StableSet(m, StabilityNotion::kGreedy);
    const auto strict = StableSet(m, StabilityNotion::kStrict);
    const std::set<Matching> strict_set(strict.stable.begin(), strict.stable.end());
    for (const Matching& mu : greedy.stable) EXPECT_TRUE(strict_set.count(mu));
  }
}

TEST(DefinitionEquivalenceTest, ExampleMarketAndSingleton) {
  EXPECT_TRUE(DefinitionEquivalenceCheck(ExampleMarket()));
  GeneratorSpec spec;
  spec.n = 1;
  EXPECT_TRUE(DefinitionEquivalenceCheck(GenerateMarket(spec)));
}

TEST(DefinitionEquivalenceTest, RandomFourByFour) {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    ASSERT_TRUE(DefinitionEquivalenceCheck(RandomMarket(seed, 4))) << seed;
  }
}

TEST(NotionTest, Names) {
  EXPECT_EQ(ParseNotion("greedy"), StabilityNotion::kGreedy);
  EXPECT_EQ(ParseNotion("strict"), StabilityNotion::kStrict);
  EXPECT_EQ(NotionName(StabilityNotion::kStrict), "strict");
  try {
    ParseNotion("weak");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInvalidConfig);
  }
}

TEST(OracleLimitsTest, EnvironmentOverride) {
  ::unsetenv("AFFMATCH_MAX_N");
  OracleLimits defaults = OracleLimits::FromEnvironment();
  EXPECT_EQ(defaults.max_n, 8);
  EXPECT_EQ(defaults.strict_max_n, 6);
  ::setenv("AFFMATCH_MAX_N", "9", 1);
  OracleLimits raised = OracleLimits::FromEnvironment();
  EXPECT_EQ(raised.max_n, 9);
  EXPECT_EQ(raised.strict_max_n, 9);
  ::unsetenv("AFFMATCH_MAX_N");
}

}  // namespace
}  // namespace affmatch
