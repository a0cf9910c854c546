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

#include "affmatch/generator.h"

#include <set>

#include <gtest/gtest.h>

#include "affmatch/errors.h"
#include "affmatch/instance_io.h"
#include "test_util.h"

namespace affmatch {
namespace {

using testing::SurveyInput;
using testing::survey::Strategy;

TEST(SplitMix64Test, ReferenceOutputs) {
  SplitMix64 rng(0);
  EXPECT_EQ(rng.Next(), 0xe220a8397b1dcdafULL);
  EXPECT_EQ(rng.Next(), 0x6e789e6aa1b965f4ULL);
  EXPECT_EQ(rng.Next(), 0x06c45d188009454fULL);
}

TEST(SplitMix64Test, UniformStaysInRange) {
  SplitMix64 rng(42);
  std::set<std::uint64_t> seen;
  for (int i = 0; i < 2000; ++i) {
    const std::uint64_t v = rng.Uniform(7);
    ASSERT_LT(v, 7u);
    seen.insert(v);
  }
  EXPECT_EQ(seen.size(), 7u);
  for (int i = 0; i < 1000; ++i) {
    const double u = rng.Unit();
    ASSERT_GE(u, 0.0);
    ASSERT_LT(u, 1.0);
  }
}

TEST(SplitMix64Test, ShuffleIsAPermutation) {
  SplitMix64 rng(5);
  std::vector<int> v = {0, 1, 2, 3, 4, 5, 6, 7};
  rng.Shuffle(v);
  EXPECT_EQ(std::set<int>(v.begin(), v.end()).size(), 8u);
}

TEST(AlphaStrategyTest, ReproducesExampleOrderings) {
  const StrategyInput input = SurveyInput();
  EXPECT_EQ(AlphaCandidateFirst(input), Strategy(1));
  EXPECT_EQ(AlphaWeighted(input, 1.0), Strategy(1));
  EXPECT_EQ(AlphaAffiliateFirst(input), Strategy(2));
  EXPECT_EQ(AlphaWeighted(input, 0.0), Strategy(2));
  EXPECT_EQ(AlphaWeighted(input, 0.5), Strategy(4));
}

TEST(AlphaStrategyTest, OutputIsAValidCompleteProfile) {
  const StrategyInput input = SurveyInput();
  for (double lambda : {0.0, 0.1, 0.25, 0.5, 0.75, 0.9, 1.0}) {
    const auto profile = AlphaWeighted(input, lambda);
    EXPECT_EQ(static_cast<std::int64_t>(profile.size()), CountValidTuples(3, 3, 1));
    std::set<EmployerTuple> unique(profile.begin(), profile.end());
    EXPECT_EQ(unique.size(), profile.size());
    for (const EmployerTuple& t : profile) {
      EXPECT_TRUE(IsValidTuple(input.owner, input.affiliates, t));
    }
  }
}

TEST(AlphaStrategyTest, NoAffiliatesFollowsApplicantBase) {
  StrategyInput input;
  input.applicant_base = {2, 0, 1};
  input.employer_base = {0, 1, 2};
  input.owner = 1;
  for (double lambda : {0.0, 0.5, 1.0}) {
    const auto profile = AlphaWeighted(input, lambda);
    ASSERT_EQ(profile.size(), 3u);
    EXPECT_EQ(profile[0], (EmployerTuple{2, {}}));
    EXPECT_EQ(profile[1], (EmployerTuple{0, {}}));
    EXPECT_EQ(profile[2], (EmployerTuple{1, {}}));
  }
}

TEST(AlphaStrategyTest, CandidateFirstIsConsistentWithBase) {
  const StrategyInput input = SurveyInput();
  const auto profile = AlphaCandidateFirst(input);
  EXPECT_TRUE(IsConsistentWith(profile, input.applicant_base));
  EXPECT_EQ(InferConsistency(profile, 3), input.applicant_base);
}

TEST(AlphaStrategyTest, LambdaOutOfRange) {
  for (double lambda : {-0.01, 1.5}) {
    try {
      AlphaWeighted(SurveyInput(), lambda);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInvalidSpec);
    }
  }
}

TEST(GenerateMarketTest, DeterministicPerSeed) {
  for (auto strategy : {StrategyKind::kCandidateFirst, StrategyKind::kAffiliateFirst,
                        StrategyKind::kWeighted, StrategyKind::kUniformRandom}) {
    GeneratorSpec spec;
    spec.seed = 99;
    spec.n = 4;
    spec.strategy = strategy;
    spec.affiliation = AffiliationPattern::kRandomPartial;
    const Market a = GenerateMarket(spec);
    const Market b = GenerateMarket(spec);
    EXPECT_EQ(a, b);
    EXPECT_EQ(SerializeInstance({a, spec}), SerializeInstance({b, spec}));
    spec.seed = 100;
    EXPECT_FALSE(GenerateMarket(spec) == a);
  }
}

TEST(GenerateMarketTest, LabelsAndBijection) {
  GeneratorSpec spec;
  spec.n = 4;
  const Market m = GenerateMarket(spec);
  EXPECT_EQ(m.applicant_label(0), "a1");
  EXPECT_EQ(m.employer_label(3), "e4");
  std::set<int> owned;
  for (int e = 0; e < 4; ++e) {
    ASSERT_EQ(m.affiliates(e).size(), 1u);
    owned.insert(m.affiliates(e)[0]);
  }
  EXPECT_EQ(owned.size(), 4u);
}

TEST(GenerateMarketTest, ConsistencyByStrategy) {
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.n = 4;
    spec.affiliation = seed % 2 ? AffiliationPattern::kRandomPartial
                                : AffiliationPattern::kBijection;
    spec.strategy = StrategyKind::kCandidateFirst;
    const Market m = GenerateMarket(spec);
    for (int e = 0; e < 4; ++e) {
      EXPECT_TRUE(InferConsistency(m.profile(e), 4).has_value());
    }
    spec.strategy = StrategyKind::kUniformRandom;
    EXPECT_NO_THROW(ValidateMarket(GenerateMarket(spec).ToRaw()));
  }
}

TEST(GenerateMarketTest, DensityExtremes) {
  GeneratorSpec spec;
  spec.n = 5;
  spec.affiliation = AffiliationPattern::kRandomPartial;
  spec.density = 0.0;
  for (int e = 0; e < 5; ++e) EXPECT_TRUE(GenerateMarket(spec).affiliates(e).empty());
  spec.density = 1.0;
  const Market full = GenerateMarket(spec);
  int total = 0;
  for (int e = 0; e < 5; ++e) total += static_cast<int>(full.affiliates(e).size());
  EXPECT_EQ(total, 5);
}

TEST(GenerateMarketTest, InvalidSpecs) {
  GeneratorSpec spec;
  spec.n = 0;
  EXPECT_THROW(GenerateMarket(spec), Error);
  spec.n = 3;
  spec.density = 2.0;
  spec.affiliation = AffiliationPattern::kRandomPartial;
  EXPECT_THROW(GenerateMarket(spec), Error);
  spec.density = 0.5;
  spec.strategy = StrategyKind::kWeighted;
  spec.lambda = -1.0;
  EXPECT_THROW(GenerateMarket(spec), Error);
  EXPECT_THROW(ParseStrategyKind("greedy"), Error);
  EXPECT_THROW(ParseAffiliationPattern("ring"), Error);
}

}  // namespace
}  // namespace affmatch
