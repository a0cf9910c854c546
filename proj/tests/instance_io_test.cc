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

#include "affmatch/instance_io.h"

#include <gtest/gtest.h>

#include "affmatch/errors.h"
#include "affmatch/generator.h"
#include "test_util.h"

namespace affmatch {
namespace {

using testing::ExampleMarket;
using testing::FixturePath;

ErrorKind KindOf(std::string_view text) {
  try {
    ParseInstance(text);
  } catch (const Error& e) {
    return e.kind();
  }
  ADD_FAILURE() << "parse succeeded";
  return ErrorKind::kSyntaxError;
}

std::string ExampleMarketText() { return ReadFile(FixturePath("example_market.json")); }

std::string Replace(std::string text, const std::string& from, const std::string& to) {
  const auto pos = text.find(from);
  EXPECT_NE(pos, std::string::npos) << from;
  return text.replace(pos, from.size(), to);
}

TEST(ParseInstanceTest, ExampleMarketFixture) {
  const InstanceDocument doc = ParseInstance(ExampleMarketText());
  EXPECT_EQ(doc.market, ExampleMarket());
  EXPECT_FALSE(doc.generator.has_value());
}

TEST(ParseInstanceTest, SerializationIsCanonical) {
  const std::string text = ExampleMarketText();
  EXPECT_EQ(SerializeInstance(ParseInstance(text)), text);
}

TEST(ParseInstanceTest, SyntaxErrors) {
  EXPECT_EQ(KindOf(""), ErrorKind::kSyntaxError);
  EXPECT_EQ(KindOf("{"), ErrorKind::kSyntaxError);
  EXPECT_EQ(KindOf("[]"), ErrorKind::kSyntaxError);
  EXPECT_EQ(KindOf("{}"), ErrorKind::kSyntaxError);
  EXPECT_EQ(KindOf(Replace(ExampleMarketText(), "affmatch-instance/1", "other/2")),
            ErrorKind::kSyntaxError);
  EXPECT_EQ(KindOf(Replace(ExampleMarketText(), "[\"a1\", \"a2\", \"a3\"]", "7")),
            ErrorKind::kSyntaxError);
}

TEST(ParseInstanceTest, SyntaxErrorCarriesLineAndColumn) {
  try {
    ParseInstance("{\n  \"version\": ,\n}");
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kSyntaxError);
    EXPECT_EQ(e.location().rfind("2:", 0), 0u) << e.location();
  }
}

TEST(ParseInstanceTest, MissingTupleIsIncompleteProfile) {
  const std::string text =
      Replace(ExampleMarketText(), "      [\"a3\", \"e1\"],\n", "");
  try {
    ParseInstance(text);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kIncompleteProfile);
    EXPECT_NE(e.location().find("e2"), std::string::npos);
    EXPECT_NE(std::string(e.what()).find("e2"), std::string::npos);
  }
}

TEST(ParseInstanceTest, SemanticErrors) {
  const std::string text = ExampleMarketText();
  EXPECT_EQ(KindOf(Replace(text, "\"a3\": [\"e3\", \"e1\", \"e2\"]", "\"a3\": [\"e3\", \"e1\"]")),
            ErrorKind::kIncompleteApplicantOrder);
  EXPECT_EQ(KindOf(Replace(text, "\"e3\": [\"a3\"]", "\"e3\": [\"a1\"]")),
            ErrorKind::kDuplicateAffiliation);
  EXPECT_EQ(KindOf(Replace(text, "[\"a2\", \"e3\"]", "[\"a2\", \"e1\"]")),
            ErrorKind::kInvalidTuple);
  EXPECT_EQ(KindOf(Replace(text, "[\"a1\", \"a2\", \"a3\"]", "[\"a1\", \"a2\", \"a2\"]")),
            ErrorKind::kDuplicateLabel);
  EXPECT_EQ(KindOf(Replace(text, "[\"e1\", \"e2\", \"e3\"]", "[\"e1\", \"e2\", \"e3\", \"e4\"]")),
            ErrorKind::kSizeMismatch);
  EXPECT_EQ(KindOf(Replace(text, "\"e1\": [\"a1\"]", "\"e1\": [\"zz\"]")),
            ErrorKind::kUnknownAgent);
}

TEST(ParseInstanceTest, AffiliationsMayBeOmitted) {
  RawMarket raw;
  raw.applicants = {"a"};
  raw.employers = {"e"};
  raw.applicant_prefs = {{"a", {"e"}}};
  raw.employer_prefs = {{"e", {{"a"}}}};
  const std::string text = R"({
    "version": "affmatch-instance/1",
    "applicants": ["a"], "employers": ["e"],
    "applicant_prefs": {"a": ["e"]},
    "employer_prefs": {"e": [["a"]]}
  })";
  const InstanceDocument doc = ParseInstance(text);
  EXPECT_TRUE(doc.market.affiliates(0).empty());
}

TEST(RoundTripTest, GeneratedMarkets) {
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    GeneratorSpec spec;
    spec.seed = seed;
    spec.n = 1 + static_cast<int>(seed % 6);
    spec.strategy = static_cast<StrategyKind>(seed % 4);
    spec.affiliation = seed % 3 ? AffiliationPattern::kBijection
                                : AffiliationPattern::kRandomPartial;
    spec.lambda = 0.25;
    const InstanceDocument doc{GenerateMarket(spec), spec};
    const std::string text = SerializeInstance(doc);
    const InstanceDocument back = ParseInstance(text);
    ASSERT_EQ(back, doc) << seed;
    EXPECT_EQ(SerializeInstance(back), text);
  }
}

TEST(ReadFileTest, MissingFile) {
  EXPECT_THROW(ReadFile(FixturePath("does-not-exist.json")), Error);
}

}  // namespace
}  // namespace affmatch
