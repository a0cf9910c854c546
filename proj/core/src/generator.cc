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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "affmatch/errors.h"

namespace affmatch {

std::uint64_t SplitMix64::Next() {
  state_ += 0x9E3779B97F4A7C15ULL;
  std::uint64_t z = state_;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

std::uint64_t SplitMix64::Uniform(std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = Next();
    if (x >= threshold) return x % bound;
  }
}

double SplitMix64::Unit() {
  return static_cast<double>(Next() >> 11) * 0x1.0p-53;
}

namespace {

std::vector<int> RankOf(const std::vector<int>& order) {
  std::vector<int> rank(order.size());
  for (std::size_t i = 0; i < order.size(); ++i) {
    rank[order[i]] = static_cast<int>(i) + 1;
  }
  return rank;
}

std::vector<int> Identity(int n) {
  std::vector<int> v(n);
  std::iota(v.begin(), v.end(), 0);
  return v;
}

}  // namespace

std::vector<EmployerTuple> AlphaWeighted(const StrategyInput& input,
                                         double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw Error(ErrorKind::kInvalidSpec, "lambda must lie in [0, 1]");
  }
  const std::vector<int> applicant_rank = RankOf(input.applicant_base);
  const std::vector<int> employer_rank = RankOf(input.employer_base);

  struct Keyed {
    std::int64_t score;  // fixed-point so ties compare exactly
    bool own_affiliate;
    int hire_rank;
    std::vector<int> placement_ranks;
    EmployerTuple tuple;
  };
  std::vector<Keyed> keyed;
  for (EmployerTuple& t : EnumerateValidTuples(
           static_cast<int>(input.applicant_base.size()),
           static_cast<int>(input.employer_base.size()), input.owner,
           input.affiliates)) {
    Keyed k;
    k.hire_rank = applicant_rank[t.hire];
    double placement_mean = 0.0;
    for (EmployerIndex g : t.placements) {
      k.placement_ranks.push_back(employer_rank[g]);
      placement_mean += employer_rank[g];
    }
    if (!t.placements.empty()) placement_mean /= static_cast<double>(t.placements.size());
    const double score = lambda * k.hire_rank + (1.0 - lambda) * placement_mean;
    k.score = std::llround(score * 1e9);
    k.own_affiliate = std::find(input.affiliates.begin(), input.affiliates.end(),
                                t.hire) != input.affiliates.end();
    k.tuple = std::move(t);
    keyed.push_back(std::move(k));
  }
  std::stable_sort(keyed.begin(), keyed.end(),
                   [](const Keyed& x, const Keyed& y) {
                     if (x.score != y.score) return x.score < y.score;
                     if (x.own_affiliate != y.own_affiliate) return x.own_affiliate;
                     if (x.hire_rank != y.hire_rank) return x.hire_rank < y.hire_rank;
                     return x.placement_ranks < y.placement_ranks;
                   });
  std::vector<EmployerTuple> profile;
  profile.reserve(keyed.size());
  for (Keyed& k : keyed) profile.push_back(std::move(k.tuple));
  return profile;
}

std::vector<EmployerTuple> AlphaCandidateFirst(const StrategyInput& input) {
  return AlphaWeighted(input, 1.0);
}

std::vector<EmployerTuple> AlphaAffiliateFirst(const StrategyInput& input) {
  return AlphaWeighted(input, 0.0);
}

std::string_view AffiliationPatternName(AffiliationPattern pattern) {
  return pattern == AffiliationPattern::kBijection ? "bijection"
                                                   : "random_partial";
}

AffiliationPattern ParseAffiliationPattern(std::string_view name) {
  if (name == "bijection") return AffiliationPattern::kBijection;
  if (name == "random_partial") return AffiliationPattern::kRandomPartial;
  throw Error(ErrorKind::kInvalidSpec,
              "unknown affiliation pattern '" + std::string(name) + "'");
}

std::string_view StrategyKindName(StrategyKind kind) {
  switch (kind) {
    case StrategyKind::kCandidateFirst: return "candidate_first";
    case StrategyKind::kAffiliateFirst: return "affiliate_first";
    case StrategyKind::kWeighted: return "weighted";
    case StrategyKind::kUniformRandom: return "uniform_random";
  }
  return "unknown";
}

StrategyKind ParseStrategyKind(std::string_view name) {
  for (StrategyKind k :
       {StrategyKind::kCandidateFirst, StrategyKind::kAffiliateFirst,
        StrategyKind::kWeighted, StrategyKind::kUniformRandom}) {
    if (StrategyKindName(k) == name) return k;
  }
  throw Error(ErrorKind::kInvalidSpec,
              "unknown strategy '" + std::string(name) + "'");
}

Market GenerateMarket(const GeneratorSpec& spec) {
  if (spec.n < 1) throw Error(ErrorKind::kInvalidSpec, "n must be at least 1");
  if (!(spec.density >= 0.0 && spec.density <= 1.0)) {
    throw Error(ErrorKind::kInvalidSpec, "density must lie in [0, 1]");
  }
  if (!(spec.lambda >= 0.0 && spec.lambda <= 1.0)) {
    throw Error(ErrorKind::kInvalidSpec, "lambda must lie in [0, 1]");
  }
  const int n = spec.n;
  SplitMix64 rng(spec.seed);

  RawMarket raw;
  for (int i = 1; i <= n; ++i) {
    raw.applicants.push_back("a" + std::to_string(i));
    raw.employers.push_back("e" + std::to_string(i));
  }

  std::vector<std::vector<ApplicantIndex>> affiliates(n);
  if (spec.affiliation == AffiliationPattern::kBijection) {
    for (int i = 0; i < n; ++i) affiliates[i].push_back(i);
  } else {
    for (ApplicantIndex a = 0; a < n; ++a) {
      if (rng.Unit() < spec.density) {
        affiliates[rng.Uniform(static_cast<std::uint64_t>(n))].push_back(a);
      }
    }
  }
  for (EmployerIndex e = 0; e < n; ++e) {
    RawMarket::LabelList labels;
    for (ApplicantIndex a : affiliates[e]) labels.push_back(raw.applicants[a]);
    raw.affiliations.emplace_back(raw.employers[e], std::move(labels));
  }

  for (ApplicantIndex a = 0; a < n; ++a) {
    std::vector<int> order = Identity(n);
    rng.Shuffle(order);
    RawMarket::LabelList labels;
    for (EmployerIndex e : order) labels.push_back(raw.employers[e]);
    raw.applicant_prefs.emplace_back(raw.applicants[a], std::move(labels));
  }

  for (EmployerIndex e = 0; e < n; ++e) {
    StrategyInput input;
    input.applicant_base = Identity(n);
    rng.Shuffle(input.applicant_base);
    input.employer_base = Identity(n);
    rng.Shuffle(input.employer_base);
    input.owner = e;
    input.affiliates = affiliates[e];

    std::vector<EmployerTuple> profile;
    switch (spec.strategy) {
      case StrategyKind::kCandidateFirst:
        profile = AlphaCandidateFirst(input);
        break;
      case StrategyKind::kAffiliateFirst:
        profile = AlphaAffiliateFirst(input);
        break;
      case StrategyKind::kWeighted:
        profile = AlphaWeighted(input, spec.lambda);
        break;
      case StrategyKind::kUniformRandom:
        profile = EnumerateValidTuples(n, n, e, input.affiliates);
        rng.Shuffle(profile);
        break;
    }
    std::vector<RawMarket::LabelList> tuples;
    for (const EmployerTuple& t : profile) {
      RawMarket::LabelList labels{raw.applicants[t.hire]};
      for (EmployerIndex g : t.placements) labels.push_back(raw.employers[g]);
      tuples.push_back(std::move(labels));
    }
    raw.employer_prefs.emplace_back(raw.employers[e], std::move(tuples));
  }
  return ValidateMarket(raw);
}

}  // namespace affmatch
