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

// Deterministic market construction.
//
// Random streams come from SplitMix64 so that a GeneratorSpec reproduces the
// same market bit for bit on every platform:
//
//   next():       state += 0x9E3779B97F4A7C15
//                 z = state
//                 z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//                 z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//                 return z ^ (z >> 31)
//   uniform(b):   draw x = next() until x >= (2^64 - b) mod b; return x mod b
//   unit():       (next() >> 11) * 2^-53
//   shuffle(v):   for i = |v|-1 down to 1: swap(v[i], v[uniform(i + 1)])
//
// GenerateMarket draws, in this order: the affiliations (random_partial only:
// for each applicant, unit() < density decides whether it is affiliated, then
// uniform(n) picks the employer), one shuffled employer order per applicant,
// then per employer a shuffled applicant base, a shuffled employer base and,
// for uniform_random, a shuffle of the employer's valid tuples.

#ifndef AFFMATCH_GENERATOR_H_
#define AFFMATCH_GENERATOR_H_

#include <cstdint>
#include <string_view>
#include <vector>

#include "affmatch/market.h"

namespace affmatch {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t Next();
  // Uniform in [0, bound); bound must be positive.
  std::uint64_t Uniform(std::uint64_t bound);
  // Uniform in [0, 1) with 53 bits of precision.
  double Unit();

  template <typename T>
  void Shuffle(std::vector<T>& values) {
    for (std::size_t i = values.size(); i > 1; --i) {
      std::swap(values[i - 1], values[Uniform(i)]);
    }
  }

 private:
  std::uint64_t state_;
};

// An employer's two base orders plus what it needs to know about itself.
struct StrategyInput {
  std::vector<ApplicantIndex> applicant_base;  // best-first, all applicants
  std::vector<EmployerIndex> employer_base;    // best-first, all employers
  EmployerIndex owner = 0;
  std::vector<ApplicantIndex> affiliates;
};

// Ranks every valid tuple by
//   lambda * rank(hire) + (1 - lambda) * mean_k rank(placements[k])
// ascending (the placement term is 0 with no affiliates). Ties go to tuples
// hiring one of the owner's affiliates, then to the better hire, then to the
// lexicographically better placement ranks. Throws InvalidSpec unless
// 0 <= lambda <= 1.
std::vector<EmployerTuple> AlphaWeighted(const StrategyInput& input,
                                         double lambda);
// lambda = 1: hires grouped by the applicant base; always consistent.
std::vector<EmployerTuple> AlphaCandidateFirst(const StrategyInput& input);
// lambda = 0: affiliate placement dominates.
std::vector<EmployerTuple> AlphaAffiliateFirst(const StrategyInput& input);

enum class AffiliationPattern { kBijection, kRandomPartial };
enum class StrategyKind {
  kCandidateFirst,
  kAffiliateFirst,
  kWeighted,
  kUniformRandom,
};

std::string_view AffiliationPatternName(AffiliationPattern pattern);
AffiliationPattern ParseAffiliationPattern(std::string_view name);
std::string_view StrategyKindName(StrategyKind kind);
StrategyKind ParseStrategyKind(std::string_view name);

struct GeneratorSpec {
  std::uint64_t seed = 0;
  int n = 3;
  AffiliationPattern affiliation = AffiliationPattern::kBijection;
  double density = 0.5;  // random_partial only
  StrategyKind strategy = StrategyKind::kCandidateFirst;
  double lambda = 0.5;   // weighted only

  friend bool operator==(const GeneratorSpec&, const GeneratorSpec&) = default;
};

// Agents are labelled a1..an and e1..en; with the bijection pattern a_i is
// the sole affiliate of e_i. Throws InvalidSpec for n < 1 or density/lambda
// outside [0, 1].
Market GenerateMarket(const GeneratorSpec& spec);

}  // namespace affmatch

#endif  // AFFMATCH_GENERATOR_H_
