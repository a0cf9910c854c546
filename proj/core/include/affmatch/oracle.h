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

// Brute-force ground truth: every perfect matching is enumerated and
// classified, so results here are the reference the solver is checked
// against. Intended for desk-scale markets only.

#ifndef AFFMATCH_ORACLE_H_
#define AFFMATCH_ORACLE_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "affmatch/market.h"
#include "affmatch/matching.h"
#include "affmatch/stability.h"

namespace affmatch {

enum class StabilityNotion { kGreedy, kStrict };

std::string_view NotionName(StabilityNotion notion);
// Throws InvalidConfig for anything other than "greedy" or "strict".
StabilityNotion ParseNotion(std::string_view name);

struct OracleLimits {
  int max_n = 8;         // enumeration and greedy classification
  int strict_max_n = 6;  // strict classification is quadratic in n!

  // Defaults, with both bounds replaced by AFFMATCH_MAX_N when it is set to a
  // positive integer.
  static OracleLimits FromEnvironment();
};

// All n! matchings in canonical order. Throws InstanceTooLarge.
std::vector<Matching> EnumerateMatchings(int n, const OracleLimits& limits = {});

struct MatchingClassification {
  Matching matching;
  std::uint64_t index = 0;  // canonical position, 0-based
  bool stable = false;
  // Greedy notion: every blocking pair, canonical order.
  std::vector<GreedyBlockingPair> blocking_pairs;
  // Strict notion: the coalition for the first witness in canonical order.
  std::optional<StrictBlockingCoalition> coalition;
};

struct StableSetReport {
  StabilityNotion notion = StabilityNotion::kGreedy;
  std::vector<MatchingClassification> matchings;  // all n!, canonical order
  std::vector<Matching> stable;
  bool core_empty = true;
};

struct OracleOptions {
  OracleLimits limits;
  int threads = 1;
};

StableSetReport StableSet(const Market& market, StabilityNotion notion,
                          const OracleOptions& options = {});

// The witness formulation of a greedy blocking pair: some perfect matching
// places a at e, a prefers e to its current partner, and e ranks
// (a, affiliate placements under that matching) above its current outcome.
// Checked by enumerating every matching.
bool HasGreedyBlockingWitness(const Market& market, const Matching& matching,
                              ApplicantIndex a, EmployerIndex e);

// True iff the profile scan and the witness formulation agree on every pair
// of every matching.
bool DefinitionEquivalenceCheck(const Market& market,
                                const OracleLimits& limits = {});

}  // namespace affmatch

#endif  // AFFMATCH_ORACLE_H_
