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

#include <algorithm>
#include <charconv>
#include <cstdlib>
#include <string>
#include <thread>

#include "affmatch/errors.h"

namespace affmatch {

namespace {

void CheckBound(int n, int bound, std::string_view what) {
  if (n > bound) {
    throw Error(ErrorKind::kInstanceTooLarge,
                std::string(what) + " is limited to n <= " +
                    std::to_string(bound) + ", got n = " + std::to_string(n) +
                    " (raise with AFFMATCH_MAX_N)");
  }
}

template <typename Fn>
void ParallelFor(std::size_t count, int threads, Fn&& fn) {
  const auto workers_wanted = static_cast<std::size_t>(std::max(threads, 1));
  const std::size_t workers_count = std::min(workers_wanted, count);
  if (workers_count <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::vector<std::thread> workers;
  for (std::size_t w = 0; w < workers_count; ++w) {
    workers.emplace_back([&, w] {
      for (std::size_t i = w; i < count; i += workers_count) fn(i);
    });
  }
  for (auto& t : workers) t.join();
}

}  // namespace

std::string_view NotionName(StabilityNotion notion) {
  return notion == StabilityNotion::kGreedy ? "greedy" : "strict";
}

StabilityNotion ParseNotion(std::string_view name) {
  if (name == "greedy") return StabilityNotion::kGreedy;
  if (name == "strict") return StabilityNotion::kStrict;
  throw Error(ErrorKind::kInvalidConfig,
              "unknown stability notion '" + std::string(name) + "'");
}

OracleLimits OracleLimits::FromEnvironment() {
  OracleLimits limits;
  if (const char* value = std::getenv("AFFMATCH_MAX_N")) {
    std::string_view text(value);
    int parsed = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), parsed);
    if (ec == std::errc() && ptr == text.data() + text.size() && parsed > 0) {
      limits.max_n = parsed;
      limits.strict_max_n = parsed;
    }
  }
  return limits;
}

std::vector<Matching> EnumerateMatchings(int n, const OracleLimits& limits) {
  CheckBound(n, limits.max_n, "matching enumeration");
  std::vector<EmployerIndex> perm(n);
  for (int i = 0; i < n; ++i) perm[i] = i;
  std::vector<Matching> out;
  out.reserve(Factorial(n));
  do {
    out.emplace_back(perm);
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

StableSetReport StableSet(const Market& market, StabilityNotion notion,
                          const OracleOptions& options) {
  const int n = market.size();
  if (notion == StabilityNotion::kStrict) {
    CheckBound(n, options.limits.strict_max_n, "strict classification");
  }
  std::vector<Matching> all = EnumerateMatchings(n, options.limits);

  StableSetReport report;
  report.notion = notion;
  report.matchings.resize(all.size());
  StrictSearchOptions strict;
  strict.max_n = std::max(options.limits.strict_max_n, n);
  ParallelFor(all.size(), options.threads, [&](std::size_t i) {
    MatchingClassification& c = report.matchings[i];
    c.matching = all[i];
    c.index = i;
    if (notion == StabilityNotion::kGreedy) {
      c.blocking_pairs = FindGreedyBlockingPairs(market, all[i]);
      c.stable = c.blocking_pairs.empty();
    } else {
      StrictStabilityResult r = IsStrictlyStable(market, all[i], strict);
      c.stable = r.stable;
      c.coalition = std::move(r.certificate);
    }
  });
  for (const auto& c : report.matchings) {
    if (c.stable) report.stable.push_back(c.matching);
  }
  report.core_empty = report.stable.empty();
  return report;
}

bool HasGreedyBlockingWitness(const Market& market, const Matching& matching,
                              ApplicantIndex a, EmployerIndex e) {
  if (!market.ApplicantPrefers(a, e, matching.employer_of(a))) return false;
  const int current = OutcomeRank(market, matching, e);
  std::vector<EmployerIndex> perm(market.size());
  for (int i = 0; i < market.size(); ++i) perm[i] = i;
  do {
    if (perm[a] != e) continue;
    EmployerTuple tuple{a, {}};
    for (ApplicantIndex p : market.affiliates(e)) {
      tuple.placements.push_back(perm[p]);
    }
    const int rank = market.TupleRank(e, tuple);
    if (rank != 0 && rank < current) return true;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return false;
}

bool DefinitionEquivalenceCheck(const Market& market,
                                const OracleLimits& limits) {
  const int n = market.size();
  for (const Matching& m : EnumerateMatchings(n, limits)) {
    for (ApplicantIndex a = 0; a < n; ++a) {
      for (EmployerIndex e = 0; e < n; ++e) {
        if (IsGreedyBlockingPair(market, m, a, e) !=
            HasGreedyBlockingWitness(market, m, a, e)) {
          return false;
        }
      }
    }
  }
  return true;
}

}  // namespace affmatch
