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

#include "affmatch/stability.h"

#include <algorithm>
#include <stdexcept>
#include <string>
#include <thread>

#include "affmatch/errors.h"

namespace affmatch {

namespace {

EmployerTuple RealizedTuple(const Market& market, const Matching& matching,
                            EmployerIndex e) {
  EmployerTuple t;
  t.hire = matching.applicant_of(e);
  for (ApplicantIndex p : market.affiliates(e)) {
    t.placements.push_back(matching.employer_of(p));
  }
  return t;
}

// Per-agent ranks under one matching, computed once and reused against many
// alternatives.
struct RankSnapshot {
  std::vector<int> applicant;  // rank of partner, per applicant
  std::vector<int> employer;   // rank of realized tuple, per employer

  RankSnapshot(const Market& market, const Matching& matching)
      : applicant(market.size()), employer(market.size()) {
    for (int i = 0; i < market.size(); ++i) {
      applicant[i] = market.applicant_rank(i, matching.employer_of(i));
      employer[i] = OutcomeRank(market, matching, i);
    }
  }
};

std::optional<StrictBlockingCoalition> Fixpoint(const Market& market,
                                                const RankSnapshot& current,
                                                const Matching& alternative) {
  const int n = market.size();
  std::vector<bool> in_a(n), in_e(n);
  for (int i = 0; i < n; ++i) {
    in_a[i] = market.applicant_rank(i, alternative.employer_of(i)) <
              current.applicant[i];
  }
  for (int e = 0; e < n; ++e) {
    in_e[e] = OutcomeRank(market, alternative, e) < current.employer[e];
  }
  bool changed = true;
  while (changed) {
    changed = false;
    for (EmployerIndex e = 0; e < n; ++e) {
      if (!in_e[e]) continue;
      bool keep = in_a[alternative.applicant_of(e)];
      for (ApplicantIndex p : market.affiliates(e)) keep = keep && in_a[p];
      if (!keep) {
        in_e[e] = false;
        changed = true;
      }
    }
    for (ApplicantIndex a = 0; a < n; ++a) {
      if (in_a[a] && !in_e[alternative.employer_of(a)]) {
        in_a[a] = false;
        changed = true;
      }
    }
  }
  StrictBlockingCoalition coalition;
  for (int i = 0; i < n; ++i) {
    if (in_a[i]) coalition.applicants.push_back(i);
    if (in_e[i]) coalition.employers.push_back(i);
  }
  if (coalition.applicants.empty() || coalition.employers.empty()) {
    return std::nullopt;
  }
  coalition.witness = alternative;
  return coalition;
}

std::optional<StrictBlockingCoalition> ScanRange(const Market& market,
                                                 const Matching& current,
                                                 const RankSnapshot& ranks,
                                                 std::uint64_t begin,
                                                 std::uint64_t end) {
  if (begin >= end) return std::nullopt;
  Matching alternative = MatchingAt(market.size(), begin);
  std::vector<EmployerIndex> perm(alternative.assignment().begin(),
                                  alternative.assignment().end());
  for (std::uint64_t i = begin; i < end; ++i) {
    if (i != begin) {
      std::next_permutation(perm.begin(), perm.end());
      alternative = Matching(perm);
    }
    if (alternative == current) continue;
    if (auto c = Fixpoint(market, ranks, alternative)) return c;
  }
  return std::nullopt;
}

}  // namespace

Outcome EmployerOutcome(const Market& market, const Matching& matching,
                        EmployerIndex e) {
  if (e < 0 || e >= market.num_employers()) {
    throw Error(ErrorKind::kUnknownAgent,
                "employer index " + std::to_string(e) + " out of range");
  }
  Outcome out{e, RealizedTuple(market, matching, e), 0};
  out.rank = market.TupleRank(e, out.tuple);
  return out;
}

int OutcomeRank(const Market& market, const Matching& matching,
                EmployerIndex e) {
  return market.TupleRank(e, RealizedTuple(market, matching, e));
}

bool IsGreedyBlockingPair(const Market& market, const Matching& matching,
                          ApplicantIndex a, EmployerIndex e) {
  const EmployerIndex partner = matching.employer_of(a);
  if (partner == e || !market.ApplicantPrefers(a, e, partner)) return false;
  return market.BestRankWithHire(e, a) < OutcomeRank(market, matching, e);
}

std::vector<GreedyBlockingPair> FindGreedyBlockingPairs(
    const Market& market, const Matching& matching) {
  const int n = market.size();
  std::vector<int> current(n);
  for (EmployerIndex e = 0; e < n; ++e) {
    current[e] = OutcomeRank(market, matching, e);
  }
  std::vector<GreedyBlockingPair> pairs;
  for (ApplicantIndex a = 0; a < n; ++a) {
    const EmployerIndex partner = matching.employer_of(a);
    for (EmployerIndex e = 0; e < n; ++e) {
      if (e == partner || !market.ApplicantPrefers(a, e, partner)) continue;
      const int best = market.BestRankWithHire(e, a);
      if (best >= current[e]) continue;

      const EmployerTuple& tuple = market.profile(e)[best - 1];
      std::vector<EmployerIndex> partial(n, -1);
      partial[a] = e;
      const auto affiliates = market.affiliates(e);
      for (std::size_t k = 0; k < affiliates.size(); ++k) {
        partial[affiliates[k]] = tuple.placements[k];
      }
      pairs.push_back(GreedyBlockingPair{a, e, tuple, best, current[e],
                                         CompleteGreedily(partial)});
    }
  }
  return pairs;
}

bool IsGreedilyStable(const Market& market, const Matching& matching) {
  const int n = market.size();
  std::vector<int> current(n);
  for (EmployerIndex e = 0; e < n; ++e) {
    current[e] = OutcomeRank(market, matching, e);
  }
  for (ApplicantIndex a = 0; a < n; ++a) {
    const EmployerIndex partner = matching.employer_of(a);
    for (EmployerIndex e : market.applicant_order(a)) {
      if (e == partner) break;
      if (market.BestRankWithHire(e, a) < current[e]) return false;
    }
  }
  return true;
}

bool VerifyGreedyBlockingPair(const Market& market, const Matching& matching,
                              const GreedyBlockingPair& pair) {
  const int n = market.size();
  if (pair.applicant < 0 || pair.applicant >= n || pair.employer < 0 ||
      pair.employer >= n || pair.witness.size() != n) {
    return false;
  }
  const EmployerIndex partner = matching.employer_of(pair.applicant);
  if (!market.ApplicantPrefers(pair.applicant, pair.employer, partner)) {
    return false;
  }
  if (pair.witness_tuple.hire != pair.applicant) return false;
  const int rank = market.TupleRank(pair.employer, pair.witness_tuple);
  const int current = OutcomeRank(market, matching, pair.employer);
  if (rank == 0 || rank != pair.witness_rank || rank >= current) return false;
  return RealizedTuple(market, pair.witness, pair.employer) ==
         pair.witness_tuple;
}

bool CoalitionVerdict::Fails(AgentSide side, int agent) const {
  return std::any_of(failures.begin(), failures.end(),
                     [&](const CoalitionFailure& f) {
                       return f.side == side && f.agent == agent;
                     });
}

CoalitionVerdict CheckCoalition(const Market& market, const Matching& current,
                                const Matching& alternative,
                                std::span<const ApplicantIndex> applicants,
                                std::span<const EmployerIndex> employers) {
  using Reason = CoalitionFailure::Reason;
  const int n = market.size();
  std::vector<bool> in_a(n, false), in_e(n, false);
  for (ApplicantIndex a : applicants) {
    if (a >= 0 && a < n) in_a[a] = true;
  }
  for (EmployerIndex e : employers) {
    if (e >= 0 && e < n) in_e[e] = true;
  }

  CoalitionVerdict verdict;
  auto fail = [&](AgentSide side, int agent, Reason reason) {
    verdict.failures.push_back({side, agent, reason});
  };
  if (std::none_of(in_a.begin(), in_a.end(), [](bool b) { return b; })) {
    fail(AgentSide::kApplicant, -1, Reason::kEmptySide);
  }
  if (std::none_of(in_e.begin(), in_e.end(), [](bool b) { return b; })) {
    fail(AgentSide::kEmployer, -1, Reason::kEmptySide);
  }
  for (ApplicantIndex a = 0; a < n; ++a) {
    if (!in_a[a]) continue;
    if (!in_e[alternative.employer_of(a)]) {
      fail(AgentSide::kApplicant, a, Reason::kPartnerOutside);
    }
    if (!market.ApplicantPrefers(a, alternative.employer_of(a),
                                 current.employer_of(a))) {
      fail(AgentSide::kApplicant, a, Reason::kNotImproving);
    }
  }
  for (EmployerIndex e = 0; e < n; ++e) {
    if (!in_e[e]) continue;
    for (ApplicantIndex p : market.affiliates(e)) {
      if (!in_a[p]) {
        fail(AgentSide::kEmployer, e, Reason::kAffiliateOutside);
        break;
      }
    }
    if (!in_a[alternative.applicant_of(e)]) {
      fail(AgentSide::kEmployer, e, Reason::kPartnerOutside);
    }
    if (OutcomeRank(market, alternative, e) >=
        OutcomeRank(market, current, e)) {
      fail(AgentSide::kEmployer, e, Reason::kNotImproving);
    }
  }
  verdict.blocking = verdict.failures.empty();
  return verdict;
}

std::optional<StrictBlockingCoalition> FindBlockingCoalition(
    const Market& market, const Matching& current,
    const Matching& alternative) {
  if (alternative == current) {
    throw std::invalid_argument("witness matching equals the current matching");
  }
  return Fixpoint(market, RankSnapshot(market, current), alternative);
}

StrictStabilityResult IsStrictlyStable(const Market& market,
                                       const Matching& matching,
                                       const StrictSearchOptions& options) {
  const int n = market.size();
  if (n > options.max_n) {
    throw Error(ErrorKind::kInstanceTooLarge,
                "strict stability search needs n <= " +
                    std::to_string(options.max_n) + ", got " +
                    std::to_string(n));
  }
  const RankSnapshot ranks(market, matching);
  const std::uint64_t total = Factorial(n);
  const auto threads = static_cast<std::uint64_t>(
      std::clamp<std::uint64_t>(options.threads, 1, std::max<std::uint64_t>(total, 1)));

  std::optional<StrictBlockingCoalition> found;
  if (threads == 1) {
    found = ScanRange(market, matching, ranks, 0, total);
  } else {
    // Contiguous chunks; the lowest chunk with a hit holds the lowest witness.
    std::vector<std::optional<StrictBlockingCoalition>> hits(threads);
    std::vector<std::thread> workers;
    const std::uint64_t chunk = (total + threads - 1) / threads;
    for (std::uint64_t t = 0; t < threads; ++t) {
      workers.emplace_back([&, t] {
        const std::uint64_t begin = t * chunk;
        const std::uint64_t end = std::min(total, begin + chunk);
        hits[t] = ScanRange(market, matching, ranks, begin, end);
      });
    }
    for (auto& w : workers) w.join();
    for (auto& hit : hits) {
      if (hit) {
        found = std::move(hit);
        break;
      }
    }
  }
  StrictStabilityResult result;
  result.stable = !found.has_value();
  result.certificate = std::move(found);
  return result;
}

}  // namespace affmatch
