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

// Greedy and strict stability for affiliate matching markets.
//
// An employer's realized outcome under a matching is the tuple
// (its hire, placements of its affiliates). A pair (a, e) greedily blocks when
// a prefers e to its partner and e ranks some tuple hiring a above its current
// outcome, wherever the affiliates would have to go. A strict blocking
// coalition instead fixes a witness matching under which every member
// strictly improves, members only match among themselves, and every member
// employer brings all of its affiliates along.

#ifndef AFFMATCH_STABILITY_H_
#define AFFMATCH_STABILITY_H_

#include <optional>
#include <span>
#include <vector>

#include "affmatch/market.h"
#include "affmatch/matching.h"

namespace affmatch {

struct Outcome {
  EmployerIndex employer = 0;
  EmployerTuple tuple;
  int rank = 0;  // 1 = best in the employer's profile
};

// Throws UnknownAgent for an out-of-range employer.
Outcome EmployerOutcome(const Market& market, const Matching& matching,
                        EmployerIndex e);
// Profile rank of the realized outcome of e; the hot-path variant.
int OutcomeRank(const Market& market, const Matching& matching, EmployerIndex e);

struct GreedyBlockingPair {
  ApplicantIndex applicant = 0;
  EmployerIndex employer = 0;
  // Best tuple of `employer` hiring `applicant`, and its rank.
  EmployerTuple witness_tuple;
  int witness_rank = 0;
  int current_rank = 0;
  // Realizes the witness tuple: applicant -> employer, affiliates at the
  // tuple's placements, everyone else completed greedily by roster order.
  Matching witness;
};

// All greedy blocking pairs, ordered by applicant then employer.
std::vector<GreedyBlockingPair> FindGreedyBlockingPairs(const Market& market,
                                                        const Matching& matching);
// Profile-scan test for a single pair.
bool IsGreedyBlockingPair(const Market& market, const Matching& matching,
                          ApplicantIndex a, EmployerIndex e);
bool IsGreedilyStable(const Market& market, const Matching& matching);
// Re-checks a certificate against its definition, including that the witness
// matching places a at e and realizes the witness tuple.
bool VerifyGreedyBlockingPair(const Market& market, const Matching& matching,
                              const GreedyBlockingPair& pair);

enum class AgentSide { kApplicant, kEmployer };

struct CoalitionFailure {
  enum class Reason {
    kEmptySide,         // C_A or C_E is empty (agent is meaningless)
    kAffiliateOutside,  // employer has an affiliate outside C_A
    kPartnerOutside,    // witness partner is outside the coalition
    kNotImproving,      // witness outcome is not strictly better
  };
  AgentSide side = AgentSide::kApplicant;
  int agent = -1;
  Reason reason = Reason::kEmptySide;

  friend bool operator==(const CoalitionFailure&,
                         const CoalitionFailure&) = default;
};

struct CoalitionVerdict {
  bool blocking = false;
  // Every violated condition, applicants first, then employers, each in
  // roster order.
  std::vector<CoalitionFailure> failures;

  explicit operator bool() const { return blocking; }
  bool Fails(AgentSide side, int agent) const;
};

struct StrictBlockingCoalition {
  std::vector<ApplicantIndex> applicants;  // sorted
  std::vector<EmployerIndex> employers;    // sorted
  Matching witness;
};

// Evaluates (C_A, C_E) against witness `alternative`. Indices out of range
// are ignored; duplicates are tolerated.
CoalitionVerdict CheckCoalition(const Market& market, const Matching& current,
                                const Matching& alternative,
                                std::span<const ApplicantIndex> applicants,
                                std::span<const EmployerIndex> employers);

// The maximal coalition blocking `current` through `alternative`, found by
// shrinking the strict improvers to a fixpoint; nullopt if none exists.
// Throws std::invalid_argument if alternative == current.
std::optional<StrictBlockingCoalition> FindBlockingCoalition(
    const Market& market, const Matching& current, const Matching& alternative);

struct StrictSearchOptions {
  int max_n = 8;
  int threads = 1;
};

struct StrictStabilityResult {
  bool stable = true;
  // Coalition for the first witness in canonical order, when unstable.
  std::optional<StrictBlockingCoalition> certificate;
};

// Exhaustive over all n! witness matchings. Throws InstanceTooLarge when
// market.size() > options.max_n.
StrictStabilityResult IsStrictlyStable(const Market& market,
                                       const Matching& matching,
                                       const StrictSearchOptions& options = {});

}  // namespace affmatch

#endif  // AFFMATCH_STABILITY_H_
