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

// Market clearing: deferred acceptance for markets whose employers ignore
// their affiliates, and an exact branch-and-bound search over assignment
// matrices for the general case, with greedy stability enforced through
// lazily generated cuts.

#ifndef AFFMATCH_SOLVER_H_
#define AFFMATCH_SOLVER_H_

#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "affmatch/market.h"
#include "affmatch/matching.h"

namespace affmatch {

// Classical one-to-one instance obtained when every employer profile is
// consistent: employers rank bare applicants by their base order.
struct ReducedInstance {
  std::vector<std::vector<EmployerIndex>> applicant_orders;  // best-first
  std::vector<std::vector<ApplicantIndex>> employer_orders;  // best-first
};

// Throws InconsistentProfiles naming every employer without a consistent
// profile.
ReducedInstance ReduceToMarriage(const Market& market);

// Applicant-proposing deferred acceptance on the reduced instance. The result
// is greedily stable on `market`. Throws InconsistentProfiles.
Matching DeferredAcceptance(const Market& market);
Matching DeferredAcceptance(const ReducedInstance& instance);

enum class ObjectiveKind {
  kFeasibility,
  kMinApplicantRankSum,
  kMinEmployerRankSum,
  kMaxTopChoices,
  kMinEgalitarianSum,
};

std::string_view ObjectiveName(ObjectiveKind kind);
// Accepts the names returned by ObjectiveName; throws InvalidConfig.
ObjectiveKind ParseObjective(std::string_view name);

// Natural value of the objective: 0 for feasibility, rank sums for the min_*
// objectives, and the number of agents (both sides) holding their top choice
// for max_top_choices.
std::int64_t Score(const Market& market, const Matching& matching,
                   ObjectiveKind objective);
// Score oriented for minimization (max_top_choices negated).
std::int64_t Cost(const Market& market, const Matching& matching,
                  ObjectiveKind objective);

enum class CutStrategy { kNoGood, kNoGoodAndConditional };

std::string_view CutStrategyName(CutStrategy strategy);
// "nogood" or "nogood+conditional"; throws InvalidConfig.
CutStrategy ParseCutStrategy(std::string_view name);

// A linear inequality over the assignment variables z[i][j] that every
// greedily stable matching satisfies.
//
// kNoGood excludes one full assignment: sum_i z[i][assignment[i]] <= n - 1.
//
// kConditionalPair forbids (applicant, employer) from blocking while the
// employer's affiliates sit at `snapshot`:
//   z[i][j] + sum_{l better than j for i} z[i][l] + sum_{h in escape} z[h][j]
//     + sum_k (1 - z[p_k][snapshot[k]]) >= 1
// where `escape` holds the hires h for which (h, snapshot) is ranked at least
// as high as every tuple of j hiring i.
struct StabilityCut {
  enum class Kind { kNoGood, kConditionalPair };

  Kind kind = Kind::kNoGood;
  std::vector<EmployerIndex> assignment;
  ApplicantIndex applicant = -1;
  EmployerIndex employer = -1;
  std::vector<EmployerIndex> snapshot;
  std::vector<bool> escape;

  static StabilityCut NoGood(const Matching& matching);
  static StabilityCut ConditionalPair(const Market& market,
                                      const Matching& matching,
                                      ApplicantIndex a, EmployerIndex e);

  bool SatisfiedBy(const Market& market, const Matching& matching) const;
};

struct SolverConfig {
  std::uint64_t node_budget = 10'000'000;
  CutStrategy cuts = CutStrategy::kNoGood;
};

enum class SolveStatus { kStable, kEmptyCore, kInfeasible, kBoundExceeded };

std::string_view SolveStatusName(SolveStatus status);

struct SolveStats {
  std::uint64_t nodes = 0;
  std::uint64_t leaves = 0;
  std::uint64_t no_good_cuts = 0;
  std::uint64_t conditional_cuts = 0;
  std::uint64_t cut_prunes = 0;
  std::uint64_t bound_prunes = 0;
  double wall_seconds = 0.0;
};

struct SolveResult {
  SolveStatus status = SolveStatus::kEmptyCore;
  std::optional<Matching> matching;  // set iff status == kStable
  std::int64_t score = 0;            // natural objective value
  SolveStats stats;
  std::vector<StabilityCut> cuts;    // the cut pool at termination
};

// Exact optimum of `objective` over the greedily stable matchings. Rows are
// branched in roster order, children in the applicant's preference order.
// kInfeasible is reserved for an empty assignment polytope, which cannot
// arise for a validated square market. Throws InvalidConfig when
// node_budget is zero.
SolveResult Solve(const Market& market, ObjectiveKind objective,
                  const SolverConfig& config = {});

}  // namespace affmatch

#endif  // AFFMATCH_SOLVER_H_
