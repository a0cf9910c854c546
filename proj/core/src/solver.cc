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

#include "affmatch/solver.h"

#include <algorithm>
#include <chrono>
#include <limits>
#include <set>
#include <string>
#include <tuple>

#include "affmatch/errors.h"
#include "affmatch/stability.h"

namespace affmatch {

ReducedInstance ReduceToMarriage(const Market& market) {
  const int n = market.size();
  ReducedInstance reduced;
  std::string offenders;
  for (EmployerIndex e = 0; e < n; ++e) {
    auto base = InferConsistency(market.profile(e), n);
    if (!base) {
      if (!offenders.empty()) offenders += ", ";
      offenders += market.employer_label(e);
      continue;
    }
    reduced.employer_orders.push_back(std::move(*base));
  }
  if (!offenders.empty()) {
    throw Error(ErrorKind::kInconsistentProfiles,
                "employers without a consistent profile: " + offenders);
  }
  for (ApplicantIndex a = 0; a < n; ++a) {
    auto order = market.applicant_order(a);
    reduced.applicant_orders.emplace_back(order.begin(), order.end());
  }
  return reduced;
}

Matching DeferredAcceptance(const ReducedInstance& instance) {
  const int n = static_cast<int>(instance.applicant_orders.size());
  std::vector<std::vector<int>> employer_rank(n, std::vector<int>(n));
  for (EmployerIndex e = 0; e < n; ++e) {
    for (int k = 0; k < n; ++k) employer_rank[e][instance.employer_orders[e][k]] = k;
  }
  std::vector<int> next_proposal(n, 0);
  std::vector<ApplicantIndex> held(n, -1);
  std::vector<ApplicantIndex> free_applicants;
  for (ApplicantIndex a = n - 1; a >= 0; --a) free_applicants.push_back(a);

  while (!free_applicants.empty()) {
    const ApplicantIndex a = free_applicants.back();
    free_applicants.pop_back();
    const EmployerIndex e = instance.applicant_orders[a][next_proposal[a]++];
    const ApplicantIndex incumbent = held[e];
    if (incumbent == -1) {
      held[e] = a;
    } else if (employer_rank[e][a] < employer_rank[e][incumbent]) {
      held[e] = a;
      free_applicants.push_back(incumbent);
    } else {
      free_applicants.push_back(a);
    }
  }
  std::vector<EmployerIndex> employer_of(n);
  for (EmployerIndex e = 0; e < n; ++e) employer_of[held[e]] = e;
  return Matching(std::move(employer_of));
}

Matching DeferredAcceptance(const Market& market) {
  return DeferredAcceptance(ReduceToMarriage(market));
}

namespace {

constexpr std::pair<ObjectiveKind, std::string_view> kObjectiveNames[] = {
    {ObjectiveKind::kFeasibility, "feasibility"},
    {ObjectiveKind::kMinApplicantRankSum, "min_applicant_rank_sum"},
    {ObjectiveKind::kMinEmployerRankSum, "min_employer_rank_sum"},
    {ObjectiveKind::kMaxTopChoices, "max_top_choices"},
    {ObjectiveKind::kMinEgalitarianSum, "min_egalitarian_sum"},
};

}  // namespace

std::string_view ObjectiveName(ObjectiveKind kind) {
  for (const auto& [k, name] : kObjectiveNames) {
    if (k == kind) return name;
  }
  return "unknown";
}

ObjectiveKind ParseObjective(std::string_view name) {
  for (const auto& [k, known] : kObjectiveNames) {
    if (known == name) return k;
  }
  throw Error(ErrorKind::kInvalidConfig,
              "unknown objective '" + std::string(name) + "'");
}

std::int64_t Score(const Market& market, const Matching& matching,
                   ObjectiveKind objective) {
  const int n = market.size();
  std::int64_t applicant_sum = 0, employer_sum = 0, top = 0;
  for (int i = 0; i < n; ++i) {
    const int ar = market.applicant_rank(i, matching.employer_of(i));
    const int er = OutcomeRank(market, matching, i);
    applicant_sum += ar;
    employer_sum += er;
    top += (ar == 1) + (er == 1);
  }
  switch (objective) {
    case ObjectiveKind::kFeasibility: return 0;
    case ObjectiveKind::kMinApplicantRankSum: return applicant_sum;
    case ObjectiveKind::kMinEmployerRankSum: return employer_sum;
    case ObjectiveKind::kMaxTopChoices: return top;
    case ObjectiveKind::kMinEgalitarianSum: return applicant_sum + employer_sum;
  }
  return 0;
}

std::int64_t Cost(const Market& market, const Matching& matching,
                  ObjectiveKind objective) {
  const std::int64_t s = Score(market, matching, objective);
  return objective == ObjectiveKind::kMaxTopChoices ? -s : s;
}

std::string_view CutStrategyName(CutStrategy strategy) {
  return strategy == CutStrategy::kNoGood ? "nogood" : "nogood+conditional";
}

CutStrategy ParseCutStrategy(std::string_view name) {
  if (name == "nogood") return CutStrategy::kNoGood;
  if (name == "nogood+conditional") return CutStrategy::kNoGoodAndConditional;
  throw Error(ErrorKind::kInvalidConfig,
              "unknown cut strategy '" + std::string(name) + "'");
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kStable: return "Stable";
    case SolveStatus::kEmptyCore: return "EmptyCore";
    case SolveStatus::kInfeasible: return "Infeasible";
    case SolveStatus::kBoundExceeded: return "BoundExceeded";
  }
  return "Unknown";
}

StabilityCut StabilityCut::NoGood(const Matching& matching) {
  StabilityCut cut;
  cut.kind = Kind::kNoGood;
  cut.assignment.assign(matching.assignment().begin(),
                        matching.assignment().end());
  return cut;
}

StabilityCut StabilityCut::ConditionalPair(const Market& market,
                                           const Matching& matching,
                                           ApplicantIndex a, EmployerIndex e) {
  StabilityCut cut;
  cut.kind = Kind::kConditionalPair;
  cut.applicant = a;
  cut.employer = e;
  for (ApplicantIndex p : market.affiliates(e)) {
    cut.snapshot.push_back(matching.employer_of(p));
  }
  const int threshold = market.BestRankWithHire(e, a);
  cut.escape.assign(market.size(), false);
  for (ApplicantIndex h = 0; h < market.size(); ++h) {
    const int rank = market.TupleRank(e, EmployerTuple{h, cut.snapshot});
    cut.escape[h] = rank != 0 && rank <= threshold;
  }
  return cut;
}

bool StabilityCut::SatisfiedBy(const Market& market,
                               const Matching& matching) const {
  if (kind == Kind::kNoGood) {
    return !std::equal(assignment.begin(), assignment.end(),
                       matching.assignment().begin(),
                       matching.assignment().end());
  }
  const EmployerIndex partner = matching.employer_of(applicant);
  if (partner == employer || market.ApplicantPrefers(applicant, partner, employer)) {
    return true;
  }
  if (escape[matching.applicant_of(employer)]) return true;
  const auto affiliates = market.affiliates(employer);
  for (std::size_t k = 0; k < affiliates.size(); ++k) {
    if (matching.employer_of(affiliates[k]) != snapshot[k]) return true;
  }
  return false;
}

namespace {

// Depth-first branch and bound. Row `depth` is the next applicant to assign;
// rows [0, depth) are fixed.
class BranchAndBound {
 public:
  BranchAndBound(const Market& market, ObjectiveKind objective,
                 const SolverConfig& config)
      : market_(market),
        objective_(objective),
        config_(config),
        n_(market.size()),
        employer_of_(n_, -1),
        applicant_of_(n_, -1) {}

  SolveResult Run() {
    const auto start = std::chrono::steady_clock::now();
    Search(0);
    SolveResult result;
    if (aborted_) {
      result.status = SolveStatus::kBoundExceeded;
    } else if (incumbent_) {
      result.status = SolveStatus::kStable;
      result.score = Score(market_, *incumbent_, objective_);
    } else {
      result.status = SolveStatus::kEmptyCore;
    }
    if (!aborted_) result.matching = std::move(incumbent_);
    stats_.wall_seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
            .count();
    result.stats = stats_;
    result.cuts = std::move(cuts_);
    return result;
  }

 private:
  bool Done() const {
    return aborted_ ||
           (objective_ == ObjectiveKind::kFeasibility && incumbent_.has_value());
  }

  void Search(int depth) {
    if (Done()) return;
    if (++stats_.nodes > config_.node_budget) {
      aborted_ = true;
      return;
    }
    if (depth == n_) {
      Leaf();
      return;
    }
    for (EmployerIndex e : market_.applicant_order(depth)) {
      if (applicant_of_[e] != -1) continue;
      employer_of_[depth] = e;
      applicant_of_[e] = depth;
      if (ViolatesConditionalCut(depth + 1)) {
        ++stats_.cut_prunes;
      } else if (incumbent_ && LowerBound(depth + 1) >= incumbent_cost_) {
        ++stats_.bound_prunes;
      } else {
        Search(depth + 1);
      }
      employer_of_[depth] = -1;
      applicant_of_[e] = -1;
      if (Done()) return;
    }
  }

  void Leaf() {
    ++stats_.leaves;
    Matching matching(employer_of_);
    for (const StabilityCut& cut : cuts_) {
      if (cut.kind == StabilityCut::Kind::kNoGood &&
          !cut.SatisfiedBy(market_, matching)) {
        ++stats_.cut_prunes;
        return;
      }
    }
    const auto pairs = FindGreedyBlockingPairs(market_, matching);
    if (pairs.empty()) {
      const std::int64_t cost = Cost(market_, matching, objective_);
      if (!incumbent_ || cost < incumbent_cost_) {
        incumbent_ = std::move(matching);
        incumbent_cost_ = cost;
      }
      return;
    }
    cuts_.push_back(StabilityCut::NoGood(matching));
    ++stats_.no_good_cuts;
    if (config_.cuts != CutStrategy::kNoGoodAndConditional) return;
    for (const GreedyBlockingPair& pair : pairs) {
      StabilityCut cut = StabilityCut::ConditionalPair(market_, matching,
                                                       pair.applicant,
                                                       pair.employer);
      if (!seen_.emplace(cut.applicant, cut.employer, cut.snapshot).second) {
        continue;
      }
      cuts_.push_back(std::move(cut));
      ++stats_.conditional_cuts;
    }
  }

  // A conditional cut is violated once every one of its terms is fixed at 0.
  bool ViolatesConditionalCut(int depth) const {
    for (const StabilityCut& cut : cuts_) {
      if (cut.kind != StabilityCut::Kind::kConditionalPair) continue;
      if (cut.applicant >= depth) continue;
      const EmployerIndex partner = employer_of_[cut.applicant];
      if (partner == cut.employer ||
          market_.ApplicantPrefers(cut.applicant, partner, cut.employer)) {
        continue;
      }
      const ApplicantIndex hire = applicant_of_[cut.employer];
      if (hire == -1 || cut.escape[hire]) continue;
      const auto affiliates = market_.affiliates(cut.employer);
      bool all_at_snapshot = true;
      for (std::size_t k = 0; k < affiliates.size() && all_at_snapshot; ++k) {
        all_at_snapshot = affiliates[k] < depth &&
                          employer_of_[affiliates[k]] == cut.snapshot[k];
      }
      if (all_at_snapshot) return true;
    }
    return false;
  }

  std::int64_t LowerBound(int depth) const {
    const bool applicant_terms =
        objective_ == ObjectiveKind::kMinApplicantRankSum ||
        objective_ == ObjectiveKind::kMinEgalitarianSum ||
        objective_ == ObjectiveKind::kMaxTopChoices;
    const bool employer_terms =
        objective_ == ObjectiveKind::kMinEmployerRankSum ||
        objective_ == ObjectiveKind::kMinEgalitarianSum ||
        objective_ == ObjectiveKind::kMaxTopChoices;
    if (objective_ == ObjectiveKind::kFeasibility) return 0;

    // For max_top_choices the bound counts agents that can still reach rank
    // 1 and is returned negated.
    const bool top = objective_ == ObjectiveKind::kMaxTopChoices;
    std::int64_t bound = 0;
    if (applicant_terms) {
      for (ApplicantIndex a = 0; a < n_; ++a) {
        int best;
        if (a < depth) {
          best = market_.applicant_rank(a, employer_of_[a]);
        } else {
          best = n_;
          for (EmployerIndex e : market_.applicant_order(a)) {
            if (applicant_of_[e] == -1) {
              best = market_.applicant_rank(a, e);
              break;
            }
          }
        }
        bound += top ? (best == 1) : best;
      }
    }
    if (employer_terms) {
      for (EmployerIndex e = 0; e < n_; ++e) {
        int best = 1;
        if (applicant_of_[e] != -1) {
          const auto affiliates = market_.affiliates(e);
          const bool fixed = std::all_of(
              affiliates.begin(), affiliates.end(),
              [&](ApplicantIndex p) { return p < depth; });
          if (fixed) {
            EmployerTuple t{applicant_of_[e], {}};
            for (ApplicantIndex p : affiliates) t.placements.push_back(employer_of_[p]);
            best = market_.TupleRank(e, t);
          }
        }
        bound += top ? (best == 1) : best;
      }
    }
    return top ? -bound : bound;
  }

  const Market& market_;
  const ObjectiveKind objective_;
  const SolverConfig& config_;
  const int n_;
  std::vector<EmployerIndex> employer_of_;
  std::vector<ApplicantIndex> applicant_of_;
  std::optional<Matching> incumbent_;
  std::int64_t incumbent_cost_ = std::numeric_limits<std::int64_t>::max();
  std::vector<StabilityCut> cuts_;
  std::set<std::tuple<ApplicantIndex, EmployerIndex, std::vector<EmployerIndex>>>
      seen_;
  SolveStats stats_;
  bool aborted_ = false;
};

}  // namespace

SolveResult Solve(const Market& market, ObjectiveKind objective,
                  const SolverConfig& config) {
  if (config.node_budget == 0) {
    throw Error(ErrorKind::kInvalidConfig, "node_budget must be positive");
  }
  return BranchAndBound(market, objective, config).Run();
}

}  // namespace affmatch
