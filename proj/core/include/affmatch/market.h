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

// Market data model for affiliate matching: two equally sized rosters of
// applicants and employers, where each employer may have an ordered list of
// affiliated applicants and ranks tuples (hire, placement of affiliate 1, ...,
// placement of affiliate r) instead of bare applicants.

#ifndef AFFMATCH_MARKET_H_
#define AFFMATCH_MARKET_H_

#include <compare>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace affmatch {

// Agents are addressed by their position in the roster.
using ApplicantIndex = int;
using EmployerIndex = int;

// One entry of an employer's profile: hire `hire` and place the k-th affiliate
// at employer `placements[k]`. Ordered by hire, then placements
// lexicographically, which is the canonical tuple order.
struct EmployerTuple {
  ApplicantIndex hire = 0;
  std::vector<EmployerIndex> placements;

  friend auto operator<=>(const EmployerTuple&, const EmployerTuple&) = default;
  friend bool operator==(const EmployerTuple&, const EmployerTuple&) = default;
};

// Label-based, unvalidated market exactly as written in an instance document.
// Map-like members keep document order; ValidateMarket resolves them.
struct RawMarket {
  using LabelList = std::vector<std::string>;

  LabelList applicants;
  LabelList employers;
  std::vector<std::pair<std::string, LabelList>> affiliations;
  std::vector<std::pair<std::string, LabelList>> applicant_prefs;
  std::vector<std::pair<std::string, std::vector<LabelList>>> employer_prefs;

  friend bool operator==(const RawMarket&, const RawMarket&) = default;
};

// True iff `tuple` is admissible for `owner` with the given affiliates:
// placements has one entry per affiliate, entries are pairwise distinct, and
// placements[k] == owner exactly when the hire is affiliate k.
bool IsValidTuple(EmployerIndex owner, std::span<const ApplicantIndex> affiliates,
                  const EmployerTuple& tuple);

// Every valid tuple for `owner`, in canonical order.
std::vector<EmployerTuple> EnumerateValidTuples(
    int num_applicants, int num_employers, EmployerIndex owner,
    std::span<const ApplicantIndex> affiliates);

// A validated square market. Immutable once built; all accessors are const
// and the object may be shared freely across threads.
class Market {
 public:
  int size() const { return static_cast<int>(applicants_.size()); }
  int num_applicants() const { return static_cast<int>(applicants_.size()); }
  int num_employers() const { return static_cast<int>(employers_.size()); }

  const std::vector<std::string>& applicants() const { return applicants_; }
  const std::vector<std::string>& employers() const { return employers_; }
  const std::string& applicant_label(ApplicantIndex a) const {
    return applicants_[a];
  }
  const std::string& employer_label(EmployerIndex e) const {
    return employers_[e];
  }

  std::optional<ApplicantIndex> FindApplicant(std::string_view label) const;
  std::optional<EmployerIndex> FindEmployer(std::string_view label) const;

  // Ordered affiliates R_e of employer e.
  std::span<const ApplicantIndex> affiliates(EmployerIndex e) const {
    return affiliates_[e];
  }
  std::optional<EmployerIndex> affiliated_employer(ApplicantIndex a) const {
    return affiliation_of_[a];
  }

  // Best-first employer order of applicant a.
  std::span<const EmployerIndex> applicant_order(ApplicantIndex a) const {
    return applicant_orders_[a];
  }
  // 1 = most preferred.
  int applicant_rank(ApplicantIndex a, EmployerIndex e) const {
    return applicant_ranks_[a][e];
  }
  bool ApplicantPrefers(ApplicantIndex a, EmployerIndex better,
                        EmployerIndex worse) const {
    return applicant_rank(a, better) < applicant_rank(a, worse);
  }

  // Best-first tuple order of employer e.
  std::span<const EmployerTuple> profile(EmployerIndex e) const {
    return profiles_[e];
  }
  // 1 = most preferred; 0 if the tuple is not in the profile (i.e. invalid).
  int TupleRank(EmployerIndex e, const EmployerTuple& tuple) const;
  // Rank of the best tuple of e whose hire is a.
  int BestRankWithHire(EmployerIndex e, ApplicantIndex a) const {
    return best_rank_with_hire_[e][a];
  }

  RawMarket ToRaw() const;

  friend bool operator==(const Market& lhs, const Market& rhs) {
    return lhs.applicants_ == rhs.applicants_ &&
           lhs.employers_ == rhs.employers_ &&
           lhs.affiliates_ == rhs.affiliates_ &&
           lhs.applicant_orders_ == rhs.applicant_orders_ &&
           lhs.profiles_ == rhs.profiles_;
  }

 private:
  friend Market ValidateMarket(const RawMarket& raw);

  std::vector<std::string> applicants_;
  std::vector<std::string> employers_;
  std::vector<std::vector<ApplicantIndex>> affiliates_;
  std::vector<std::optional<EmployerIndex>> affiliation_of_;
  std::vector<std::vector<EmployerIndex>> applicant_orders_;
  std::vector<std::vector<int>> applicant_ranks_;
  std::vector<std::vector<EmployerTuple>> profiles_;
  std::vector<std::map<EmployerTuple, int>> tuple_ranks_;
  std::vector<std::vector<int>> best_rank_with_hire_;
};

// Resolves labels and enforces every market invariant. Throws affmatch::Error
// with kind SizeMismatch, DuplicateLabel, DuplicateAffiliation, InvalidTuple,
// IncompleteProfile, IncompleteApplicantOrder or UnknownAgent; the error
// location is a JSON pointer into the instance document.
Market ValidateMarket(const RawMarket& raw);

// Valid tuples of employer e in canonical order. Throws UnknownAgent.
std::vector<EmployerTuple> ValidTuples(const Market& market, EmployerIndex e);
std::vector<EmployerTuple> ValidTuples(const Market& market,
                                       std::string_view employer_label);

// Number of valid tuples for an employer with r affiliates in a market with
// n applicants and m employers: (n-r)*P(m-1, r) + r*P(m-1, r-1), where P is
// the falling factorial.
std::uint64_t CountValidTuples(int n, int m, int r);

// True iff the hires, read best-first, never move backwards in `base`
// (a best-first order over all applicants).
bool IsConsistentWith(std::span<const EmployerTuple> profile,
                      std::span<const ApplicantIndex> base);

// The base order witnessing consistency: hires in order of first appearance,
// followed by applicants that never appear as a hire in roster order.
// Empty optional if the hires are not grouped.
std::optional<std::vector<ApplicantIndex>> InferConsistency(
    std::span<const EmployerTuple> profile, int num_applicants);

// Number of profiles consistent with one fixed base order: the product of
// (group size)! over the hire groups of the tuple universe. Throws
// std::overflow_error if the count does not fit in 64 bits.
std::uint64_t CountConsistentProfiles(int n, int m, int r);

}  // namespace affmatch

#endif  // AFFMATCH_MARKET_H_
