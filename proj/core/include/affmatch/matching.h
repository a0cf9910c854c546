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

#ifndef AFFMATCH_MATCHING_H_
#define AFFMATCH_MATCHING_H_

#include <compare>
#include <cstdint>
#include <span>
#include <vector>

#include "affmatch/market.h"

namespace affmatch {

// A perfect matching between applicants and employers, stored as the
// employer index of every applicant plus the inverse.
class Matching {
 public:
  Matching() = default;
  // Throws std::invalid_argument unless `employer_of` is a permutation of
  // 0..n-1.
  explicit Matching(std::vector<EmployerIndex> employer_of);

  static Matching Identity(int n);

  int size() const { return static_cast<int>(employer_of_.size()); }
  EmployerIndex employer_of(ApplicantIndex a) const { return employer_of_[a]; }
  ApplicantIndex applicant_of(EmployerIndex e) const { return applicant_of_[e]; }
  std::span<const EmployerIndex> assignment() const { return employer_of_; }

  // Lexicographic on the applicant -> employer array; this is the canonical
  // permutation order used everywhere matchings are listed.
  friend std::strong_ordering operator<=>(const Matching& lhs,
                                          const Matching& rhs) {
    return lhs.employer_of_ <=> rhs.employer_of_;
  }
  friend bool operator==(const Matching& lhs, const Matching& rhs) {
    return lhs.employer_of_ == rhs.employer_of_;
  }

 private:
  std::vector<EmployerIndex> employer_of_;
  std::vector<ApplicantIndex> applicant_of_;
};

// n!, or throws std::overflow_error past 20!.
std::uint64_t Factorial(int n);

// Position of `matching` in the canonical (lexicographic) order of all n!
// matchings, starting at 0.
std::uint64_t CanonicalIndex(const Matching& matching);
// Inverse of CanonicalIndex. Throws std::out_of_range if index >= n!.
Matching MatchingAt(int n, std::uint64_t index);

// Completes a partial assignment (-1 = unassigned) by giving each unassigned
// applicant, in roster order, the lowest-indexed free employer. Throws
// std::invalid_argument if the partial assignment reuses an employer.
Matching CompleteGreedily(std::span<const EmployerIndex> partial);

}  // namespace affmatch

#endif  // AFFMATCH_MATCHING_H_
