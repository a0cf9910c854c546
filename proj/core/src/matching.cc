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

#include "affmatch/matching.h"

#include <numeric>
#include <stdexcept>
#include <string>
#include <utility>

namespace affmatch {

Matching::Matching(std::vector<EmployerIndex> employer_of)
    : employer_of_(std::move(employer_of)),
      applicant_of_(employer_of_.size(), -1) {
  const int n = size();
  for (ApplicantIndex a = 0; a < n; ++a) {
    const EmployerIndex e = employer_of_[a];
    if (e < 0 || e >= n || applicant_of_[e] != -1) {
      throw std::invalid_argument("not a perfect matching: applicant " +
                                  std::to_string(a) + " -> " +
                                  std::to_string(e));
    }
    applicant_of_[e] = a;
  }
}

Matching Matching::Identity(int n) {
  std::vector<EmployerIndex> ids(n);
  std::iota(ids.begin(), ids.end(), 0);
  return Matching(std::move(ids));
}

std::uint64_t Factorial(int n) {
  if (n < 0 || n > 20) throw std::overflow_error("factorial out of range");
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t CanonicalIndex(const Matching& matching) {
  // Lehmer code.
  const int n = matching.size();
  std::uint64_t index = 0;
  for (int i = 0; i < n; ++i) {
    int smaller_later = 0;
    for (int j = i + 1; j < n; ++j) {
      if (matching.employer_of(j) < matching.employer_of(i)) ++smaller_later;
    }
    index += static_cast<std::uint64_t>(smaller_later) * Factorial(n - 1 - i);
  }
  return index;
}

Matching MatchingAt(int n, std::uint64_t index) {
  if (index >= Factorial(n)) throw std::out_of_range("matching index");
  std::vector<EmployerIndex> pool(n);
  std::iota(pool.begin(), pool.end(), 0);
  std::vector<EmployerIndex> out;
  out.reserve(n);
  for (int i = 0; i < n; ++i) {
    const std::uint64_t block = Factorial(n - 1 - i);
    const auto pick = static_cast<std::size_t>(index / block);
    index %= block;
    out.push_back(pool[pick]);
    pool.erase(pool.begin() + static_cast<std::ptrdiff_t>(pick));
  }
  return Matching(std::move(out));
}

Matching CompleteGreedily(std::span<const EmployerIndex> partial) {
  const int n = static_cast<int>(partial.size());
  std::vector<bool> taken(n, false);
  for (EmployerIndex e : partial) {
    if (e < 0) continue;
    if (e >= n || taken[e]) {
      throw std::invalid_argument("partial assignment reuses an employer");
    }
    taken[e] = true;
  }
  std::vector<EmployerIndex> full(partial.begin(), partial.end());
  EmployerIndex next_free = 0;
  for (ApplicantIndex a = 0; a < n; ++a) {
    if (full[a] >= 0) continue;
    while (taken[next_free]) ++next_free;
    full[a] = next_free;
    taken[next_free] = true;
  }
  return Matching(std::move(full));
}

}  // namespace affmatch
