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

#include "affmatch/market.h"

#include <algorithm>
#include <limits>
#include <numeric>
#include <stdexcept>
#include <unordered_map>
#include <unordered_set>

#include "affmatch/errors.h"

namespace affmatch {

namespace {

std::string Pointer(std::string_view section, std::string_view key) {
  return "/" + std::string(section) + "/" + std::string(key);
}

std::string Pointer(std::string_view section, std::string_view key,
                    std::size_t index) {
  return Pointer(section, key) + "/" + std::to_string(index);
}

using LabelIndex = std::unordered_map<std::string, int>;

LabelIndex IndexRoster(const std::vector<std::string>& roster,
                       std::string_view section) {
  LabelIndex index;
  for (std::size_t i = 0; i < roster.size(); ++i) {
    if (!index.emplace(roster[i], static_cast<int>(i)).second) {
      throw Error(ErrorKind::kDuplicateLabel,
                  "label '" + roster[i] + "' appears more than once",
                  "/" + std::string(section) + "/" + std::to_string(i));
    }
  }
  return index;
}

int Resolve(const LabelIndex& index, const std::string& label,
            std::string_view what, const std::string& location) {
  auto it = index.find(label);
  if (it == index.end()) {
    throw Error(ErrorKind::kUnknownAgent,
                "unknown " + std::string(what) + " '" + label + "'", location);
  }
  return it->second;
}

std::string DescribeTuple(const RawMarket::LabelList& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += tuple[i];
  }
  return out + ")";
}

// Falling factorial x (x-1) ... (x-k+1); zero when k > x.
std::uint64_t Falling(int x, int k) {
  if (k < 0 || k > x) return 0;
  std::uint64_t p = 1;
  for (int i = 0; i < k; ++i) p *= static_cast<std::uint64_t>(x - i);
  return p;
}

std::uint64_t CheckedMul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw std::overflow_error("profile count exceeds 64 bits");
  }
  return a * b;
}

std::uint64_t CheckedFactorial(std::uint64_t k) {
  std::uint64_t f = 1;
  for (std::uint64_t i = 2; i <= k; ++i) f = CheckedMul(f, i);
  return f;
}

std::uint64_t CheckedPow(std::uint64_t base, int exp) {
  std::uint64_t p = 1;
  for (int i = 0; i < exp; ++i) p = CheckedMul(p, base);
  return p;
}

}  // namespace

bool IsValidTuple(EmployerIndex owner, std::span<const ApplicantIndex> affiliates,
                  const EmployerTuple& tuple) {
  if (tuple.placements.size() != affiliates.size()) return false;
  for (std::size_t k = 0; k < affiliates.size(); ++k) {
    const bool placed_home = tuple.placements[k] == owner;
    const bool hired = tuple.hire == affiliates[k];
    if (placed_home != hired) return false;
    for (std::size_t l = k + 1; l < affiliates.size(); ++l) {
      if (tuple.placements[k] == tuple.placements[l]) return false;
    }
  }
  return true;
}

std::vector<EmployerTuple> EnumerateValidTuples(
    int num_applicants, int num_employers, EmployerIndex owner,
    std::span<const ApplicantIndex> affiliates) {
  const std::size_t r = affiliates.size();
  std::vector<EmployerTuple> out;
  for (ApplicantIndex hire = 0; hire < num_applicants; ++hire) {
    // Depth-first over placements; each position is filled in roster order so
    // the output is lexicographic.
    EmployerTuple tuple{hire, std::vector<EmployerIndex>(r, 0)};
    std::vector<bool> used(num_employers, false);
    auto fill = [&](auto&& self, std::size_t k) -> void {
      if (k == r) {
        out.push_back(tuple);
        return;
      }
      const bool must_be_home = affiliates[k] == hire;
      for (EmployerIndex g = 0; g < num_employers; ++g) {
        if (used[g] || (g == owner) != must_be_home) continue;
        used[g] = true;
        tuple.placements[k] = g;
        self(self, k + 1);
        used[g] = false;
      }
    };
    fill(fill, 0);
  }
  return out;
}

std::optional<ApplicantIndex> Market::FindApplicant(
    std::string_view label) const {
  auto it = std::find(applicants_.begin(), applicants_.end(), label);
  if (it == applicants_.end()) return std::nullopt;
  return static_cast<ApplicantIndex>(it - applicants_.begin());
}

std::optional<EmployerIndex> Market::FindEmployer(
    std::string_view label) const {
  auto it = std::find(employers_.begin(), employers_.end(), label);
  if (it == employers_.end()) return std::nullopt;
  return static_cast<EmployerIndex>(it - employers_.begin());
}

int Market::TupleRank(EmployerIndex e, const EmployerTuple& tuple) const {
  const auto& ranks = tuple_ranks_[e];
  auto it = ranks.find(tuple);
  return it == ranks.end() ? 0 : it->second;
}

RawMarket Market::ToRaw() const {
  RawMarket raw;
  raw.applicants = applicants_;
  raw.employers = employers_;
  for (EmployerIndex e = 0; e < num_employers(); ++e) {
    RawMarket::LabelList affiliated;
    for (ApplicantIndex a : affiliates_[e]) affiliated.push_back(applicants_[a]);
    raw.affiliations.emplace_back(employers_[e], std::move(affiliated));
  }
  for (ApplicantIndex a = 0; a < num_applicants(); ++a) {
    RawMarket::LabelList order;
    for (EmployerIndex e : applicant_orders_[a]) order.push_back(employers_[e]);
    raw.applicant_prefs.emplace_back(applicants_[a], std::move(order));
  }
  for (EmployerIndex e = 0; e < num_employers(); ++e) {
    std::vector<RawMarket::LabelList> tuples;
    for (const EmployerTuple& t : profiles_[e]) {
      RawMarket::LabelList labels{applicants_[t.hire]};
      for (EmployerIndex g : t.placements) labels.push_back(employers_[g]);
      tuples.push_back(std::move(labels));
    }
    raw.employer_prefs.emplace_back(employers_[e], std::move(tuples));
  }
  return raw;
}

Market ValidateMarket(const RawMarket& raw) {
  const LabelIndex applicant_index = IndexRoster(raw.applicants, "applicants");
  const LabelIndex employer_index = IndexRoster(raw.employers, "employers");
  if (raw.applicants.size() != raw.employers.size()) {
    throw Error(ErrorKind::kSizeMismatch,
                std::to_string(raw.applicants.size()) + " applicants but " +
                    std::to_string(raw.employers.size()) +
                    " employers; markets must be square");
  }

  Market m;
  const int n = static_cast<int>(raw.applicants.size());
  m.applicants_ = raw.applicants;
  m.employers_ = raw.employers;
  m.affiliates_.assign(n, {});
  m.affiliation_of_.assign(n, std::nullopt);

  std::vector<bool> has_affiliation_entry(n, false);
  for (const auto& [employer, members] : raw.affiliations) {
    const std::string where = Pointer("affiliations", employer);
    const EmployerIndex e = Resolve(employer_index, employer, "employer", where);
    if (has_affiliation_entry[e]) {
      throw Error(ErrorKind::kDuplicateAffiliation,
                  "employer '" + employer + "' has two affiliation lists",
                  where);
    }
    has_affiliation_entry[e] = true;
    for (std::size_t k = 0; k < members.size(); ++k) {
      const std::string at = Pointer("affiliations", employer, k);
      const ApplicantIndex a =
          Resolve(applicant_index, members[k], "applicant", at);
      if (m.affiliation_of_[a].has_value()) {
        throw Error(ErrorKind::kDuplicateAffiliation,
                    "applicant '" + members[k] + "' is already affiliated with '" +
                        raw.employers[*m.affiliation_of_[a]] + "'",
                    at);
      }
      m.affiliation_of_[a] = e;
      m.affiliates_[e].push_back(a);
    }
  }

  m.applicant_orders_.assign(n, {});
  m.applicant_ranks_.assign(n, std::vector<int>(n, 0));
  std::vector<bool> has_order(n, false);
  for (const auto& [applicant, order] : raw.applicant_prefs) {
    const std::string where = Pointer("applicant_prefs", applicant);
    const ApplicantIndex a =
        Resolve(applicant_index, applicant, "applicant", where);
    if (has_order[a]) {
      throw Error(ErrorKind::kIncompleteApplicantOrder,
                  "applicant '" + applicant + "' has two preference lists",
                  where);
    }
    has_order[a] = true;
    if (order.size() != static_cast<std::size_t>(n)) {
      throw Error(ErrorKind::kIncompleteApplicantOrder,
                  "order of '" + applicant + "' lists " +
                      std::to_string(order.size()) + " employers, expected " +
                      std::to_string(n),
                  where);
    }
    for (std::size_t k = 0; k < order.size(); ++k) {
      const EmployerIndex e = Resolve(employer_index, order[k], "employer",
                                      Pointer("applicant_prefs", applicant, k));
      if (m.applicant_ranks_[a][e] != 0) {
        throw Error(ErrorKind::kIncompleteApplicantOrder,
                    "employer '" + order[k] + "' listed twice",
                    Pointer("applicant_prefs", applicant, k));
      }
      m.applicant_ranks_[a][e] = static_cast<int>(k) + 1;
      m.applicant_orders_[a].push_back(e);
    }
  }
  for (ApplicantIndex a = 0; a < n; ++a) {
    if (!has_order[a]) {
      throw Error(ErrorKind::kIncompleteApplicantOrder,
                  "applicant '" + raw.applicants[a] + "' has no preference list",
                  Pointer("applicant_prefs", raw.applicants[a]));
    }
  }

  m.profiles_.assign(n, {});
  m.tuple_ranks_.assign(n, {});
  m.best_rank_with_hire_.assign(n, std::vector<int>(n, 0));
  std::vector<bool> has_profile(n, false);
  for (const auto& [employer, tuples] : raw.employer_prefs) {
    const std::string where = Pointer("employer_prefs", employer);
    const EmployerIndex e = Resolve(employer_index, employer, "employer", where);
    if (has_profile[e]) {
      throw Error(ErrorKind::kIncompleteProfile,
                  "employer '" + employer + "' has two profiles", where);
    }
    has_profile[e] = true;
    const auto& affiliates = m.affiliates_[e];
    for (std::size_t k = 0; k < tuples.size(); ++k) {
      const std::string at = Pointer("employer_prefs", employer, k);
      const auto& labels = tuples[k];
      if (labels.size() != affiliates.size() + 1) {
        throw Error(ErrorKind::kInvalidTuple,
                    "tuple " + DescribeTuple(labels) + " of '" + employer +
                        "' must have " + std::to_string(affiliates.size() + 1) +
                        " entries",
                    at);
      }
      EmployerTuple t;
      t.hire = Resolve(applicant_index, labels[0], "applicant", at + "/0");
      for (std::size_t g = 1; g < labels.size(); ++g) {
        t.placements.push_back(Resolve(employer_index, labels[g], "employer",
                                       at + "/" + std::to_string(g)));
      }
      if (!IsValidTuple(e, affiliates, t)) {
        throw Error(ErrorKind::kInvalidTuple,
                    "tuple " + DescribeTuple(labels) + " is not admissible for '" +
                        employer + "'",
                    at);
      }
      const int rank = static_cast<int>(k) + 1;
      if (!m.tuple_ranks_[e].emplace(t, rank).second) {
        throw Error(ErrorKind::kIncompleteProfile,
                    "tuple " + DescribeTuple(labels) + " listed twice", at);
      }
      if (m.best_rank_with_hire_[e][t.hire] == 0) {
        m.best_rank_with_hire_[e][t.hire] = rank;
      }
      m.profiles_[e].push_back(std::move(t));
    }
    const std::uint64_t expected =
        CountValidTuples(n, n, static_cast<int>(affiliates.size()));
    if (m.profiles_[e].size() != expected) {
      throw Error(ErrorKind::kIncompleteProfile,
                  "profile of '" + employer + "' ranks " +
                      std::to_string(m.profiles_[e].size()) + " of " +
                      std::to_string(expected) + " valid tuples",
                  where);
    }
  }
  for (EmployerIndex e = 0; e < n; ++e) {
    if (!has_profile[e]) {
      throw Error(ErrorKind::kIncompleteProfile,
                  "employer '" + raw.employers[e] + "' has no profile",
                  Pointer("employer_prefs", raw.employers[e]));
    }
  }
  return m;
}

std::vector<EmployerTuple> ValidTuples(const Market& market, EmployerIndex e) {
  if (e < 0 || e >= market.num_employers()) {
    throw Error(ErrorKind::kUnknownAgent,
                "employer index " + std::to_string(e) + " out of range");
  }
  return EnumerateValidTuples(market.num_applicants(), market.num_employers(),
                              e, market.affiliates(e));
}

std::vector<EmployerTuple> ValidTuples(const Market& market,
                                       std::string_view employer_label) {
  auto e = market.FindEmployer(employer_label);
  if (!e) {
    throw Error(ErrorKind::kUnknownAgent,
                "unknown employer '" + std::string(employer_label) + "'");
  }
  return ValidTuples(market, *e);
}

std::uint64_t CountValidTuples(int n, int m, int r) {
  const auto non_affiliates = static_cast<std::uint64_t>(std::max(n - r, 0));
  return non_affiliates * Falling(m - 1, r) +
         static_cast<std::uint64_t>(r) * Falling(m - 1, r - 1);
}

bool IsConsistentWith(std::span<const EmployerTuple> profile,
                      std::span<const ApplicantIndex> base) {
  std::vector<int> position;
  for (std::size_t i = 0; i < base.size(); ++i) {
    const auto a = static_cast<std::size_t>(base[i]);
    if (a >= position.size()) position.resize(a + 1, -1);
    position[a] = static_cast<int>(i);
  }
  int previous = -1;
  for (const EmployerTuple& t : profile) {
    const auto a = static_cast<std::size_t>(t.hire);
    if (a >= position.size() || position[a] < 0) return false;
    if (position[a] < previous) return false;
    previous = position[a];
  }
  return true;
}

std::optional<std::vector<ApplicantIndex>> InferConsistency(
    std::span<const EmployerTuple> profile, int num_applicants) {
  std::vector<ApplicantIndex> order;
  std::vector<bool> seen(num_applicants, false);
  for (const EmployerTuple& t : profile) {
    if (!order.empty() && order.back() == t.hire) continue;
    if (seen[t.hire]) return std::nullopt;
    seen[t.hire] = true;
    order.push_back(t.hire);
  }
  for (ApplicantIndex a = 0; a < num_applicants; ++a) {
    if (!seen[a]) order.push_back(a);
  }
  return order;
}

std::uint64_t CountConsistentProfiles(int n, int m, int r) {
  const std::uint64_t non_affiliate_group = Falling(m - 1, r);
  const std::uint64_t affiliate_group = r > 0 ? Falling(m - 1, r - 1) : 0;
  return CheckedMul(CheckedPow(CheckedFactorial(non_affiliate_group),
                               std::max(n - r, 0)),
                    CheckedPow(CheckedFactorial(affiliate_group), r));
}

}  // namespace affmatch
