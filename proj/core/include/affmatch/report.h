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

// Machine-readable reports (JSON) and their text rendering. The text form is
// rendered from the JSON document alone, so it never carries a fact the JSON
// lacks. Matchings are identified by canonical index and by a "mu<k>" label
// with k = index + 1.

#ifndef AFFMATCH_REPORT_H_
#define AFFMATCH_REPORT_H_

#include <string>
#include <string_view>
#include <vector>

#include "affmatch/market.h"
#include "affmatch/matching.h"
#include "affmatch/oracle.h"
#include "affmatch/solver.h"

namespace affmatch {

std::string MatchingLabel(const Matching& matching);

std::string EnumerationReport(const Market& market,
                              const std::vector<Matching>& matchings);
std::string StableSetReportJson(const Market& market,
                                const StableSetReport& report);
// Wall time is only included when `include_timing` is set, which keeps the
// default report byte-for-byte reproducible.
std::string SolveReportJson(const Market& market, ObjectiveKind objective,
                            const SolverConfig& config,
                            const SolveResult& result, bool include_timing);
std::string ReductionReportJson(const Market& market, const Matching& matching);

// Renders any of the reports above. Throws SyntaxError for documents that
// are not reports.
std::string RenderReportText(std::string_view report_json);

}  // namespace affmatch

#endif  // AFFMATCH_REPORT_H_
