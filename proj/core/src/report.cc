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

#include "affmatch/report.h"

#include <sstream>

#include "affmatch/errors.h"
#include "affmatch/stability.h"
#include "json.hpp"

namespace affmatch {

namespace {

using Json = nlohmann::ordered_json;

Json MatchingJson(const Market& market, const Matching& matching) {
  Json pairs = Json::array();
  for (ApplicantIndex a = 0; a < matching.size(); ++a) {
    pairs.push_back(Json::array({market.applicant_label(a),
                                 market.employer_label(matching.employer_of(a))}));
  }
  Json out;
  out["index"] = CanonicalIndex(matching);
  out["label"] = MatchingLabel(matching);
  out["pairs"] = std::move(pairs);
  return out;
}

Json TupleJson(const Market& market, const EmployerTuple& tuple) {
  Json out = Json::array({market.applicant_label(tuple.hire)});
  for (EmployerIndex g : tuple.placements) out.push_back(market.employer_label(g));
  return out;
}

Json PairJson(const Market& market, const GreedyBlockingPair& pair) {
  Json out;
  out["applicant"] = market.applicant_label(pair.applicant);
  out["employer"] = market.employer_label(pair.employer);
  out["witness_tuple"] = TupleJson(market, pair.witness_tuple);
  out["witness_rank"] = pair.witness_rank;
  out["current_rank"] = pair.current_rank;
  out["witness"] = MatchingJson(market, pair.witness);
  return out;
}

Json CoalitionJson(const Market& market, const StrictBlockingCoalition& c) {
  Json applicants = Json::array(), employers = Json::array();
  for (ApplicantIndex a : c.applicants) applicants.push_back(market.applicant_label(a));
  for (EmployerIndex e : c.employers) employers.push_back(market.employer_label(e));
  Json out;
  out["applicants"] = std::move(applicants);
  out["employers"] = std::move(employers);
  out["witness"] = MatchingJson(market, c.witness);
  return out;
}

std::string Dump(const Json& j) { return j.dump(2) + "\n"; }

std::string PairsText(const Json& matching) {
  std::string out;
  for (const Json& p : matching.at("pairs")) {
    if (!out.empty()) out += " ";
    out += p.at(0).get<std::string>() + "-" + p.at(1).get<std::string>();
  }
  return out;
}

std::string MatchingText(const Json& matching) {
  return matching.at("label").get<std::string>() + "  " + PairsText(matching);
}

std::string TupleText(const Json& tuple) {
  std::string out = "(";
  for (std::size_t i = 0; i < tuple.size(); ++i) {
    if (i > 0) out += ", ";
    out += tuple[i].get<std::string>();
  }
  return out + ")";
}

std::string SetText(const Json& labels) {
  std::string out = "{";
  for (std::size_t i = 0; i < labels.size(); ++i) {
    if (i > 0) out += ", ";
    out += labels[i].get<std::string>();
  }
  return out + "}";
}

void RenderEnumeration(const Json& r, std::ostringstream& out) {
  out << r.at("matching_count").get<std::uint64_t>() << " matchings (n = "
      << r.at("n").get<int>() << ")\n";
  for (const Json& m : r.at("matchings")) out << MatchingText(m) << "\n";
}

void RenderStableSet(const Json& r, std::ostringstream& out) {
  out << "notion: " << r.at("notion").get<std::string>() << "\n";
  out << "matchings: " << r.at("matching_count").get<std::uint64_t>() << "\n";
  for (const Json& c : r.at("classifications")) {
    out << MatchingText(c.at("matching")) << "  "
        << (c.at("stable").get<bool>() ? "stable" : "unstable") << "\n";
    if (auto it = c.find("blocking_pairs"); it != c.end()) {
      for (const Json& p : *it) {
        out << "  blocking pair (" << p.at("applicant").get<std::string>() << ", "
            << p.at("employer").get<std::string>() << "): tuple "
            << TupleText(p.at("witness_tuple")) << " rank "
            << p.at("witness_rank").get<int>() << " beats rank "
            << p.at("current_rank").get<int>() << ", witness "
            << p.at("witness").at("label").get<std::string>() << "\n";
      }
    }
    if (auto it = c.find("coalition"); it != c.end() && !it->is_null()) {
      out << "  blocking coalition A=" << SetText(it->at("applicants"))
          << " E=" << SetText(it->at("employers")) << ", witness "
          << it->at("witness").at("label").get<std::string>() << "\n";
    }
  }
  out << "stable:";
  if (r.at("stable").empty()) out << " (none)";
  for (const Json& m : r.at("stable")) out << " " << m.at("label").get<std::string>();
  out << "\ncore_empty: " << (r.at("core_empty").get<bool>() ? "true" : "false")
      << "\n";
}

void RenderSolve(const Json& r, std::ostringstream& out) {
  out << "objective: " << r.at("objective").get<std::string>() << "\n";
  out << "cuts: " << r.at("cuts").get<std::string>() << "\n";
  out << "node_budget: " << r.at("node_budget").get<std::uint64_t>() << "\n";
  out << "status: " << r.at("status").get<std::string>() << "\n";
  if (auto it = r.find("matching"); it != r.end()) {
    out << "matching: " << MatchingText(*it) << "\n";
    out << "score: " << r.at("score").get<std::int64_t>() << "\n";
  }
  for (const auto& [key, value] : r.at("statistics").items()) {
    out << key << ": " << value.dump() << "\n";
  }
}

void RenderReduction(const Json& r, std::ostringstream& out) {
  out << "deferred acceptance: " << MatchingText(r.at("matching")) << "\n";
  out << "greedily_stable: "
      << (r.at("greedily_stable").get<bool>() ? "true" : "false") << "\n";
}

}  // namespace

std::string MatchingLabel(const Matching& matching) {
  return "mu" + std::to_string(CanonicalIndex(matching) + 1);
}

std::string EnumerationReport(const Market& market,
                              const std::vector<Matching>& matchings) {
  Json r;
  r["report"] = "enumerate";
  r["n"] = market.size();
  r["matching_count"] = matchings.size();
  Json list = Json::array();
  for (const Matching& m : matchings) list.push_back(MatchingJson(market, m));
  r["matchings"] = std::move(list);
  return Dump(r);
}

std::string StableSetReportJson(const Market& market,
                                const StableSetReport& report) {
  Json r;
  r["report"] = "stable_set";
  r["notion"] = std::string(NotionName(report.notion));
  r["n"] = market.size();
  r["matching_count"] = report.matchings.size();
  Json stable = Json::array();
  for (const Matching& m : report.stable) stable.push_back(MatchingJson(market, m));
  r["stable"] = std::move(stable);
  r["core_empty"] = report.core_empty;
  Json classifications = Json::array();
  for (const MatchingClassification& c : report.matchings) {
    Json entry;
    entry["matching"] = MatchingJson(market, c.matching);
    entry["stable"] = c.stable;
    if (report.notion == StabilityNotion::kGreedy) {
      Json pairs = Json::array();
      for (const auto& p : c.blocking_pairs) pairs.push_back(PairJson(market, p));
      entry["primary_certificate"] =
          pairs.empty() ? Json(nullptr) : Json(pairs.front());
      entry["blocking_pairs"] = std::move(pairs);
    } else {
      entry["coalition"] = c.coalition ? CoalitionJson(market, *c.coalition)
                                       : Json(nullptr);
    }
    classifications.push_back(std::move(entry));
  }
  r["classifications"] = std::move(classifications);
  return Dump(r);
}

std::string SolveReportJson(const Market& market, ObjectiveKind objective,
                            const SolverConfig& config,
                            const SolveResult& result, bool include_timing) {
  Json r;
  r["report"] = "solve";
  r["objective"] = std::string(ObjectiveName(objective));
  r["cuts"] = std::string(CutStrategyName(config.cuts));
  r["node_budget"] = config.node_budget;
  r["status"] = std::string(SolveStatusName(result.status));
  if (result.matching) {
    r["matching"] = MatchingJson(market, *result.matching);
    r["score"] = result.score;
  }
  Json stats;
  stats["nodes"] = result.stats.nodes;
  stats["leaves"] = result.stats.leaves;
  stats["no_good_cuts"] = result.stats.no_good_cuts;
  stats["conditional_cuts"] = result.stats.conditional_cuts;
  stats["cut_prunes"] = result.stats.cut_prunes;
  stats["bound_prunes"] = result.stats.bound_prunes;
  if (include_timing) stats["wall_seconds"] = result.stats.wall_seconds;
  r["statistics"] = std::move(stats);
  return Dump(r);
}

std::string ReductionReportJson(const Market& market, const Matching& matching) {
  Json r;
  r["report"] = "reduce";
  r["matching"] = MatchingJson(market, matching);
  r["greedily_stable"] = IsGreedilyStable(market, matching);
  return Dump(r);
}

std::string RenderReportText(std::string_view report_json) {
  Json r;
  try {
    r = Json::parse(report_json.begin(), report_json.end());
    std::ostringstream out;
    const std::string kind = r.at("report").get<std::string>();
    if (kind == "enumerate") {
      RenderEnumeration(r, out);
    } else if (kind == "stable_set") {
      RenderStableSet(r, out);
    } else if (kind == "solve") {
      RenderSolve(r, out);
    } else if (kind == "reduce") {
      RenderReduction(r, out);
    } else {
      throw Error(ErrorKind::kSyntaxError, "unknown report kind '" + kind + "'",
                  "/report");
    }
    return out.str();
  } catch (const Json::exception& e) {
    throw Error(ErrorKind::kSyntaxError,
                std::string("not a report document: ") + e.what());
  }
}

}  // namespace affmatch
