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

#include "cli.h"

#include <iostream>
#include <iterator>
#include <sstream>

#include "CLI11.hpp"
#include "affmatch/errors.h"
#include "affmatch/generator.h"
#include "affmatch/instance_io.h"
#include "affmatch/oracle.h"
#include "affmatch/report.h"
#include "affmatch/solver.h"

namespace affmatch::cli {

namespace {

struct Options {
  std::string input = "-";
  std::string format = "json";
  std::string notion = "greedy";
  std::string objective = "feasibility";
  std::string cuts = "nogood";
  std::uint64_t node_budget = SolverConfig{}.node_budget;
  bool timing = false;
  int threads = 1;
  std::uint64_t seed = 0;
  int n = 3;
  std::string strategy = "candidate_first";
  double lambda = 0.5;
  std::string affiliation = "bijection";
  double density = 0.5;
};

std::string ReadInput(const std::string& path, std::istream& in) {
  if (path == "-") {
    return std::string(std::istreambuf_iterator<char>(in), {});
  }
  return ReadFile(path);
}

void Emit(std::ostream& out, const std::string& json, const std::string& format) {
  out << (format == "text" ? RenderReportText(json) : json);
}

}  // namespace

int RunCli(const std::vector<std::string>& args, std::istream& in,
           std::ostream& out, std::ostream& err) {
  CLI::App app{"Model, analyze and clear affiliate matching markets", "affmatch"};
  app.require_subcommand(1);
  Options opt;

  auto add_input = [&](CLI::App* cmd) {
    cmd->add_option("instance", opt.input, "Instance file, or - for stdin");
  };
  auto add_format = [&](CLI::App* cmd) {
    cmd->add_option("--format", opt.format, "Report format")
        ->check(CLI::IsMember({"text", "json"}));
  };

  CLI::App* validate = app.add_subcommand("validate", "Check an instance file");
  add_input(validate);

  CLI::App* enumerate = app.add_subcommand("enumerate", "List all perfect matchings");
  add_input(enumerate);
  add_format(enumerate);

  CLI::App* stable = app.add_subcommand("stable", "Classify every matching");
  add_input(stable);
  add_format(stable);
  stable->add_option("--notion", opt.notion, "greedy or strict")
      ->check(CLI::IsMember({"greedy", "strict"}));
  stable->add_option("--threads", opt.threads, "Classification threads")
      ->check(CLI::PositiveNumber);

  CLI::App* solve = app.add_subcommand("solve", "Optimize over greedily stable matchings");
  add_input(solve);
  add_format(solve);
  solve->add_option("--objective", opt.objective, "Objective")
      ->check(CLI::IsMember({"feasibility", "min_applicant_rank_sum",
                             "min_employer_rank_sum", "max_top_choices",
                             "min_egalitarian_sum"}));
  solve->add_option("--cuts", opt.cuts, "nogood or nogood+conditional")
      ->check(CLI::IsMember({"nogood", "nogood+conditional"}));
  solve->add_option("--node-budget", opt.node_budget, "Search node limit")
      ->check(CLI::PositiveNumber);
  solve->add_flag("--timing", opt.timing, "Include wall time in the report");

  CLI::App* reduce = app.add_subcommand("reduce", "Deferred acceptance on a consistent market");
  add_input(reduce);
  add_format(reduce);

  CLI::App* generate = app.add_subcommand("generate", "Emit a seeded random instance");
  generate->add_option("--seed", opt.seed, "64-bit seed");
  generate->add_option("--n", opt.n, "Market size")->check(CLI::PositiveNumber);
  generate->add_option("--strategy", opt.strategy, "Employer profile strategy")
      ->check(CLI::IsMember({"candidate_first", "affiliate_first", "weighted",
                             "uniform_random"}));
  generate->add_option("--lambda", opt.lambda, "Weight for --strategy weighted")
      ->check(CLI::Range(0.0, 1.0));
  generate->add_option("--affiliation", opt.affiliation, "Affiliation pattern")
      ->check(CLI::IsMember({"bijection", "random_partial"}));
  generate->add_option("--density", opt.density, "Affiliation density for random_partial")
      ->check(CLI::Range(0.0, 1.0));

  CLI::App* report = app.add_subcommand("report", "Render a JSON report as text");
  add_input(report);

  std::vector<std::string> argv_storage{"affmatch"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<const char*> argv;
  for (const auto& a : argv_storage) argv.push_back(a.c_str());
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << "\n" << app.help();
    return kExitUsage;
  }

  const OracleLimits limits = OracleLimits::FromEnvironment();
  try {
    if (*generate) {
      GeneratorSpec spec;
      spec.seed = opt.seed;
      spec.n = opt.n;
      spec.strategy = ParseStrategyKind(opt.strategy);
      spec.lambda = opt.lambda;
      spec.affiliation = ParseAffiliationPattern(opt.affiliation);
      spec.density = opt.density;
      if (spec.n > limits.max_n) {
        err << "warning: n = " << spec.n << " exceeds the oracle bound of "
            << limits.max_n << "\n";
      }
      out << SerializeInstance({GenerateMarket(spec), spec});
      return kExitOk;
    }
    if (*report) {
      out << RenderReportText(ReadInput(opt.input, in));
      return kExitOk;
    }

    const InstanceDocument doc = ParseInstance(ReadInput(opt.input, in));
    const Market& market = doc.market;

    if (*validate) {
      out << "valid: " << market.size() << " applicants, " << market.size()
          << " employers\n";
      return kExitOk;
    }
    if (*enumerate) {
      Emit(out, EnumerationReport(market, EnumerateMatchings(market.size(), limits)),
           opt.format);
      return kExitOk;
    }
    if (*stable) {
      OracleOptions options{limits, opt.threads};
      const StableSetReport result = StableSet(market, ParseNotion(opt.notion), options);
      Emit(out, StableSetReportJson(market, result), opt.format);
      return result.core_empty ? kExitEmptyCore : kExitOk;
    }
    if (*solve) {
      SolverConfig config;
      config.node_budget = opt.node_budget;
      config.cuts = ParseCutStrategy(opt.cuts);
      const ObjectiveKind objective = ParseObjective(opt.objective);
      const SolveResult result = Solve(market, objective, config);
      Emit(out, SolveReportJson(market, objective, config, result, opt.timing),
           opt.format);
      switch (result.status) {
        case SolveStatus::kStable: return kExitOk;
        case SolveStatus::kEmptyCore: return kExitEmptyCore;
        case SolveStatus::kBoundExceeded: return kExitBoundExceeded;
        case SolveStatus::kInfeasible: return kExitInfeasible;
      }
    }
    if (*reduce) {
      Emit(out, ReductionReportJson(market, DeferredAcceptance(market)), opt.format);
      return kExitOk;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitUsage;
}

}  // namespace affmatch::cli
