// Copyright 2026 The secalloc Authors
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

#include "secalloc/experiment.h"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>

#include "secalloc/errors.h"
#include "secalloc/oracle.h"
#include "secalloc/random.h"

namespace secalloc {

uint64_t StreamSeed(uint64_t master_seed, SolverTag solver, int period) {
  const uint64_t label = static_cast<uint64_t>(solver) << 32 |
                         static_cast<uint32_t>(period);
  return SplitMix64(master_seed ^ SplitMix64(label));
}

namespace {

bool RunsHs(SolverChoice choice) { return choice != SolverChoice::kGa; }
bool RunsGa(SolverChoice choice) { return choice != SolverChoice::kHs; }

std::string SizeLabel(int n_v, int n_s) {
  return "(" + std::to_string(n_v) + ", " + std::to_string(n_s) + ")";
}

}  // namespace

RunResult RunExperiment(const Scenario& scenario, const RunOptions& options) {
  RunResult result;
  Instance instance = scenario.initial;
  for (int t = 0; t <= scenario.periods(); ++t) {
    if (t > 0) instance = ApplyDelta(instance, scenario.deltas[t - 1]);
    PeriodResult period;
    period.period = t;
    period.num_vulnerabilities = instance.num_vulnerabilities();
    period.num_technologies = instance.num_technologies();
    const PeriodResult* previous =
        result.periods.empty() ? nullptr : &result.periods.back();

    if (RunsHs(options.solver)) {
      Random rng(StreamSeed(options.master_seed, SolverTag::kHs, t));
      period.hs = previous == nullptr
                      ? HsStatic(instance, options.hs, rng)
                      : HsDynamic(*previous->hs, instance, options.hs, rng);
    }
    if (RunsGa(options.solver)) {
      Random rng(StreamSeed(options.master_seed, SolverTag::kGa, t));
      period.ga = previous == nullptr
                      ? GaStatic(instance, options.ga, rng)
                      : GaDynamic(*previous->ga, instance, options.ga, rng);
    }
    if (period.hs && period.ga) {
      result.rows.push_back(Compare(t, instance, *period.hs, *period.ga));
    }
    result.periods.push_back(std::move(period));
  }
  return result;
}

void WriteArchive(const ParetoArchive& archive, std::ostream& out) {
  std::vector<std::pair<Objective, std::vector<TechIndex>>> lines;
  for (const Plan& plan : archive.members()) {
    lines.emplace_back(plan.objective(), plan.SortedSelection());
  }
  std::sort(lines.begin(), lines.end());
  for (const auto& [objective, selection] : lines) {
    out << objective.residual_count << ' ' << objective.total_cost;
    for (const TechIndex j : selection) out << ' ' << j;
    out << '\n';
  }
}

ParetoArchive ReadArchive(std::istream& in, const Instance& instance) {
  ParetoArchive archive;
  std::string line;
  int line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    std::istringstream fields(line);
    Objective stored;
    if (!(fields >> stored.residual_count >> stored.total_cost)) {
      throw ParseError("archive line " + std::to_string(line_number) +
                       ": expected residual count and total cost");
    }
    std::vector<TechIndex> selection;
    TechIndex j;
    while (fields >> j) selection.push_back(j);
    if (!fields.eof()) {
      throw ParseError("archive line " + std::to_string(line_number) +
                       ": malformed technology index");
    }
    Plan plan;
    try {
      plan = Plan(instance, std::move(selection));
    } catch (const InvalidSelectionError& e) {
      throw ParseError("archive line " + std::to_string(line_number) + ": " +
                       e.what());
    }
    if (plan.objective() != stored) {
      throw ParseError("archive line " + std::to_string(line_number) +
                       ": stored objective does not match the selection");
    }
    archive.Insert(std::move(plan));
  }
  return archive;
}

void WriteComparisonTable(const std::vector<ComparisonRow>& rows,
                          std::ostream& out) {
  out << std::left << std::setw(8) << "period" << std::setw(12) << "size"
      << std::setw(10) << "C(HS,GA)" << std::setw(10) << "C(GA,HS)"
      << "common_solutions" << '\n';
  for (const ComparisonRow& row : rows) {
    out << std::left << std::setw(8) << row.period << std::setw(12)
        << SizeLabel(row.num_vulnerabilities, row.num_technologies)
        << std::setw(10) << FormatPercent(row.c_hs_ga) << std::setw(10)
        << FormatPercent(row.c_ga_hs) << row.common << '\n';
  }
}

void WriteComparisonCsv(const std::vector<ComparisonRow>& rows,
                        std::ostream& out) {
  out << "period,size,C(HS,GA),C(GA,HS),common_solutions\n";
  for (const ComparisonRow& row : rows) {
    out << row.period << ",\""
        << SizeLabel(row.num_vulnerabilities, row.num_technologies) << "\","
        << FormatPercent(row.c_hs_ga) << ',' << FormatPercent(row.c_ga_hs)
        << ',' << row.common << '\n';
  }
}

std::string ArchiveFileName(SolverTag solver, int period) {
  char name[32];
  std::snprintf(name, sizeof(name), "%s_period_%02d.txt",
                solver == SolverTag::kHs ? "hs" : "ga", period);
  return name;
}

namespace {

void WriteFile(const std::filesystem::path& path,
               const std::string& contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write " + path.string());
  out << contents;
  if (!out) throw Error("failed writing " + path.string());
}

}  // namespace

void WriteRunOutputs(const RunResult& result,
                     const std::filesystem::path& directory) {
  std::filesystem::create_directories(directory);
  for (const PeriodResult& period : result.periods) {
    for (const auto& [tag, archive] :
         {std::pair{SolverTag::kHs, &period.hs},
          std::pair{SolverTag::kGa, &period.ga}}) {
      if (!archive->has_value()) continue;
      std::ostringstream text;
      WriteArchive(**archive, text);
      WriteFile(directory / ArchiveFileName(tag, period.period), text.str());
    }
  }
  if (!result.rows.empty()) {
    std::ostringstream csv;
    WriteComparisonCsv(result.rows, csv);
    WriteFile(directory / kComparisonCsvName, csv.str());
  }
}

namespace {

ValidationRow CheckAgainstOracle(int repeat, int period, SolverTag solver,
                                 const Instance& instance,
                                 const ParetoArchive& front,
                                 const ParetoArchive& archive) {
  ValidationRow row;
  row.repeat = repeat;
  row.period = period;
  row.solver = solver;
  row.c_oracle_solver = CMetric(front, archive);
  row.c_solver_oracle = CMetric(archive, front);
  row.non_dominated = archive.CheckInvariants();
  for (const Plan& plan : archive.members()) {
    if (plan.total_cost() > instance.cmax()) row.feasible = false;
  }
  return row;
}

bool AgreesWithOracle(const ValidationRow& row) {
  return row.c_oracle_solver.has_value() && *row.c_oracle_solver == 0.0;
}

}  // namespace

ValidationSummary ValidateScenario(const Scenario& scenario,
                                   const RunOptions& options, int repeats,
                                   int max_ns) {
  std::vector<ParetoArchive> fronts;
  std::vector<Instance> instances;
  Instance instance = scenario.initial;
  for (int t = 0; t <= scenario.periods(); ++t) {
    if (t > 0) instance = ApplyDelta(instance, scenario.deltas[t - 1]);
    if (instance.num_technologies() > max_ns) {
      throw OracleLimitError("period " + std::to_string(t) + " has " +
                             std::to_string(instance.num_technologies()) +
                             " technologies; the oracle bound is " +
                             std::to_string(max_ns));
    }
    instances.push_back(instance);
  }
  for (const Instance& each : instances) {
    fronts.push_back(ExactFront(each, max_ns));
  }

  ValidationSummary summary;
  int hs_runs = 0, hs_agree = 0, ga_runs = 0, ga_agree = 0;
  for (int r = 0; r < repeats; ++r) {
    RunOptions run_options = options;
    run_options.solver = SolverChoice::kBoth;
    run_options.master_seed = options.master_seed + static_cast<uint64_t>(r);
    const RunResult result = RunExperiment(scenario, run_options);
    for (const PeriodResult& period : result.periods) {
      const int t = period.period;
      for (const auto& [tag, archive] :
           {std::pair{SolverTag::kHs, &*period.hs},
            std::pair{SolverTag::kGa, &*period.ga}}) {
        ValidationRow row = CheckAgainstOracle(r, t, tag, instances[t],
                                               fronts[t], *archive);
        summary.all_feasible &= row.feasible;
        summary.all_non_dominated &= row.non_dominated;
        if (tag == SolverTag::kHs) {
          ++hs_runs;
          hs_agree += AgreesWithOracle(row) ? 1 : 0;
        } else {
          ++ga_runs;
          ga_agree += AgreesWithOracle(row) ? 1 : 0;
        }
        summary.rows.push_back(std::move(row));
      }
    }
  }
  summary.hs_agreement = hs_runs == 0 ? 0.0 : double(hs_agree) / hs_runs;
  summary.ga_agreement = ga_runs == 0 ? 0.0 : double(ga_agree) / ga_runs;
  return summary;
}

void WriteValidationReport(const ValidationSummary& summary,
                           std::ostream& out) {
  out << std::left << std::setw(8) << "repeat" << std::setw(8) << "period"
      << std::setw(8) << "solver" << std::setw(18) << "C(oracle,solver)"
      << std::setw(18) << "C(solver,oracle)" << std::setw(10) << "feasible"
      << "non_dominated" << '\n';
  for (const ValidationRow& row : summary.rows) {
    out << std::left << std::setw(8) << row.repeat << std::setw(8)
        << row.period << std::setw(8)
        << (row.solver == SolverTag::kHs ? "hs" : "ga") << std::setw(18)
        << FormatPercent(row.c_oracle_solver) << std::setw(18)
        << FormatPercent(row.c_solver_oracle) << std::setw(10)
        << (row.feasible ? "yes" : "NO")
        << (row.non_dominated ? "yes" : "NO") << '\n';
  }
  out << std::fixed << std::setprecision(3)
      << "hs agreement with oracle: " << summary.hs_agreement
      << " (target >= " << kHsOracleAgreementTarget << ")\n"
      << "ga agreement with oracle: " << summary.ga_agreement
      << " (target >= " << kGaOracleAgreementTarget << ")\n"
      << "all feasible: " << (summary.all_feasible ? "yes" : "no") << '\n'
      << "all non-dominated: " << (summary.all_non_dominated ? "yes" : "no")
      << '\n'
      << "targets met: " << (summary.MeetsTargets() ? "yes" : "no") << '\n';
}

}  // namespace secalloc
