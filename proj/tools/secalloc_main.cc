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

// Command-line harness: generate dynamic scenarios, run the harmony search
// and genetic solvers across all periods, and validate them against the
// exhaustive oracle on small scenarios.

#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "secalloc/errors.h"
#include "secalloc/experiment.h"
#include "secalloc/oracle.h"
#include "secalloc/scenario.h"

namespace {

constexpr int kExitError = 1;
constexpr int kExitUsage = 2;
constexpr int kExitTargetsMissed = 3;

struct SolverFlags {
  int hms = 50;
  double hmcr = 0.95;
  double par = 0.30;
  int stall = 50;
  int pop = 50;
  double cx = 0.90;
  double mut = 0.10;
  bool freeze_ledger = false;
  std::string solver = "both";
  uint64_t seed = 0;
  std::optional<int64_t> cmax;
  std::optional<int> nvmin;
};

void AddSolverFlags(CLI::App& cmd, SolverFlags& flags) {
  cmd.add_option("--seed", flags.seed,
                 "Master seed (defaults to the scenario's seed)");
  cmd.add_option("--hms", flags.hms, "Harmony memory size")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--hmcr", flags.hmcr, "Harmony memory considering rate")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--par", flags.par, "Pitch adjustment rate")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--stall", flags.stall,
                 "Iterations without improvement before stopping")
      ->check(CLI::PositiveNumber);
  cmd.add_option("--pop", flags.pop, "GA population size")
      ->check(CLI::Range(2, 1 << 20));
  cmd.add_option("--cx", flags.cx, "GA crossover rate")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--mut", flags.mut, "GA mutation rate")
      ->check(CLI::Range(0.0, 1.0));
  cmd.add_option("--cmax", flags.cmax, "Override the scenario budget")
      ->check(CLI::NonNegativeNumber);
  cmd.add_option("--nvmin", flags.nvmin,
                 "Override the scenario residual bound")
      ->check(CLI::NonNegativeNumber);
  cmd.add_flag("--freeze-ledger", flags.freeze_ledger,
               "Only record the coverage ledger during memory initialization");
}

// 80/20 warm/random split of the dynamic-phase seeding.
std::pair<int, int> SeedingSplit(int size) {
  const int warm = static_cast<int>(std::lround(0.8 * size));
  return {warm, size - warm};
}

secalloc::RunOptions MakeRunOptions(const SolverFlags& flags,
                                    const secalloc::Scenario& scenario,
                                    bool seed_given) {
  secalloc::RunOptions options;
  options.solver = flags.solver == "hs"   ? secalloc::SolverChoice::kHs
                   : flags.solver == "ga" ? secalloc::SolverChoice::kGa
                                          : secalloc::SolverChoice::kBoth;
  options.master_seed = seed_given ? flags.seed : scenario.seed;

  options.hs.hms = flags.hms;
  options.hs.hmcr = flags.hmcr;
  options.hs.par = flags.par;
  options.hs.stall_limit = flags.stall;
  std::tie(options.hs.warm_count, options.hs.random_count) =
      SeedingSplit(flags.hms);
  options.hs.ledger_freeze_after_init = flags.freeze_ledger;
  options.hs.seed = options.master_seed;

  options.ga.population_size = flags.pop;
  options.ga.crossover_rate = flags.cx;
  options.ga.mutation_rate = flags.mut;
  options.ga.stall_limit = flags.stall;
  std::tie(options.ga.warm_count, options.ga.random_count) =
      SeedingSplit(flags.pop);
  options.ga.seed = options.master_seed;

  options.hs.Validate();
  options.ga.Validate();
  return options;
}

secalloc::Scenario LoadScenarioFile(const std::string& path,
                                    const SolverFlags& flags) {
  std::ifstream in(path);
  if (!in) throw secalloc::Error("cannot open scenario file " + path);
  std::vector<std::string> warnings;
  secalloc::Scenario scenario = secalloc::LoadScenario(in, &warnings);
  for (const std::string& warning : warnings) {
    std::cerr << "warning: " << warning << '\n';
  }
  if (flags.cmax || flags.nvmin) {
    const secalloc::Instance& initial = scenario.initial;
    scenario.initial = secalloc::Instance(
        initial.active_flags(), initial.coverage(), initial.costs(),
        flags.cmax.value_or(initial.cmax()),
        flags.nvmin.value_or(initial.nvmin()));
  }
  return scenario;
}

int RunGenerate(const secalloc::ScenarioConfig& config,
                const std::string& out_path) {
  std::filesystem::path path(out_path);
  if (std::filesystem::is_directory(path)) path /= "scenario.json";
  const secalloc::Scenario scenario = secalloc::GenerateScenario(config);
  {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw secalloc::Error("cannot write " + path.string());
    secalloc::SaveScenario(scenario, out);
  }
  std::cout << "wrote " << path.string() << " (seed " << scenario.seed
            << ", " << scenario.periods() + 1 << " periods)\n";
  std::cout << "period  size\n";
  secalloc::Instance instance = scenario.initial;
  for (int t = 0; t <= scenario.periods(); ++t) {
    if (t > 0) instance = secalloc::ApplyDelta(instance, scenario.deltas[t - 1]);
    std::cout << t << "       (" << instance.num_vulnerabilities() << ", "
              << instance.num_technologies() << ")\n";
  }
  return 0;
}

int RunRun(const std::string& scenario_path, const SolverFlags& flags,
           bool seed_given, const std::string& out_dir) {
  const secalloc::Scenario scenario = LoadScenarioFile(scenario_path, flags);
  const secalloc::RunOptions options =
      MakeRunOptions(flags, scenario, seed_given);
  const secalloc::RunResult result =
      secalloc::RunExperiment(scenario, options);
  secalloc::WriteRunOutputs(result, out_dir);
  if (!result.rows.empty()) {
    secalloc::WriteComparisonTable(result.rows, std::cout);
  } else {
    for (const secalloc::PeriodResult& period : result.periods) {
      const auto& archive = period.hs ? *period.hs : *period.ga;
      std::cout << "period " << period.period << " ("
                << period.num_vulnerabilities << ", "
                << period.num_technologies << "): " << archive.size()
                << " non-dominated plans\n";
    }
  }
  std::cout << "archives written to " << out_dir << '\n';
  return 0;
}

int RunValidate(const std::string& scenario_path, const SolverFlags& flags,
                bool seed_given, int repeats, int max_ns) {
  const secalloc::Scenario scenario = LoadScenarioFile(scenario_path, flags);
  const secalloc::RunOptions options =
      MakeRunOptions(flags, scenario, seed_given);
  const secalloc::ValidationSummary summary =
      secalloc::ValidateScenario(scenario, options, repeats, max_ns);
  secalloc::WriteValidationReport(summary, std::cout);
  return summary.MeetsTargets() ? 0 : kExitTargetsMissed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Bi-objective dynamic security technology selection"};
  app.require_subcommand(1);

  secalloc::ScenarioConfig config;
  std::string generate_out = "scenario.json";
  CLI::App* generate =
      app.add_subcommand("generate", "Generate a dynamic scenario file");
  generate->add_option("--seed", config.seed, "Generator seed");
  generate->add_option("--periods", config.periods,
                       "Number of periods after the initial one")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--initial-nv", config.initial_nv,
                       "Initial number of vulnerabilities")
      ->check(CLI::PositiveNumber);
  generate->add_option("--initial-ns", config.initial_ns,
                       "Initial number of technologies")
      ->check(CLI::PositiveNumber);
  generate->add_option("--vuln-growth", config.vuln_growth,
                       "Vulnerabilities added per period")
      ->check(CLI::PositiveNumber);
  generate->add_option("--tech-growth", config.tech_growth,
                       "Technologies added per period")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--cmax", config.cmax, "Total budget")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--nvmin", config.nvmin, "Residual bound")
      ->check(CLI::NonNegativeNumber);
  generate->add_option("--density", config.coverage_density,
                       "Coverage probability per (vulnerability, technology)");
  generate->add_option("--out", generate_out,
                       "Output file, or directory to hold scenario.json");

  SolverFlags run_flags;
  std::string run_scenario;
  std::string run_out = "out";
  CLI::App* run = app.add_subcommand(
      "run", "Solve every period and write archives and the comparison");
  run->add_option("scenario", run_scenario, "Scenario file")->required();
  run->add_option("--solver", run_flags.solver, "hs, ga or both")
      ->check(CLI::IsMember({"hs", "ga", "both"}));
  run->add_option("--out", run_out, "Output directory");
  AddSolverFlags(*run, run_flags);

  SolverFlags validate_flags;
  std::string validate_scenario;
  int repeats = 1;
  int max_ns = secalloc::kDefaultOracleMaxTechnologies;
  CLI::App* validate = app.add_subcommand(
      "validate", "Compare both solvers with the exhaustive oracle");
  validate->add_option("scenario", validate_scenario, "Scenario file")
      ->required();
  validate->add_option("--repeats", repeats,
                       "Number of master seeds (seed, seed+1, ...)")
      ->check(CLI::PositiveNumber);
  validate->add_option("--max-ns", max_ns,
                       "Largest technology count the oracle accepts")
      ->check(CLI::Range(0, 30));
  AddSolverFlags(*validate, validate_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*generate) {
      if (config.nvmin > config.initial_nv) {
        std::cerr << "error: --nvmin exceeds --initial-nv\n";
        return kExitUsage;
      }
      return RunGenerate(config, generate_out);
    }
    if (*run) {
      return RunRun(run_scenario, run_flags, run->count("--seed") > 0,
                    run_out);
    }
    if (*validate) {
      return RunValidate(validate_scenario, validate_flags,
                         validate->count("--seed") > 0, repeats, max_ns);
    }
  } catch (const secalloc::InvalidParameterError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitError;
  }
  return kExitUsage;
}
