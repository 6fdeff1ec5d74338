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

#ifndef SECALLOC_EXPERIMENT_H_
#define SECALLOC_EXPERIMENT_H_

#include <cstdint>
#include <filesystem>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "secalloc/ga.h"
#include "secalloc/hs.h"
#include "secalloc/metrics.h"
#include "secalloc/model.h"
#include "secalloc/scenario.h"

namespace secalloc {

enum class SolverChoice { kHs, kGa, kBoth };

enum class SolverTag : uint64_t { kHs = 1, kGa = 2 };

// Seed of the random stream used by `solver` at `period`:
//   SplitMix64(master ^ SplitMix64(tag << 32 | period)).
// HS and GA never share a stream, and neither does any pair of periods.
uint64_t StreamSeed(uint64_t master_seed, SolverTag solver, int period);

struct RunOptions {
  SolverChoice solver = SolverChoice::kBoth;
  HsParams hs;
  GaParams ga;
  uint64_t master_seed = 1;
};

struct PeriodResult {
  int period = 0;
  int num_vulnerabilities = 0;
  int num_technologies = 0;
  std::optional<ParetoArchive> hs;
  std::optional<ParetoArchive> ga;
};

struct RunResult {
  std::vector<PeriodResult> periods;
  // One row per period; only filled when both solvers ran.
  std::vector<ComparisonRow> rows;
};

// Period 0 is solved with the static phase; every later period with the
// dynamic phase warm-started from the same solver's previous archive.
RunResult RunExperiment(const Scenario& scenario, const RunOptions& options);

// One plan per line: residual count, total cost, then the sorted selection,
// space-separated. Lines are ordered by objective, then by selection.
void WriteArchive(const ParetoArchive& archive, std::ostream& out);

// Throws ParseError if a line is malformed or its stored objective does not
// match the re-evaluated selection on `instance`.
ParetoArchive ReadArchive(std::istream& in, const Instance& instance);

// Aligned text table with the same columns as the CSV file.
void WriteComparisonTable(const std::vector<ComparisonRow>& rows,
                          std::ostream& out);
void WriteComparisonCsv(const std::vector<ComparisonRow>& rows,
                        std::ostream& out);

std::string ArchiveFileName(SolverTag solver, int period);
inline constexpr const char* kComparisonCsvName = "comparison.csv";

// Writes per-period archive files and, when present, comparison.csv.
void WriteRunOutputs(const RunResult& result,
                     const std::filesystem::path& directory);

// ---------------------------------------------------------------------------
// Oracle validation.

inline constexpr double kHsOracleAgreementTarget = 0.80;
inline constexpr double kGaOracleAgreementTarget = 0.70;

struct ValidationRow {
  int repeat = 0;
  int period = 0;
  SolverTag solver = SolverTag::kHs;
  std::optional<double> c_oracle_solver;
  std::optional<double> c_solver_oracle;
  bool feasible = true;       // every plan within cmax
  bool non_dominated = true;  // archive invariants hold
};

struct ValidationSummary {
  std::vector<ValidationRow> rows;
  double hs_agreement = 0.0;  // share of runs with C(oracle, HS) = 0
  double ga_agreement = 0.0;
  bool all_feasible = true;
  bool all_non_dominated = true;

  bool MeetsTargets() const {
    return all_feasible && all_non_dominated &&
           hs_agreement >= kHsOracleAgreementTarget &&
           ga_agreement >= kGaOracleAgreementTarget;
  }
};

// Runs both solvers `repeats` times (master seeds master_seed + r) and the
// exact oracle on every period. Throws OracleLimitError naming the first
// period whose instance exceeds `max_ns` technologies.
ValidationSummary ValidateScenario(const Scenario& scenario,
                                   const RunOptions& options, int repeats,
                                   int max_ns);

void WriteValidationReport(const ValidationSummary& summary, std::ostream& out);

}  // namespace secalloc

#endif  // SECALLOC_EXPERIMENT_H_
