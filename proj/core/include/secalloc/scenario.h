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

#ifndef SECALLOC_SCENARIO_H_
#define SECALLOC_SCENARIO_H_

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "secalloc/model.h"

namespace secalloc {

// cost(j) = base + slope * coverage_count(j) + noise, noise drawn uniformly
// from [0, noise]. noise < slope keeps cost monotone in coverage count.
struct CostParams {
  Cost base = 500;
  Cost slope = 400;
  Cost noise = 100;
};

struct ScenarioConfig {
  int initial_nv = 25;
  int initial_ns = 40;
  int periods = 10;
  int vuln_growth = 10;
  int tech_growth = 15;
  // Independent probability that a technology covers a vulnerability.
  double coverage_density = 0.15;
  CostParams cost;
  Cost cmax = 100000;
  int nvmin = 3;
  uint64_t seed = 1;
  // Redraws of an empty coverage row before falling back to repair.
  int max_row_retries = 3;
  // Give a still-uncovered vulnerability one random covering technology.
  // When false, an uncovered vulnerability is an InfeasibleError.
  bool repair_uncovered = true;

  // Throws InvalidParameterError.
  void Validate() const;
};

// What arrives at one period. New vulnerabilities are always active.
struct PeriodDelta {
  int new_vulnerabilities = 0;
  int new_technologies = 0;
  // previous n_v x new_technologies: new technologies on existing rows.
  BoolMatrix existing_rows;
  // new_vulnerabilities x (previous n_s + new_technologies).
  BoolMatrix new_rows;
  std::vector<Cost> new_costs;

  friend bool operator==(const PeriodDelta&, const PeriodDelta&) = default;
};

struct Scenario {
  Instance initial;
  std::vector<PeriodDelta> deltas;
  uint64_t seed = 0;

  int periods() const { return static_cast<int>(deltas.size()); }

  friend bool operator==(const Scenario&, const Scenario&) = default;
};

// The period-t instance has initial_nv + t * vuln_growth vulnerabilities and
// initial_ns + t * tech_growth technologies. Every vulnerability is covered by
// some technology available at its arrival, and at every period a
// technology covering strictly more vulnerabilities never costs less.
Scenario GenerateScenario(const ScenarioConfig& config);

// Cumulative instance after deltas 1..t. Throws InvalidParameterError if t is
// outside [0, periods].
Instance InstanceAt(const Scenario& scenario, int t);

// Throws InvalidInstanceError if applying `delta` to `instance` is
// dimensionally inconsistent.
Instance ApplyDelta(const Instance& instance, const PeriodDelta& delta);

void SaveScenario(const Scenario& scenario, std::ostream& out);
std::string SaveScenarioToString(const Scenario& scenario);

// Throws ParseError naming the field (and period) at fault. Vulnerabilities
// with no covering technology at their arrival period are reported through
// `warnings` rather than rejected.
Scenario LoadScenario(std::istream& in,
                      std::vector<std::string>* warnings = nullptr);

// Coverage counts per technology for an instance.
std::vector<int> CoverageCounts(const Instance& instance);

}  // namespace secalloc

#endif  // SECALLOC_SCENARIO_H_
