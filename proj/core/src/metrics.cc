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

#include "secalloc/metrics.h"

#include <cmath>
#include <set>
#include <vector>

namespace secalloc {

std::optional<double> CMetric(std::span<const Objective> a,
                              std::span<const Objective> b) {
  if (b.empty()) return std::nullopt;
  size_t dominated = 0;
  for (const Objective& target : b) {
    for (const Objective& source : a) {
      if (Dominates(source, target)) {
        ++dominated;
        break;
      }
    }
  }
  return static_cast<double>(dominated) / static_cast<double>(b.size());
}

std::optional<double> CMetric(const ParetoArchive& a, const ParetoArchive& b) {
  const std::vector<Objective> lhs = a.Objectives();
  const std::vector<Objective> rhs = b.Objectives();
  return CMetric(lhs, rhs);
}

size_t CommonSolutions(const ParetoArchive& a, const ParetoArchive& b) {
  std::set<std::vector<TechIndex>> keys;
  for (const Plan& plan : a.members()) keys.insert(plan.SortedSelection());
  size_t common = 0;
  for (const Plan& plan : b.members()) {
    if (keys.erase(plan.SortedSelection()) > 0) ++common;
  }
  return common;
}

ComparisonRow Compare(int period, const Instance& instance,
                      const ParetoArchive& hs, const ParetoArchive& ga) {
  ComparisonRow row;
  row.period = period;
  row.num_vulnerabilities = instance.num_vulnerabilities();
  row.num_technologies = instance.num_technologies();
  row.c_hs_ga = CMetric(hs, ga);
  row.c_ga_hs = CMetric(ga, hs);
  row.common = CommonSolutions(hs, ga);
  return row;
}

std::string FormatPercent(std::optional<double> fraction) {
  if (!fraction.has_value()) return "n/a";
  return std::to_string(std::lround(*fraction * 100.0)) + "%";
}

}  // namespace secalloc
