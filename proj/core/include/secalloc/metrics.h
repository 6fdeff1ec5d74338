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

#ifndef SECALLOC_METRICS_H_
#define SECALLOC_METRICS_H_

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "secalloc/model.h"

namespace secalloc {

// Coverage of two sets: the fraction of `b` dominated by at least one member
// of `a`. Empty `b` yields std::nullopt.
std::optional<double> CMetric(std::span<const Objective> a,
                              std::span<const Objective> b);
std::optional<double> CMetric(const ParetoArchive& a, const ParetoArchive& b);

// Number of technology sets (order-insensitive) present in both archives.
size_t CommonSolutions(const ParetoArchive& a, const ParetoArchive& b);

// One row of the HS-vs-GA comparison table.
struct ComparisonRow {
  int period = 0;
  int num_vulnerabilities = 0;
  int num_technologies = 0;
  std::optional<double> c_hs_ga;
  std::optional<double> c_ga_hs;
  size_t common = 0;
};

ComparisonRow Compare(int period, const Instance& instance,
                      const ParetoArchive& hs, const ParetoArchive& ga);

// "25%" for 0.25; "n/a" when undefined.
std::string FormatPercent(std::optional<double> fraction);

}  // namespace secalloc

#endif  // SECALLOC_METRICS_H_
