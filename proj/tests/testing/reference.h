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

#ifndef SECALLOC_TESTS_TESTING_REFERENCE_H_
#define SECALLOC_TESTS_TESTING_REFERENCE_H_

// Test-only oracles. Nothing here calls into the residual/objective code of
// the library; they re-derive results from the raw instance data.

#include <cstdint>
#include <map>
#include <random>
#include <vector>

#include "secalloc/model.h"

namespace secalloc::testing {

struct RandomInstanceSpec {
  int n_v = 6;
  int n_s = 8;
  double density = 0.3;
  double active_probability = 0.8;
  Cost min_cost = 1;
  Cost max_cost = 50;
  Cost cmax = 1000;
  int nvmin = 0;
};

inline Instance MakeRandomInstance(const RandomInstanceSpec& shape,
                                   uint64_t seed) {
  std::mt19937_64 gen(seed);
  std::bernoulli_distribution covers(shape.density);
  std::bernoulli_distribution present(shape.active_probability);
  std::uniform_int_distribution<Cost> price(shape.min_cost, shape.max_cost);
  std::vector<uint8_t> active(shape.n_v);
  for (auto& a : active) a = present(gen) ? 1 : 0;
  BoolMatrix coverage(shape.n_v, shape.n_s);
  for (int i = 0; i < shape.n_v; ++i) {
    for (int j = 0; j < shape.n_s; ++j) coverage.set(i, j, covers(gen));
  }
  std::vector<Cost> cost(shape.n_s);
  for (auto& c : cost) c = price(gen);
  return Instance(std::move(active), std::move(coverage), std::move(cost),
                  shape.cmax, shape.nvmin);
}

// Direct transcription of the three residual rules, scanning the coverage
// matrix cell by cell.
inline std::vector<uint8_t> ReferenceResiduals(
    const Instance& instance, const std::vector<TechIndex>& selection) {
  std::vector<uint8_t> r(instance.num_vulnerabilities());
  for (int i = 0; i < instance.num_vulnerabilities(); ++i) {
    if (!instance.active_flags()[i]) {
      r[i] = 0;
      continue;
    }
    bool some_selected_covers = false;
    for (int j = 0; j < instance.num_technologies(); ++j) {
      bool selected = false;
      for (TechIndex s : selection) selected |= (s == j);
      if (selected && instance.coverage().at(i, j)) some_selected_covers = true;
    }
    r[i] = some_selected_covers ? 0 : 1;
  }
  return r;
}

inline Objective ReferenceObjective(const Instance& instance,
                                    const std::vector<TechIndex>& selection) {
  Objective o;
  for (uint8_t r : ReferenceResiduals(instance, selection)) o.residual_count += r;
  for (TechIndex j : selection) o.total_cost += instance.costs()[j];
  return o;
}

inline std::vector<TechIndex> MaskToSelection(uint64_t mask, int n_s) {
  std::vector<TechIndex> out;
  for (int j = 0; j < n_s; ++j) {
    if (mask >> j & 1) out.push_back(j);
  }
  return out;
}

// Objectives of every selection that fits the budget.
inline std::vector<Objective> AllFeasibleObjectives(const Instance& instance) {
  std::vector<Objective> out;
  const int n_s = instance.num_technologies();
  for (uint64_t mask = 0; mask < (uint64_t{1} << n_s); ++mask) {
    const Objective o = ReferenceObjective(instance, MaskToSelection(mask, n_s));
    if (o.total_cost <= instance.cmax()) out.push_back(o);
  }
  return out;
}

inline bool ReferenceDominates(const Objective& a, const Objective& b) {
  const bool no_worse = a.residual_count <= b.residual_count &&
                        a.total_cost <= b.total_cost;
  const bool better = a.residual_count < b.residual_count ||
                      a.total_cost < b.total_cost;
  return no_worse && better;
}

}  // namespace secalloc::testing

#endif  // SECALLOC_TESTS_TESTING_REFERENCE_H_
