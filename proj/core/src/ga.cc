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

#include "secalloc/ga.h"

#include <algorithm>
#include <string>

#include "secalloc/construction.h"
#include "secalloc/errors.h"

namespace secalloc {

void GaParams::Validate() const {
  if (population_size < 2) {
    throw InvalidParameterError("population_size must be >= 2");
  }
  if (!(crossover_rate >= 0.0 && crossover_rate <= 1.0)) {
    throw InvalidParameterError("crossover_rate must lie in [0, 1]");
  }
  if (!(mutation_rate >= 0.0 && mutation_rate <= 1.0)) {
    throw InvalidParameterError("mutation_rate must lie in [0, 1]");
  }
  if (stall_limit < 1) throw InvalidParameterError("stall_limit must be >= 1");
  if (warm_count < 0 || random_count < 0 ||
      warm_count + random_count != population_size) {
    throw InvalidParameterError(
        "warm_count + random_count must equal population_size (" +
        std::to_string(population_size) + ")");
  }
}

std::pair<std::vector<TechIndex>, std::vector<TechIndex>> ExchangeSegments(
    std::span<const TechIndex> a, CutPoints cuts_a,
    std::span<const TechIndex> b, CutPoints cuts_b) {
  auto splice = [](std::span<const TechIndex> outer, CutPoints outer_cuts,
                   std::span<const TechIndex> inner, CutPoints inner_cuts) {
    std::vector<TechIndex> child;
    child.reserve(outer.size() + inner.size());
    child.insert(child.end(), outer.begin(), outer.begin() + outer_cuts.begin);
    child.insert(child.end(), inner.begin() + inner_cuts.begin,
                 inner.begin() + inner_cuts.end);
    child.insert(child.end(), outer.begin() + outer_cuts.end, outer.end());
    return child;
  };
  return {splice(a, cuts_a, b, cuts_b), splice(b, cuts_b, a, cuts_a)};
}

Plan RepairChild(const Instance& instance, std::span<const TechIndex> sequence,
                 Random& rng) {
  Plan plan(instance);
  for (const TechIndex j : sequence) {
    if (plan.contains(j) || !FitsBudget(instance, plan, j)) continue;
    plan.Add(instance, j);
  }
  ExtendRandomly(instance, plan, rng);
  return plan;
}

namespace {

// Two distinct positions in [0, length], as a half-open segment.
CutPoints DrawCuts(size_t length, Random& rng) {
  if (length == 0) return {};
  size_t first = rng.UniformIndex(length + 1);
  size_t second = rng.UniformIndex(length);
  if (second >= first) ++second;
  return {std::min(first, second), std::max(first, second)};
}

}  // namespace

std::pair<Plan, Plan> Crossover(const Plan& parent_a, const Plan& parent_b,
                                const Instance& instance, Random& rng) {
  const CutPoints cuts_a = DrawCuts(parent_a.size(), rng);
  const CutPoints cuts_b = DrawCuts(parent_b.size(), rng);
  // Independent cuts on one shared sequence would reshuffle it; identical
  // parents produce clones.
  if (std::ranges::equal(parent_a.selection(), parent_b.selection())) {
    return {parent_a, parent_b};
  }
  auto [seq_a, seq_b] = ExchangeSegments(parent_a.selection(), cuts_a,
                                         parent_b.selection(), cuts_b);
  Plan child_a = RepairChild(instance, seq_a, rng);
  Plan child_b = RepairChild(instance, seq_b, rng);
  return {std::move(child_a), std::move(child_b)};
}

Plan Mutate(const Plan& child, const Instance& instance, Random& rng) {
  if (child.empty()) return child;
  Plan mutated = child;
  mutated.RemoveAt(instance, rng.UniformIndex(mutated.size()));
  ExtendRandomly(instance, mutated, rng);
  return mutated;
}

void RunGenetic(const Instance& instance, ParetoArchive& population,
                const GaParams& params, Random& rng, SolverStats* stats) {
  params.Validate();
  SolverStats local;
  int stall = 0;
  while (stall < params.stall_limit && !population.empty()) {
    ++local.iterations;
    const Plan& parent_a = population[rng.UniformIndex(population.size())];
    const Plan& parent_b = population[rng.UniformIndex(population.size())];
    std::pair<Plan, Plan> children =
        rng.Bernoulli(params.crossover_rate)
            ? Crossover(parent_a, parent_b, instance, rng)
            : std::pair<Plan, Plan>{parent_a, parent_b};
    if (rng.Bernoulli(params.mutation_rate)) {
      children.first = Mutate(children.first, instance, rng);
    }
    if (rng.Bernoulli(params.mutation_rate)) {
      children.second = Mutate(children.second, instance, rng);
    }
    bool improved = false;
    improved |= population.Insert(std::move(children.first)) ==
                InsertResult::kAccepted;
    improved |= population.Insert(std::move(children.second)) ==
                InsertResult::kAccepted;
    if (improved) {
      ++local.accepted;
      stall = 0;
    } else {
      ++stall;
    }
    local.longest_stall = std::max(local.longest_stall, stall);
  }
  if (stats != nullptr) *stats = local;
}

ParetoArchive GaStatic(const Instance& instance, const GaParams& params,
                       Random& rng, SolverStats* stats) {
  params.Validate();
  ParetoArchive population(static_cast<size_t>(params.population_size));
  for (int k = 0; k < params.population_size; ++k) {
    population.Insert(ConstructRandomPlan(instance, rng));
  }
  RunGenetic(instance, population, params, rng, stats);
  return population;
}

ParetoArchive GaDynamic(const ParetoArchive& previous, const Instance& instance,
                        const GaParams& params, Random& rng,
                        SolverStats* stats) {
  params.Validate();
  ParetoArchive population = SeedDynamicArchive(
      previous, instance, params.warm_count, params.random_count,
      static_cast<size_t>(params.population_size), rng);
  RunGenetic(instance, population, params, rng, stats);
  return population;
}

}  // namespace secalloc
