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

#include "secalloc/construction.h"

#include <string>

#include "secalloc/errors.h"

namespace secalloc {

bool IsAdmissible(const Instance& instance, const Plan& plan, TechIndex j) {
  return !plan.contains(j) && FitsBudget(instance, plan, j) &&
         plan.CoversResidual(instance, j);
}

std::vector<TechIndex> AdmissibleTechnologies(const Instance& instance,
                                              const Plan& plan) {
  std::vector<TechIndex> out;
  for (TechIndex j = 0; j < instance.num_technologies(); ++j) {
    if (IsAdmissible(instance, plan, j)) out.push_back(j);
  }
  return out;
}

bool MeetsStoppingCriterion(const Instance& instance, const Plan& plan) {
  if (plan.residual_count() <= instance.nvmin()) return true;
  for (TechIndex j = 0; j < instance.num_technologies(); ++j) {
    if (IsAdmissible(instance, plan, j)) return false;
  }
  return true;
}

void ExtendRandomly(const Instance& instance, Plan& plan, Random& rng,
                    CoverageLedger* ledger) {
  std::vector<TechIndex> candidates;
  while (plan.residual_count() > instance.nvmin()) {
    candidates = AdmissibleTechnologies(instance, plan);
    if (candidates.empty()) break;
    const TechIndex j = rng.Pick(candidates);
    const std::vector<VulnIndex> newly_covered = plan.Add(instance, j);
    if (ledger != nullptr) ledger->Record(j, newly_covered);
  }
}

Plan ConstructRandomPlan(const Instance& instance, Random& rng,
                         CoverageLedger* ledger) {
  Plan plan(instance);
  ExtendRandomly(instance, plan, rng, ledger);
  return plan;
}

Plan Reevaluate(const Instance& instance, const Plan& plan) {
  for (const TechIndex j : plan.selection()) {
    if (j >= instance.num_technologies()) {
      throw StaleArchiveError("archived plan references technology " +
                              std::to_string(j) + " but the instance has " +
                              std::to_string(instance.num_technologies()));
    }
  }
  return Plan(instance, {plan.selection().begin(), plan.selection().end()});
}

ParetoArchive SeedDynamicArchive(const ParetoArchive& previous,
                                 const Instance& instance, int warm_count,
                                 int random_count,
                                 std::optional<size_t> capacity, Random& rng,
                                 CoverageLedger* ledger) {
  std::vector<Plan> seeds;
  seeds.reserve(previous.size());
  for (const Plan& plan : previous.members()) {
    seeds.push_back(Reevaluate(instance, plan));
  }

  // Previous plans that are already complete on the new instance would only
  // extend to themselves; offer them directly.
  ParetoArchive archive(capacity);
  for (const Plan& seed : seeds) {
    if (!MeetsStoppingCriterion(instance, seed)) continue;
    if (ledger != nullptr) ledger->RecordPlan(instance, seed.selection());
    archive.Insert(seed);
  }
  for (int k = 0; k < warm_count; ++k) {
    Plan plan = seeds.empty() ? Plan(instance) : rng.Pick(seeds);
    ExtendRandomly(instance, plan, rng);
    if (ledger != nullptr) ledger->RecordPlan(instance, plan.selection());
    archive.Insert(std::move(plan));
  }
  for (int k = 0; k < random_count; ++k) {
    archive.Insert(ConstructRandomPlan(instance, rng, ledger));
  }
  return archive;
}

}  // namespace secalloc
