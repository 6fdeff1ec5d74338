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

#ifndef SECALLOC_CONSTRUCTION_H_
#define SECALLOC_CONSTRUCTION_H_

#include <cstddef>
#include <optional>
#include <vector>

#include "secalloc/coverage_ledger.h"
#include "secalloc/model.h"
#include "secalloc/random.h"

namespace secalloc {

// Randomized construction shared by both solvers: technologies are added one
// at a time, uniformly among the admissible ones, until at most nvmin
// vulnerabilities remain residual or nothing admissible is left.

// j is unselected, covers a current residual, and keeps the plan within cmax.
bool IsAdmissible(const Instance& instance, const Plan& plan, TechIndex j);

// Adding j keeps total cost <= cmax.
inline bool FitsBudget(const Instance& instance, const Plan& plan,
                       TechIndex j) {
  return plan.total_cost() + instance.cost(j) <= instance.cmax();
}

std::vector<TechIndex> AdmissibleTechnologies(const Instance& instance,
                                              const Plan& plan);

// residual_count <= nvmin, or no admissible technology remains.
bool MeetsStoppingCriterion(const Instance& instance, const Plan& plan);

// Continues the construction loop from `plan`. Each accepted technology is
// recorded into `ledger` when one is supplied.
void ExtendRandomly(const Instance& instance, Plan& plan, Random& rng,
                    CoverageLedger* ledger = nullptr);

Plan ConstructRandomPlan(const Instance& instance, Random& rng,
                         CoverageLedger* ledger = nullptr);

// Rebuilds `plan` on `instance`, which may be a later, larger period. Throws
// StaleArchiveError if a technology index does not exist there.
Plan Reevaluate(const Instance& instance, const Plan& plan);

// Initial memory for a dynamic phase. The previous archive is re-evaluated
// under `instance`; plans that still meet the stopping criterion are offered
// to a new archive as they are. Then `warm_count` extensions of uniformly
// drawn previous plans and `random_count` fresh constructions follow.
// Every construction is recorded into `ledger` when supplied, whether or not
// the archive keeps it.
ParetoArchive SeedDynamicArchive(const ParetoArchive& previous,
                                 const Instance& instance, int warm_count,
                                 int random_count,
                                 std::optional<size_t> capacity, Random& rng,
                                 CoverageLedger* ledger = nullptr);

}  // namespace secalloc

#endif  // SECALLOC_CONSTRUCTION_H_
