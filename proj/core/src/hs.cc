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

#include "secalloc/hs.h"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

#include "secalloc/construction.h"
#include "secalloc/errors.h"

namespace secalloc {

void HsParams::Validate() const {
  if (hms < 1) throw InvalidParameterError("hms must be >= 1");
  if (!(hmcr >= 0.0 && hmcr <= 1.0)) {
    throw InvalidParameterError("hmcr must lie in [0, 1]");
  }
  if (!(par >= 0.0 && par <= 1.0)) {
    throw InvalidParameterError("par must lie in [0, 1]");
  }
  if (stall_limit < 1) throw InvalidParameterError("stall_limit must be >= 1");
  if (warm_count < 0 || random_count < 0 || warm_count + random_count != hms) {
    throw InvalidParameterError("warm_count + random_count must equal hms (" +
                                std::to_string(hms) + ")");
  }
}

HarmonyMemory InitHarmonyMemory(const Instance& instance,
                                const HsParams& params, Random& rng) {
  params.Validate();
  HarmonyMemory memory{ParetoArchive(static_cast<size_t>(params.hms)),
                       CoverageLedger(instance)};
  for (int k = 0; k < params.hms; ++k) {
    memory.archive.Insert(ConstructRandomPlan(instance, rng, &memory.ledger));
  }
  return memory;
}

Plan Improvise(const Instance& instance, const ParetoArchive& archive,
               const CoverageLedger& ledger, const HsParams& params,
               Random& rng) {
  (void)archive;  // The memory is consulted through its ledger.
  Plan plan(instance);
  // A residual vulnerability with no candidate stays blocked: the plan only
  // grows and its cost only rises.
  std::vector<uint8_t> blocked(instance.num_vulnerabilities(), 0);
  std::vector<VulnIndex> open;
  std::vector<TechIndex> from_ledger;
  std::vector<TechIndex> from_coverage;
  std::vector<TechIndex> unused_by_ledger;

  while (plan.residual_count() > instance.nvmin()) {
    open.clear();
    for (const VulnIndex i : plan.ResidualList()) {
      if (blocked[i] == 0) open.push_back(i);
    }
    if (open.empty()) break;
    const VulnIndex i = rng.Pick(open);

    from_ledger.clear();
    from_coverage.clear();
    unused_by_ledger.clear();
    for (const TechIndex j : instance.covering(i)) {
      if (plan.contains(j) || !FitsBudget(instance, plan, j)) continue;
      from_coverage.push_back(j);
      if (ledger.effective(i, j)) {
        from_ledger.push_back(j);
      } else {
        unused_by_ledger.push_back(j);
      }
    }
    if (from_coverage.empty()) {
      blocked[i] = 1;
      continue;
    }

    TechIndex chosen;
    const bool consider_memory = rng.Bernoulli(params.hmcr);
    if (consider_memory && !from_ledger.empty()) {
      chosen = rng.Pick(from_ledger);
      if (rng.Bernoulli(params.par)) {
        chosen = unused_by_ledger.empty() ? rng.Pick(from_coverage)
                                          : rng.Pick(unused_by_ledger);
      }
    } else {
      chosen = rng.Pick(from_coverage);
    }
    plan.Add(instance, chosen);
  }
  return plan;
}

void RunHarmonySearch(const Instance& instance, HarmonyMemory& memory,
                      const HsParams& params, Random& rng,
                      SolverStats* stats) {
  params.Validate();
  SolverStats local;
  int stall = 0;
  while (stall < params.stall_limit) {
    Plan candidate =
        Improvise(instance, memory.archive, memory.ledger, params, rng);
    ++local.iterations;
    const std::vector<TechIndex> order(candidate.selection().begin(),
                                       candidate.selection().end());
    if (memory.archive.Insert(std::move(candidate)) ==
        InsertResult::kAccepted) {
      ++local.accepted;
      stall = 0;
      if (!params.ledger_freeze_after_init) {
        memory.ledger.RecordPlan(instance, order);
      }
    } else {
      ++stall;
    }
    local.longest_stall = std::max(local.longest_stall, stall);
  }
  if (stats != nullptr) *stats = local;
}

ParetoArchive HsStatic(const Instance& instance, const HsParams& params,
                       Random& rng, SolverStats* stats) {
  HarmonyMemory memory = InitHarmonyMemory(instance, params, rng);
  RunHarmonySearch(instance, memory, params, rng, stats);
  return std::move(memory.archive);
}

ParetoArchive HsDynamic(const ParetoArchive& previous, const Instance& instance,
                        const HsParams& params, Random& rng,
                        SolverStats* stats) {
  params.Validate();
  HarmonyMemory memory{ParetoArchive(), CoverageLedger(instance)};
  memory.archive = SeedDynamicArchive(
      previous, instance, params.warm_count, params.random_count,
      static_cast<size_t>(params.hms), rng, &memory.ledger);
  RunHarmonySearch(instance, memory, params, rng, stats);
  return std::move(memory.archive);
}

}  // namespace secalloc
