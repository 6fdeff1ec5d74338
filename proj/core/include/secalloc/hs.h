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

#ifndef SECALLOC_HS_H_
#define SECALLOC_HS_H_

#include <cstdint>

#include "secalloc/coverage_ledger.h"
#include "secalloc/model.h"
#include "secalloc/random.h"

namespace secalloc {

struct HsParams {
  int hms = 50;
  double hmcr = 0.95;
  double par = 0.30;
  int stall_limit = 50;
  int warm_count = 40;
  int random_count = 10;
  uint64_t seed = 0;
  // When set, the ledger only reflects harmony-memory initialization and is
  // not updated by accepted improvisations.
  bool ledger_freeze_after_init = false;

  // Throws InvalidParameterError.
  void Validate() const;
};

// Counters from one improvise/insert loop.
struct SolverStats {
  int iterations = 0;
  int accepted = 0;
  // Longest run of consecutive non-improving iterations.
  int longest_stall = 0;
};

struct HarmonyMemory {
  ParetoArchive archive;
  CoverageLedger ledger;
};

// hms randomized constructions offered to an archive of capacity hms. Every
// construction is recorded into the ledger, including rejected ones.
HarmonyMemory InitHarmonyMemory(const Instance& instance,
                                const HsParams& params, Random& rng);

// Builds a new plan one residual vulnerability at a time. With probability
// hmcr the technology comes from the ledger column of that vulnerability
// (then, with probability par, it is swapped for a covering technology that
// the ledger has not yet used there); otherwise from its coverage column.
// Only unselected technologies within budget are considered. Stops once at
// most nvmin residuals remain or no residual vulnerability has a candidate.
Plan Improvise(const Instance& instance, const ParetoArchive& archive,
               const CoverageLedger& ledger, const HsParams& params,
               Random& rng);

// Runs improvise/insert until stall_limit consecutive iterations bring no
// accepted insertion.
void RunHarmonySearch(const Instance& instance, HarmonyMemory& memory,
                      const HsParams& params, Random& rng,
                      SolverStats* stats = nullptr);

ParetoArchive HsStatic(const Instance& instance, const HsParams& params,
                       Random& rng, SolverStats* stats = nullptr);

// Warm-started re-solve after the instance has grown. Throws
// StaleArchiveError if `previous` references technologies that `instance`
// does not have.
ParetoArchive HsDynamic(const ParetoArchive& previous, const Instance& instance,
                        const HsParams& params, Random& rng,
                        SolverStats* stats = nullptr);

}  // namespace secalloc

#endif  // SECALLOC_HS_H_
