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

#ifndef SECALLOC_GA_H_
#define SECALLOC_GA_H_

#include <cstddef>
#include <cstdint>
#include <span>
#include <utility>
#include <vector>

#include "secalloc/hs.h"
#include "secalloc/model.h"
#include "secalloc/random.h"

namespace secalloc {

struct GaParams {
  int population_size = 50;
  double crossover_rate = 0.90;
  double mutation_rate = 0.10;
  int stall_limit = 50;
  int warm_count = 40;
  int random_count = 10;
  uint64_t seed = 0;

  // Throws InvalidParameterError.
  void Validate() const;
};

// Half-open segment [begin, end) of a parent's construction order.
struct CutPoints {
  size_t begin = 0;
  size_t end = 0;
};

// Swaps the middle segments of two sequences. No deduplication.
std::pair<std::vector<TechIndex>, std::vector<TechIndex>> ExchangeSegments(
    std::span<const TechIndex> a, CutPoints cuts_a,
    std::span<const TechIndex> b, CutPoints cuts_b);

// Turns an arbitrary sequence into a plan: drops repeated technologies
// (first occurrence wins) and any technology that would push the running
// cost above cmax, then resumes randomized construction if the stopping
// criterion is not met.
Plan RepairChild(const Instance& instance, std::span<const TechIndex> sequence,
                 Random& rng);

// Two-point crossover with cut points drawn independently per parent.
std::pair<Plan, Plan> Crossover(const Plan& parent_a, const Plan& parent_b,
                                const Instance& instance, Random& rng);

// Removes one uniformly chosen technology and resumes construction. An empty
// plan is returned unchanged.
Plan Mutate(const Plan& child, const Instance& instance, Random& rng);

// Steady-state loop over the archive population until stall_limit
// consecutive iterations accept no child.
void RunGenetic(const Instance& instance, ParetoArchive& population,
                const GaParams& params, Random& rng,
                SolverStats* stats = nullptr);

ParetoArchive GaStatic(const Instance& instance, const GaParams& params,
                       Random& rng, SolverStats* stats = nullptr);

ParetoArchive GaDynamic(const ParetoArchive& previous, const Instance& instance,
                        const GaParams& params, Random& rng,
                        SolverStats* stats = nullptr);

}  // namespace secalloc

#endif  // SECALLOC_GA_H_
