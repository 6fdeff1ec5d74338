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

#include "secalloc/oracle.h"

#include <bit>
#include <cstdint>
#include <string>
#include <vector>

#include "secalloc/errors.h"

namespace secalloc {

namespace {

// Bitset over vulnerabilities, one word per 64 rows.
using Bits = std::vector<uint64_t>;

int Popcount(const Bits& bits) {
  int total = 0;
  for (const uint64_t word : bits) total += std::popcount(word);
  return total;
}

}  // namespace

ParetoArchive ExactFront(const Instance& instance, int max_ns) {
  const int n_s = instance.num_technologies();
  const int n_v = instance.num_vulnerabilities();
  if (n_s > max_ns) {
    throw OracleLimitError("instance has " + std::to_string(n_s) +
                           " technologies; the exhaustive oracle is limited "
                           "to " +
                           std::to_string(max_ns));
  }
  const size_t words = (static_cast<size_t>(n_v) + 63) / 64;
  Bits active(words, 0);
  for (int i = 0; i < n_v; ++i) {
    if (instance.active(i)) active[i / 64] |= uint64_t{1} << (i % 64);
  }
  std::vector<Bits> covered(n_s, Bits(words, 0));
  for (int j = 0; j < n_s; ++j) {
    for (const VulnIndex i : instance.covered_by(j)) {
      covered[j][i / 64] |= uint64_t{1} << (i % 64);
    }
  }

  ParetoArchive front;
  std::vector<Objective> front_objectives;
  Bits residual(words);
  const uint64_t subsets = uint64_t{1} << n_s;
  for (uint64_t mask = 0; mask < subsets; ++mask) {
    Cost cost = 0;
    residual = active;
    for (int j = 0; j < n_s; ++j) {
      if ((mask >> j & 1) == 0) continue;
      cost += instance.cost(j);
      for (size_t w = 0; w < words; ++w) residual[w] &= ~covered[j][w];
    }
    if (cost > instance.cmax()) continue;
    const Objective objective{Popcount(residual), cost};
    bool dominated = false;
    for (const Objective& member : front_objectives) {
      if (Dominates(member, objective)) {
        dominated = true;
        break;
      }
    }
    if (dominated) continue;

    std::vector<TechIndex> selection;
    for (int j = 0; j < n_s; ++j) {
      if (mask >> j & 1) selection.push_back(j);
    }
    if (front.Insert(Plan(instance, std::move(selection))) ==
        InsertResult::kAccepted) {
      front_objectives = front.Objectives();
    }
  }
  return front;
}

}  // namespace secalloc
