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

#include <algorithm>
#include <numeric>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "secalloc/errors.h"
#include "testing/reference.h"

namespace secalloc {
namespace {

using ::secalloc::testing::AllFeasibleObjectives;
using ::secalloc::testing::MakeRandomInstance;
using ::secalloc::testing::ReferenceDominates;

// Non-dominated objective vectors from an exhaustive objective list.
std::vector<Objective> ReferenceFront(const std::vector<Objective>& all) {
  std::vector<Objective> front;
  for (const Objective& o : all) {
    const bool beaten = std::ranges::any_of(
        all, [&](const Objective& p) { return ReferenceDominates(p, o); });
    if (!beaten && std::ranges::find(front, o) == front.end()) {
      front.push_back(o);
    }
  }
  std::ranges::sort(front);
  return front;
}

std::vector<Objective> SortedUnique(std::vector<Objective> objectives) {
  std::ranges::sort(objectives);
  objectives.erase(std::unique(objectives.begin(), objectives.end()),
                   objectives.end());
  return objectives;
}

TEST(ExactFrontTest, NoTechnologiesGivesEmptyPlan) {
  const Instance instance({1, 0, 1}, BoolMatrix(3, 0), {}, 10, 0);
  const ParetoArchive front = ExactFront(instance);
  ASSERT_EQ(front.size(), 1u);
  EXPECT_TRUE(front[0].empty());
  EXPECT_EQ(front[0].objective(), (Objective{2, 0}));
}

TEST(ExactFrontTest, TwoVulnerabilityExample) {
  BoolMatrix coverage(2, 2);
  coverage.set(0, 0);
  coverage.set(1, 1);
  const Instance instance({1, 1}, coverage, {5, 7}, 100, 0);
  const ParetoArchive front = ExactFront(instance);
  EXPECT_EQ(SortedUnique(front.Objectives()),
            (std::vector<Objective>{{0, 12}, {1, 5}, {2, 0}}));
}

TEST(ExactFrontTest, BudgetExcludesExpensivePlans) {
  BoolMatrix coverage(2, 2);
  coverage.set(0, 0);
  coverage.set(1, 1);
  const Instance instance({1, 1}, coverage, {5, 7}, 11, 0);
  EXPECT_EQ(SortedUnique(ExactFront(instance).Objectives()),
            (std::vector<Objective>{{1, 5}, {2, 0}}));
}

TEST(ExactFrontTest, MatchesBruteForceOnRandomInstances) {
  for (uint64_t seed = 0; seed < 40; ++seed) {
    const Instance instance = MakeRandomInstance(
        {.n_v = 4 + static_cast<int>(seed % 5), .n_s = 6, .cmax = 90}, seed);
    const ParetoArchive front = ExactFront(instance);
    EXPECT_TRUE(front.CheckInvariants());
    EXPECT_EQ(SortedUnique(front.Objectives()),
              ReferenceFront(AllFeasibleObjectives(instance)))
        << "seed " << seed;
    for (const Plan& plan : front.members()) {
      EXPECT_LE(plan.total_cost(), instance.cmax());
    }
  }
}

TEST(ExactFrontTest, RefusesLargeInstances) {
  const Instance instance = MakeRandomInstance({.n_v = 3, .n_s = 21}, 1);
  EXPECT_THROW(ExactFront(instance), OracleLimitError);
  const Instance small = MakeRandomInstance({.n_v = 3, .n_s = 5}, 1);
  EXPECT_THROW(ExactFront(small, 4), OracleLimitError);
  EXPECT_NO_THROW(ExactFront(small, 5));
}

TEST(ExactFrontTest, InvariantUnderTechnologyPermutation) {
  std::mt19937_64 gen(77);
  for (uint64_t seed = 0; seed < 20; ++seed) {
    const Instance instance =
        MakeRandomInstance({.n_v = 6, .n_s = 7, .cmax = 100}, 300 + seed);
    std::vector<int> perm(7);
    std::iota(perm.begin(), perm.end(), 0);
    std::ranges::shuffle(perm, gen);
    BoolMatrix coverage(6, 7);
    std::vector<Cost> cost(7);
    for (int j = 0; j < 7; ++j) {
      cost[perm[j]] = instance.cost(j);
      for (int i = 0; i < 6; ++i) {
        coverage.set(i, perm[j], instance.covers(j, i));
      }
    }
    const Instance permuted(instance.active_flags(), coverage, cost,
                            instance.cmax(), instance.nvmin());
    EXPECT_EQ(SortedUnique(ExactFront(instance).Objectives()),
              SortedUnique(ExactFront(permuted).Objectives()));
  }
}

}  // namespace
}  // namespace secalloc
