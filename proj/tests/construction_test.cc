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

#include <vector>

#include "gtest/gtest.h"
#include "secalloc/errors.h"
#include "testing/reference.h"

namespace secalloc {
namespace {

using ::secalloc::testing::MakeRandomInstance;
using ::secalloc::testing::ReferenceObjective;
using ::secalloc::testing::ReferenceResiduals;

// Independent post-hoc scan: is there any technology that could still have
// been added?
bool AnyAdmissibleLeft(const Instance& instance,
                       const std::vector<TechIndex>& selection) {
  const std::vector<uint8_t> residuals = ReferenceResiduals(instance, selection);
  const Cost spent = ReferenceObjective(instance, selection).total_cost;
  for (int j = 0; j < instance.num_technologies(); ++j) {
    bool selected = false;
    for (TechIndex s : selection) selected |= s == j;
    if (selected || spent + instance.costs()[j] > instance.cmax()) continue;
    for (int i = 0; i < instance.num_vulnerabilities(); ++i) {
      if (residuals[i] && instance.coverage().at(i, j)) return true;
    }
  }
  return false;
}

TEST(ConstructRandomPlanTest, ZeroBudgetYieldsEmptyPlan) {
  const Instance instance = MakeRandomInstance(
      {.n_v = 5, .n_s = 6, .density = 0.5, .active_probability = 1.0,
       .min_cost = 1, .max_cost = 9, .cmax = 0, .nvmin = 0},
      1);
  Random rng(1);
  const Plan plan = ConstructRandomPlan(instance, rng);
  EXPECT_TRUE(plan.empty());
  EXPECT_EQ(plan.objective(), (Objective{instance.active_count(), 0}));
}

TEST(ConstructRandomPlanTest, FreeFullCoverReachesResidualBound) {
  BoolMatrix coverage(6, 4);
  for (int i = 0; i < 6; ++i) {
    coverage.set(i, 0);
    coverage.set(i, 1 + i % 3);
  }
  const Instance instance(std::vector<uint8_t>(6, 1), coverage, {0, 5, 5, 5},
                          7, 1);
  for (uint64_t seed = 0; seed < 50; ++seed) {
    Random rng(seed);
    const Plan plan = ConstructRandomPlan(instance, rng);
    EXPECT_LE(plan.residual_count(), instance.nvmin());
    EXPECT_LE(plan.total_cost(), instance.cmax());
  }
}

TEST(ConstructRandomPlanTest, EveryPlanIsFeasibleAndStopped) {
  const Instance instance = MakeRandomInstance(
      {.n_v = 10, .n_s = 12, .density = 0.25, .active_probability = 0.9,
       .min_cost = 5, .max_cost = 40, .cmax = 90, .nvmin = 2},
      42);
  Random rng(2024);
  for (int k = 0; k < 1000; ++k) {
    const Plan plan = ConstructRandomPlan(instance, rng);
    const std::vector<TechIndex> selection(plan.selection().begin(),
                                           plan.selection().end());
    const Objective objective = ReferenceObjective(instance, selection);
    ASSERT_EQ(objective, plan.objective());
    ASSERT_LE(objective.total_cost, instance.cmax());
    ASSERT_TRUE(objective.residual_count <= instance.nvmin() ||
                !AnyAdmissibleLeft(instance, selection));
  }
}

TEST(ConstructRandomPlanTest, EveryAddedTechnologyCoveredSomethingNew) {
  const Instance instance = MakeRandomInstance(
      {.n_v = 10, .n_s = 12, .density = 0.3, .cmax = 10000}, 5);
  Random rng(5);
  for (int k = 0; k < 200; ++k) {
    const Plan plan = ConstructRandomPlan(instance, rng);
    std::vector<TechIndex> prefix;
    for (const TechIndex j : plan.selection()) {
      const int before = ReferenceObjective(instance, prefix).residual_count;
      prefix.push_back(j);
      EXPECT_LT(ReferenceObjective(instance, prefix).residual_count, before);
    }
  }
}

TEST(ConstructRandomPlanTest, LedgerRecordsOnlyNewlyCoveredCells) {
  const Instance instance = MakeRandomInstance(
      {.n_v = 8, .n_s = 10, .density = 0.35, .cmax = 10000}, 9);
  Random rng(9);
  CoverageLedger ledger(instance);
  const Plan plan = ConstructRandomPlan(instance, rng, &ledger);
  EXPECT_TRUE(ledger.IsContainedIn(instance));

  CoverageLedger replay(instance);
  replay.RecordPlan(instance, plan.selection());
  EXPECT_EQ(ledger.matrix(), replay.matrix());

  // Each vulnerability is credited to exactly one technology in one plan.
  for (int i = 0; i < instance.num_vulnerabilities(); ++i) {
    int credited = 0;
    for (int j = 0; j < instance.num_technologies(); ++j) {
      credited += ledger.effective(i, j) ? 1 : 0;
    }
    EXPECT_EQ(credited, plan.is_residual(i) || !instance.active(i) ? 0 : 1);
  }
}

TEST(ReevaluateTest, RejectsIndicesMissingFromInstance) {
  const Instance big = MakeRandomInstance({.n_v = 4, .n_s = 6}, 3);
  const Instance small = MakeRandomInstance({.n_v = 4, .n_s = 3}, 3);
  const Plan plan(big, {1, 5});
  EXPECT_THROW(Reevaluate(small, plan), StaleArchiveError);
  EXPECT_EQ(Reevaluate(big, plan).objective(), plan.objective());
}

TEST(SeedDynamicArchiveTest, EmptyPreviousFallsBackToFreshConstructions) {
  const Instance instance = MakeRandomInstance(
      {.n_v = 6, .n_s = 8, .density = 0.3, .cmax = 500, .nvmin = 1}, 12);
  Random rng(12);
  CoverageLedger ledger(instance);
  const ParetoArchive archive =
      SeedDynamicArchive(ParetoArchive(), instance, 4, 2, 6, rng, &ledger);
  EXPECT_FALSE(archive.empty());
  EXPECT_TRUE(archive.CheckInvariants());
  EXPECT_TRUE(ledger.IsContainedIn(instance));
}

}  // namespace
}  // namespace secalloc
