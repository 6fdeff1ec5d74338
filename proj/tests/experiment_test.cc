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

#include "secalloc/experiment.h"

#include <algorithm>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "secalloc/errors.h"
#include "secalloc/oracle.h"
#include "testing/reference.h"

namespace secalloc {
namespace {

using ::secalloc::testing::MakeRandomInstance;

RunOptions SmallOptions(uint64_t seed) {
  RunOptions options;
  options.master_seed = seed;
  options.hs.hms = 10;
  options.hs.warm_count = 8;
  options.hs.random_count = 2;
  options.ga.population_size = 10;
  options.ga.warm_count = 8;
  options.ga.random_count = 2;
  return options;
}

Scenario SmallScenario(uint64_t seed) {
  ScenarioConfig config;
  config.seed = seed;
  config.periods = 2;
  config.initial_nv = 8;
  config.initial_ns = 6;
  config.vuln_growth = 2;
  config.tech_growth = 1;
  config.cmax = 6000;
  config.nvmin = 1;
  return GenerateScenario(config);
}

TEST(StreamSeedTest, DistinctAcrossSolversAndPeriods) {
  std::set<uint64_t> seeds;
  for (const SolverTag tag : {SolverTag::kHs, SolverTag::kGa}) {
    for (int t = 0; t <= 20; ++t) seeds.insert(StreamSeed(1, tag, t));
  }
  EXPECT_EQ(seeds.size(), 42u);
  EXPECT_NE(StreamSeed(1, SolverTag::kHs, 0), StreamSeed(2, SolverTag::kHs, 0));
  EXPECT_EQ(StreamSeed(9, SolverTag::kGa, 3), StreamSeed(9, SolverTag::kGa, 3));
}

TEST(ArchiveIoTest, RoundTrip) {
  const Instance instance =
      MakeRandomInstance({.n_v = 6, .n_s = 8, .cmax = 200}, 4);
  ParetoArchive archive;
  archive.Insert(Plan(instance, {3, 1}));
  archive.Insert(Plan(instance, {}));
  archive.Insert(Plan(instance, {0, 2, 5, 7}));
  std::stringstream text;
  WriteArchive(archive, text);
  const ParetoArchive loaded = ReadArchive(text, instance);
  ASSERT_EQ(loaded.size(), archive.size());
  for (const Plan& plan : archive.members()) {
    EXPECT_TRUE(std::ranges::any_of(loaded.members(), [&](const Plan& p) {
      return p.SameSetAs(plan) && p.objective() == plan.objective();
    }));
  }
}

TEST(ArchiveIoTest, LinesAreSortedAndSelectionsAscending) {
  BoolMatrix coverage(2, 3);
  coverage.set(0, 2);
  coverage.set(1, 0);
  const Instance instance({1, 1}, coverage, {4, 9, 3}, 100, 0);
  ParetoArchive archive;
  archive.Insert(Plan(instance, {2, 0}));
  archive.Insert(Plan(instance, {2}));
  std::stringstream text;
  WriteArchive(archive, text);
  EXPECT_EQ(text.str(), "0 7 0 2\n1 3 2\n");
}

TEST(ArchiveIoTest, RejectsMismatchedObjective) {
  BoolMatrix coverage(1, 1);
  coverage.set(0, 0);
  const Instance instance({1}, coverage, {4}, 100, 0);
  std::istringstream text("0 5 0\n");
  EXPECT_THROW(ReadArchive(text, instance), ParseError);
  std::istringstream bad_index("0 4 3\n");
  EXPECT_THROW(ReadArchive(bad_index, instance), Error);
}

TEST(ComparisonOutputTest, CsvSchema) {
  std::vector<ComparisonRow> rows(2);
  rows[0] = {0, 25, 40, 0.25, std::nullopt, 3};
  rows[1] = {1, 35, 55, 0.0, 1.0, 0};
  std::ostringstream out;
  WriteComparisonCsv(rows, out);
  EXPECT_EQ(out.str(),
            "period,size,C(HS,GA),C(GA,HS),common_solutions\n"
            "0,\"(25, 40)\",25%,n/a,3\n"
            "1,\"(35, 55)\",0%,100%,0\n");
  std::ostringstream table;
  WriteComparisonTable(rows, table);
  EXPECT_NE(table.str().find("(25, 40)"), std::string::npos);
  EXPECT_NE(table.str().find("n/a"), std::string::npos);
}

TEST(RunExperimentTest, ProducesOneRowPerPeriod) {
  const Scenario scenario = SmallScenario(3);
  const RunResult result = RunExperiment(scenario, SmallOptions(3));
  ASSERT_EQ(result.periods.size(), 3u);
  ASSERT_EQ(result.rows.size(), 3u);
  for (int t = 0; t <= 2; ++t) {
    const Instance instance = InstanceAt(scenario, t);
    const PeriodResult& period = result.periods[t];
    EXPECT_EQ(period.num_vulnerabilities, 8 + 2 * t);
    EXPECT_EQ(period.num_technologies, 6 + t);
    ASSERT_TRUE(period.hs.has_value());
    ASSERT_TRUE(period.ga.has_value());
    for (const ParetoArchive* archive : {&*period.hs, &*period.ga}) {
      EXPECT_TRUE(archive->CheckInvariants());
      for (const Plan& plan : archive->members()) {
        EXPECT_LE(plan.total_cost(), instance.cmax());
      }
    }
  }
}

TEST(RunExperimentTest, SingleSolverLeavesComparisonEmpty) {
  RunOptions options = SmallOptions(2);
  options.solver = SolverChoice::kHs;
  const RunResult result = RunExperiment(SmallScenario(2), options);
  EXPECT_TRUE(result.rows.empty());
  for (const PeriodResult& period : result.periods) {
    EXPECT_TRUE(period.hs.has_value());
    EXPECT_FALSE(period.ga.has_value());
  }
}

TEST(RunExperimentTest, DeterministicOutputs) {
  const Scenario scenario = SmallScenario(5);
  const auto dir = std::filesystem::temp_directory_path() / "secalloc_exp";
  std::filesystem::remove_all(dir);
  WriteRunOutputs(RunExperiment(scenario, SmallOptions(5)), dir / "a");
  WriteRunOutputs(RunExperiment(scenario, SmallOptions(5)), dir / "b");
  int files = 0;
  for (const auto& entry : std::filesystem::directory_iterator(dir / "a")) {
    const auto name = entry.path().filename();
    std::ifstream a(entry.path()), b(dir / "b" / name);
    ASSERT_TRUE(b.good()) << name;
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_EQ(sa.str(), sb.str()) << name;
    ++files;
  }
  EXPECT_EQ(files, 7);  // 3 HS, 3 GA, comparison
  std::filesystem::remove_all(dir);
}

TEST(RunExperimentTest, ExactArchivesCompareAsEqual) {
  const Instance instance =
      MakeRandomInstance({.n_v = 6, .n_s = 8, .cmax = 120}, 8);
  const ParetoArchive front = ExactFront(instance);
  const ComparisonRow row = Compare(0, instance, front, front);
  EXPECT_EQ(row.c_hs_ga, 0.0);
  EXPECT_EQ(row.c_ga_hs, 0.0);
  EXPECT_EQ(row.common, front.size());
}

TEST(ValidateScenarioTest, RefusesOversizedInstances) {
  ScenarioConfig config;
  config.periods = 1;
  config.initial_nv = 5;
  config.initial_ns = 20;
  config.tech_growth = 1;
  config.nvmin = 0;
  const Scenario scenario = GenerateScenario(config);
  try {
    ValidateScenario(scenario, SmallOptions(1), 1, 20);
    FAIL() << "expected OracleLimitError";
  } catch (const OracleLimitError& e) {
    EXPECT_NE(std::string(e.what()).find("period 1"), std::string::npos)
        << e.what();
  }
}

TEST(ValidateScenarioTest, SmallScenarioReport) {
  const ValidationSummary summary =
      ValidateScenario(SmallScenario(7), SmallOptions(7), 2, 20);
  EXPECT_EQ(summary.rows.size(), 2u * 3u * 2u);
  EXPECT_TRUE(summary.all_feasible);
  EXPECT_TRUE(summary.all_non_dominated);
  std::ostringstream out;
  WriteValidationReport(summary, out);
  EXPECT_FALSE(out.str().empty());
}

}  // namespace
}  // namespace secalloc
