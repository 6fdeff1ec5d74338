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

#include <cstdint>
#include <vector>

#include "benchmark/benchmark.h"
#include "secalloc/construction.h"
#include "secalloc/coverage_ledger.h"
#include "secalloc/ga.h"
#include "secalloc/hs.h"
#include "secalloc/model.h"
#include "secalloc/oracle.h"
#include "secalloc/scenario.h"

namespace secalloc {
namespace {

Instance ScenarioInstance(int n_v, int n_s, Cost cmax = 100000) {
  ScenarioConfig config;
  config.periods = 1;
  config.initial_nv = n_v;
  config.initial_ns = n_s;
  config.cmax = cmax;
  return InstanceAt(GenerateScenario(config), 0);
}

void BM_ConstructRandomPlan(benchmark::State& state) {
  const Instance instance =
      ScenarioInstance(static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(1)));
  Random rng(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ConstructRandomPlan(instance, rng));
  }
}
BENCHMARK(BM_ConstructRandomPlan)->Args({25, 40})->Args({125, 190});

void BM_Improvise(benchmark::State& state) {
  const Instance instance =
      ScenarioInstance(static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(1)));
  HsParams params;
  Random rng(2);
  const HarmonyMemory memory = InitHarmonyMemory(instance, params, rng);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        Improvise(instance, memory.archive, memory.ledger, params, rng));
  }
}
BENCHMARK(BM_Improvise)->Args({25, 40})->Args({125, 190});

void BM_ArchiveInsert(benchmark::State& state) {
  const Instance instance = ScenarioInstance(60, 90);
  Random rng(3);
  std::vector<Plan> plans;
  for (int k = 0; k < 1000; ++k) plans.push_back(ConstructRandomPlan(instance, rng));
  for (auto _ : state) {
    ParetoArchive archive(static_cast<size_t>(state.range(0)));
    for (const Plan& plan : plans) archive.Insert(plan);
    benchmark::DoNotOptimize(archive.size());
  }
  state.SetItemsProcessed(state.iterations() *
                          static_cast<int64_t>(plans.size()));
}
BENCHMARK(BM_ArchiveInsert)->Arg(50)->Arg(1000);

void BM_HsStatic(benchmark::State& state) {
  const Instance instance =
      ScenarioInstance(static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(1)));
  uint64_t seed = 0;
  for (auto _ : state) {
    Random rng(++seed);
    benchmark::DoNotOptimize(HsStatic(instance, HsParams{}, rng));
  }
}
BENCHMARK(BM_HsStatic)->Args({25, 40})->Args({125, 190})
    ->Unit(benchmark::kMillisecond);

void BM_GaStatic(benchmark::State& state) {
  const Instance instance =
      ScenarioInstance(static_cast<int>(state.range(0)),
                       static_cast<int>(state.range(1)));
  uint64_t seed = 0;
  for (auto _ : state) {
    Random rng(++seed);
    benchmark::DoNotOptimize(GaStatic(instance, GaParams{}, rng));
  }
}
BENCHMARK(BM_GaStatic)->Args({25, 40})->Args({125, 190})
    ->Unit(benchmark::kMillisecond);

void BM_ExactFront(benchmark::State& state) {
  const Instance instance =
      ScenarioInstance(12, static_cast<int>(state.range(0)), 20000);
  for (auto _ : state) {
    benchmark::DoNotOptimize(ExactFront(instance));
  }
}
BENCHMARK(BM_ExactFront)->Arg(12)->Arg(16)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace secalloc

BENCHMARK_MAIN();
