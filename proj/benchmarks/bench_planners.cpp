// Copyright 2026 The SwarmGuard Authors.
//
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

#include <benchmark/benchmark.h>

#include "swarmguard/commgraph.hpp"
#include "swarmguard/distributed.hpp"
#include "swarmguard/objective.hpp"
#include "swarmguard/robust_core.hpp"

namespace {

using namespace swarmguard;

Scenario make(int robots, double range) {
  GenerateParams p;
  p.seed = 1;
  p.n_robots = robots;
  p.n_targets = 100;
  p.comm_range = range;
  p.attack_budget = robots / 2;
  return generate_scenario(p);
}

void BM_CentralRobust(benchmark::State& state) {
  const auto s = make(static_cast<int>(state.range(0)), 30.0);
  const CoverageObjective f(s);
  const auto robots = all_robots(f);
  for (auto _ : state) benchmark::DoNotOptimize(central_robust(robots, f, s.attack_budget));
}
BENCHMARK(BM_CentralRobust)->Arg(20)->Arg(60)->Arg(100);

void BM_Drm(benchmark::State& state) {
  const auto s = make(static_cast<int>(state.range(0)), static_cast<double>(state.range(1)));
  const CoverageObjective f(s);
  double parallel = 0.0;
  for (auto _ : state) {
    const auto r = drm(s, f);
    parallel += r.stats.parallel_time_s;
    benchmark::DoNotOptimize(r.assignment);
  }
  state.counters["parallel_us"] =
      benchmark::Counter(parallel * 1e6 / static_cast<double>(state.iterations()));
}
BENCHMARK(BM_Drm)->Args({20, 30})->Args({60, 30})->Args({60, 90})->Args({100, 30});

void BM_Dcp(benchmark::State& state) {
  const auto s = make(static_cast<int>(state.range(0)), 60.0);
  const auto g = build_graph(s.robot_positions(), s.comm_range);
  for (auto _ : state) benchmark::DoNotOptimize(dcp_partition(g));
}
BENCHMARK(BM_Dcp)->Arg(20)->Arg(60)->Arg(100);

}  // namespace

BENCHMARK_MAIN();
