// Copyright 2026 The MEAF Authors.
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

// Heuristic and exact solver timings.

#include <benchmark/benchmark.h>

#include <vector>

#include "meaf/exact_solver.h"
#include "meaf/heuristics.h"
#include "meaf/synth.h"

namespace {

meaf::Instance MakeInstance(int64_t users, int64_t per_user) {
  meaf::GenConfig config;
  config.num_users = users;
  config.num_transactions = users * per_user;
  config.alpha = 0.3;
  config.seed = 11;
  return meaf::Generate(config);
}

meaf::HeuristicOptions Unchecked() {
  meaf::HeuristicOptions options;
  options.check_state = false;
  return options;
}

void BM_Dtas(benchmark::State& state) {
  const meaf::Instance inst = MakeInstance(state.range(0), 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(meaf::Dtas(inst, Unchecked()));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_Dtas)->RangeMultiplier(10)->Range(1000, 1000000)
    ->Unit(benchmark::kMillisecond)->Complexity();

void BM_CarlAscending(benchmark::State& state) {
  const meaf::Instance inst = MakeInstance(state.range(0), 100);
  for (auto _ : state) {
    benchmark::DoNotOptimize(
        meaf::Carl(inst, meaf::CarlOrder::kAscending, Unchecked()));
  }
  state.SetComplexityN(state.range(0));
}
BENCHMARK(BM_CarlAscending)->RangeMultiplier(10)->Range(1000, 1000000)
    ->Unit(benchmark::kMillisecond)->Complexity();

// Reduced 3-Partition instances are the hard case for exhaustive search.
const std::vector<std::vector<int64_t>>& ThreePartitionItems() {
  static const std::vector<std::vector<int64_t>> items = {
      {5, 5, 5, 5, 5, 5},                 // m = 2, yes
      {6, 6, 8, 6, 7, 7, 6, 7, 7},        // m = 3, yes
      {6, 6, 6, 6, 6, 7, 7, 7, 9},        // m = 3, no
  };
  return items;
}

void BM_ExactSolve(benchmark::State& state) {
  const std::vector<int64_t>& items = ThreePartitionItems()[state.range(0)];
  int64_t sum = 0;
  for (int64_t s : items) sum += s;
  const meaf::ReducedInstance reduced = meaf::ReduceThreePartition(
      items, sum / static_cast<int64_t>(items.size() / 3));
  meaf::ExactConfig config;
  config.prune = state.range(1) != 0;
  for (auto _ : state) {
    benchmark::DoNotOptimize(meaf::ExactSolve(reduced.instance, config));
  }
}
BENCHMARK(BM_ExactSolve)
    ->ArgsProduct({{0, 1, 2}, {0, 1}})
    ->ArgNames({"case", "prune"})
    ->Unit(benchmark::kMillisecond);

}  // namespace
