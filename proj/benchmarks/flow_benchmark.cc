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

// Max-flow and LP-bound throughput on generated instances.

#include <benchmark/benchmark.h>

#include "meaf/bipartite_network.h"
#include "meaf/lp_bound.h"
#include "meaf/max_flow.h"
#include "meaf/synth.h"

namespace {

meaf::Instance MakeInstance(int64_t users) {
  meaf::GenConfig config;
  config.num_users = users;
  config.num_transactions = users * 100;
  config.seed = 7;
  return meaf::Generate(config);
}

void BM_MaxFlowSolidOnly(benchmark::State& state) {
  const meaf::Instance inst = MakeInstance(state.range(0));
  meaf::BipartiteNetwork net = meaf::BuildNetwork(inst, {});
  meaf::MaxFlowSolver solver;
  for (auto _ : state) {
    benchmark::DoNotOptimize(solver.Solve(net.graph));
  }
  state.SetItemsProcessed(state.iterations() * net.graph.num_arcs());
}
BENCHMARK(BM_MaxFlowSolidOnly)->RangeMultiplier(10)->Range(1000, 100000)
    ->Unit(benchmark::kMillisecond);

void BM_LpLowerBound(benchmark::State& state) {
  const meaf::Instance inst = MakeInstance(state.range(0));
  for (auto _ : state) {
    benchmark::DoNotOptimize(meaf::LpLowerBound(inst));
  }
}
BENCHMARK(BM_LpLowerBound)->RangeMultiplier(10)->Range(100, 10000)
    ->Unit(benchmark::kMillisecond);

}  // namespace
