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

#include "meaf/lp_bound.h"

#include <chrono>
#include <vector>

#include <fmt/format.h>

#include "meaf/bipartite_network.h"
#include "meaf/error.h"

namespace meaf {

SolveResult LpLowerBound(const Instance& inst, CostArithmetic arithmetic) {
  const auto start = std::chrono::steady_clock::now();
  if (inst.total_demand() > inst.total_capacity()) {
    throw MeafError(ErrorCode::kGloballyInfeasible,
                    fmt::format("total demand {} exceeds total capacity {}",
                                inst.total_demand(), inst.total_capacity()));
  }
  const std::vector<Edge> dashed = CollectDashedEdges(inst);
  BipartiteNetwork net =
      BuildNetwork(inst, dashed, ArcCosts::kActivationRelaxation);
  MinCostFlowResult flow = MinCostMaxFlow(net.graph, arithmetic);
  if (flow.value != inst.total_demand()) {
    throw MeafError(ErrorCode::kGloballyInfeasible,
                    fmt::format("only {} of {} transactions can be routed",
                                flow.value, inst.total_demand()));
  }

  SolveResult result;
  result.algorithm = Algorithm::kLpBound;
  result.allocation = ExtractAllocation(inst, net, flow.arc_flows);
  result.activation_count =
      static_cast<int64_t>(result.allocation.activated.size());
  result.objective = flow.cost;
  result.total_unallocated = TotalUnallocated(result.allocation);
  result.status = SolveStatus::kFeasible;
  result.wall_time = std::chrono::steady_clock::now() - start;
  return result;
}

}  // namespace meaf
