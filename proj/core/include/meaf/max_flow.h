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

#ifndef MEAF_MAX_FLOW_H_
#define MEAF_MAX_FLOW_H_

#include <cstdint>
#include <memory>
#include <vector>

#include "meaf/flow_network.h"

namespace meaf {

struct MaxFlowResult {
  int64_t value = 0;
  std::vector<int64_t> arc_flows;  // indexed by ArcIndex
};

// Dinic's algorithm from a zero flow. Leaves the maximum flow in `net`.
MaxFlowResult MaxFlow(FlowNetwork& net);

// Reusable Dinic solver for tight loops: keeps its scratch buffers and
// skips copying per-arc flows.
class MaxFlowSolver {
 public:
  MaxFlowSolver();
  ~MaxFlowSolver();
  MaxFlowSolver(MaxFlowSolver&&) noexcept;
  MaxFlowSolver& operator=(MaxFlowSolver&&) noexcept;

  // Resets flow in `net`, then computes a maximum flow and returns its value.
  int64_t Solve(FlowNetwork& net);

 private:
  struct Buffers;
  std::unique_ptr<Buffers> buffers_;
};

}  // namespace meaf

#endif  // MEAF_MAX_FLOW_H_
