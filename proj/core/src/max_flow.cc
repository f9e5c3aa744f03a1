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

#include "meaf/max_flow.h"

#include "blocking_flow.h"

namespace meaf {

struct MaxFlowSolver::Buffers {
  internal::LevelGraph levels;
};

MaxFlowSolver::MaxFlowSolver() : buffers_(std::make_unique<Buffers>()) {}
MaxFlowSolver::~MaxFlowSolver() = default;
MaxFlowSolver::MaxFlowSolver(MaxFlowSolver&&) noexcept = default;
MaxFlowSolver& MaxFlowSolver::operator=(MaxFlowSolver&&) noexcept = default;

int64_t MaxFlowSolver::Solve(FlowNetwork& net) {
  net.ResetFlow();
  auto any = [](int32_t, NodeId) { return true; };
  int64_t value = 0;
  while (buffers_->levels.BuildLevels(net, any)) {
    value += buffers_->levels.Augment(net, any);
  }
  return value;
}

MaxFlowResult MaxFlow(FlowNetwork& net) {
  MaxFlowSolver solver;
  MaxFlowResult result;
  result.value = solver.Solve(net);
  result.arc_flows = net.ArcFlows();
  return result;
}

}  // namespace meaf
