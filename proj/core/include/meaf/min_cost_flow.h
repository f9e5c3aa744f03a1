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

#ifndef MEAF_MIN_COST_FLOW_H_
#define MEAF_MIN_COST_FLOW_H_

#include <cstdint>
#include <vector>

#include "meaf/flow_network.h"
#include "meaf/rational.h"

namespace meaf {

enum class CostArithmetic {
  kAuto,        // 64-bit when provably safe, arbitrary precision otherwise
  kFixedWidth,  // 64-bit only; throws MeafError(kCostOverflow) if unsafe
  kBigInteger,  // arbitrary precision throughout
};

struct MinCostFlowResult {
  int64_t value = 0;
  Rational cost;                   // exact total cost of the returned flow
  std::vector<int64_t> arc_flows;  // indexed by ArcIndex
  bool used_big_integers = false;
};

// Minimum-cost maximum flow by the primal-dual method: Dijkstra with
// potentials, then blocking flow on zero-reduced-cost arcs. Rational arc
// costs are brought to a common denominator (lcm of denominators) so every
// comparison is exact integer arithmetic. Leaves the flow in `net`.
MinCostFlowResult MinCostMaxFlow(
    FlowNetwork& net, CostArithmetic arithmetic = CostArithmetic::kAuto);

}  // namespace meaf

#endif  // MEAF_MIN_COST_FLOW_H_
