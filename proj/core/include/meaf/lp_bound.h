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

#ifndef MEAF_LP_BOUND_H_
#define MEAF_LP_BOUND_H_

#include "meaf/min_cost_flow.h"
#include "meaf/model.h"

namespace meaf {

// Optimal value of the relaxation that keeps flows integral but lets the
// activation variables range over [0, 1]. At an optimum x(u,a) = f(u,a)/t_u,
// so the value equals the cheapest full routing under unit cost 1/t_u on
// dashed arcs, which is solved here as a min-cost max-flow over the network
// with every dashed edge present.
//
// The result's objective is the exact rational bound; its allocation is the
// witnessing routing with every flow-carrying dashed edge marked activated.
// Throws MeafError(kGloballyInfeasible) if not all demand can be routed.
SolveResult LpLowerBound(const Instance& inst,
                         CostArithmetic arithmetic = CostArithmetic::kAuto);

}  // namespace meaf

#endif  // MEAF_LP_BOUND_H_
