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

#ifndef MEAF_SOLVE_H_
#define MEAF_SOLVE_H_

#include "meaf/exact_solver.h"
#include "meaf/heuristics.h"
#include "meaf/min_cost_flow.h"
#include "meaf/model.h"

namespace meaf {

struct SolveOptions {
  ExactConfig exact;
  CostArithmetic lp_arithmetic = CostArithmetic::kAuto;
  HeuristicOptions heuristics;
};

// Runs one algorithm. Errors propagate as from the individual solvers.
SolveResult Solve(const Instance& inst, Algorithm algorithm,
                  const SolveOptions& options = {});

}  // namespace meaf

#endif  // MEAF_SOLVE_H_
