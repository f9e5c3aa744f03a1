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

#include "meaf/solve.h"

#include "meaf/lp_bound.h"

namespace meaf {

SolveResult Solve(const Instance& inst, Algorithm algorithm,
                  const SolveOptions& options) {
  switch (algorithm) {
    case Algorithm::kExact:
      return ExactSolve(inst, options.exact);
    case Algorithm::kLpBound:
      return LpLowerBound(inst, options.lp_arithmetic);
    case Algorithm::kCarlAscending:
      return Carl(inst, CarlOrder::kAscending, options.heuristics);
    case Algorithm::kCarlDescending:
      return Carl(inst, CarlOrder::kDescending, options.heuristics);
    case Algorithm::kDtas:
      return Dtas(inst, options.heuristics);
  }
  return Dtas(inst, options.heuristics);
}

}  // namespace meaf
