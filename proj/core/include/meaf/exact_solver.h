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

#ifndef MEAF_EXACT_SOLVER_H_
#define MEAF_EXACT_SOLVER_H_

#include <chrono>
#include <cstdint>
#include <optional>

#include "meaf/model.h"

namespace meaf {

struct ExactConfig {
  // Largest activation count k to try. Must not exceed |E_dashed|.
  std::optional<int64_t> max_budget;
  std::optional<std::chrono::duration<double>> time_limit;
  // Start the search at ceil(LP bound) and skip subtrees that leave some user
  // with less reachable capacity than its demand.
  bool prune = true;
  // Workers for the size-k enumeration. The answer does not depend on it.
  int num_threads = 1;
};

// Minimum-activation solver by iterative deepening on k. For each k the
// k-subsets of dashed edges are visited in lexicographic (user, app) order
// and the first subset admitting a full routing is returned, so the
// activation set is the lexicographically first among all optimal ones.
//
// Throws MeafError(kGloballyInfeasible) when total demand exceeds total
// capacity and MeafError(kInvalidConfig) for a bad budget. Running out of
// budget or time is reported through SolveResult::status, with the
// solid-edge-only routing as the partial allocation.
SolveResult ExactSolve(const Instance& inst, const ExactConfig& config = {});

}  // namespace meaf

#endif  // MEAF_EXACT_SOLVER_H_
