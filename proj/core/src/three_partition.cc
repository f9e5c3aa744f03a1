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

#include "meaf/three_partition.h"

#include "meaf/synth.h"

namespace meaf {

ThreePartitionOutcome SolveThreePartition(std::span<const int64_t> items,
                                          int64_t bound,
                                          const ExactConfig& config) {
  ReducedInstance reduced = ReduceThreePartition(items, bound);
  ExactConfig exact = config;
  exact.max_budget = reduced.budget;
  ThreePartitionOutcome outcome;
  outcome.budget = reduced.budget;
  outcome.result = ExactSolve(reduced.instance, exact);
  outcome.yes = outcome.result.status == SolveStatus::kOptimal &&
                outcome.result.activation_count == reduced.budget;
  return outcome;
}

bool CheckThreePartition(std::span<const int64_t> items, int64_t bound) {
  return SolveThreePartition(items, bound).yes;
}

}  // namespace meaf
