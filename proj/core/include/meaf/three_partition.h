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

#ifndef MEAF_THREE_PARTITION_H_
#define MEAF_THREE_PARTITION_H_

#include <cstdint>
#include <span>

#include "meaf/exact_solver.h"
#include "meaf/model.h"

namespace meaf {

struct ThreePartitionOutcome {
  bool yes = false;
  int64_t budget = 0;  // 3m
  SolveResult result;
};

// Decides a 3-Partition instance through the activation reduction: m apps of
// capacity `bound`, one user per item with no preinstalls, budget 3m. The
// answer is YES iff the exact solver finds a full routing with 3m
// activations. Throws MeafError(kPrecondition) naming the offending item
// when the 3-Partition preconditions fail.
ThreePartitionOutcome SolveThreePartition(std::span<const int64_t> items,
                                          int64_t bound,
                                          const ExactConfig& config = {});

bool CheckThreePartition(std::span<const int64_t> items, int64_t bound);

}  // namespace meaf

#endif  // MEAF_THREE_PARTITION_H_
