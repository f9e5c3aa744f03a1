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

#ifndef MEAF_METRICS_H_
#define MEAF_METRICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "meaf/model.h"
#include "meaf/rational.h"

namespace meaf {

// 1 - G with G = sum_i sum_j |x_i - x_j| / (2 n^2 mean), over every entry
// including zeros. Exact; throws MeafError(kUndefinedMetric) when all loads
// are zero or the vector is empty and kPrecondition on negative loads.
Rational InverseGiniExact(std::span<const int64_t> loads);
double InverseGini(std::span<const int64_t> loads);

struct TailDropRow {
  double alpha = 0.0;
  int64_t capacity = 0;  // per app
  int64_t users_with_remaining = 0;
  double users_with_remaining_pct = 0.0;
  int64_t unallocated = 0;
};

// For each alpha: uniform capacity ceil(alpha * T), with no 1/n floor. Users
// in input order are served from their preinstalled apps only (largest
// remaining capacity first); reports the users left with demand and the
// total left over.
std::vector<TailDropRow> TailDropEval(const Instance& inst,
                                      std::span<const double> alphas);

}  // namespace meaf

#endif  // MEAF_METRICS_H_
