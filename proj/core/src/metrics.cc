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

#include "meaf/metrics.h"

#include <algorithm>
#include <numeric>
#include <utility>
#include <vector>

#include "meaf/error.h"
#include "meaf/heuristics.h"

namespace meaf {

Rational InverseGiniExact(std::span<const int64_t> loads) {
  if (loads.empty()) {
    throw MeafError(ErrorCode::kUndefinedMetric, "no loads");
  }
  std::vector<int64_t> sorted(loads.begin(), loads.end());
  std::sort(sorted.begin(), sorted.end());
  if (sorted.front() < 0) {
    throw MeafError(ErrorCode::kPrecondition, "negative load");
  }
  const BigInt n = static_cast<int64_t>(sorted.size());
  BigInt total = 0;
  // sum_i sum_j |x_i - x_j| = 2 * sum_i (2i - n + 1) x_(i), x ascending.
  BigInt pair_sum = 0;
  for (std::size_t i = 0; i < sorted.size(); ++i) {
    total += sorted[i];
    pair_sum += (2 * BigInt(static_cast<int64_t>(i)) - n + 1) * sorted[i];
  }
  pair_sum *= 2;
  if (total == 0) {
    throw MeafError(ErrorCode::kUndefinedMetric,
                    "inverse Gini undefined for all-zero loads");
  }
  // 2 n^2 mean = 2 n total.
  return 1 - Rational(pair_sum, 2 * n * total);
}

double InverseGini(std::span<const int64_t> loads) {
  return static_cast<double>(InverseGiniExact(loads));
}

std::vector<TailDropRow> TailDropEval(const Instance& inst,
                                      std::span<const double> alphas) {
  std::vector<UserIndex> order(inst.num_users());
  std::iota(order.begin(), order.end(), 0);
  std::vector<TailDropRow> rows;
  rows.reserve(alphas.size());
  for (double alpha : alphas) {
    // Explicit caps: tail-drop is meaningful even below the 1/n floor.
    RawInstance raw;
    raw.num_apps = inst.num_apps();
    raw.capacities = std::vector<int64_t>(
        static_cast<std::size_t>(inst.num_apps()),
        UniformCapacity(alpha, inst.total_demand()));
    raw.users = inst.users();
    const Instance scaled = Instance::Create(std::move(raw));
    const Allocation alloc = AllocatePreinstalledOnly(scaled, order);
    TailDropRow row;
    row.alpha = alpha;
    row.capacity = scaled.num_apps() > 0 ? scaled.capacity(0) : 0;
    for (int64_t left : alloc.unallocated) {
      if (left > 0) ++row.users_with_remaining;
      row.unallocated += left;
    }
    row.users_with_remaining_pct =
        inst.num_users() == 0
            ? 0.0
            : 100.0 * static_cast<double>(row.users_with_remaining) /
                  inst.num_users();
    rows.push_back(row);
  }
  return rows;
}

}  // namespace meaf
