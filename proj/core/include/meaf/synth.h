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

#ifndef MEAF_SYNTH_H_
#define MEAF_SYNTH_H_

#include <cstdint>
#include <span>
#include <vector>

#include <nlohmann/json.hpp>

#include "meaf/model.h"

namespace meaf {

struct GenConfig {
  int64_t num_users = 1000;
  int64_t num_transactions = 100000;
  int num_apps = 15;
  // Preinstall weight per app; all positive, summing to 1. Empty selects
  // DefaultMarketShares() for 15 apps and equal shares otherwise.
  std::vector<double> market_shares;
  // Weight of drawing k = 1, 2, 3, ... preinstalled apps per user.
  std::vector<double> apps_per_user = {0.5, 0.3, 0.2};
  // Demand of the user at popularity rank r is proportional to r^-s.
  double skew_exponent = 1.0;
  double alpha = 0.3;
  uint64_t seed = 1;
};

// Two dominant apps near 40% each and a tail of 13 sharing the remaining
// 20%. An editable default, not measured data; docs/market_shares.json holds
// the same vector.
std::vector<double> DefaultMarketShares();

// Throws MeafError(kInvalidConfig) naming the violated constraint.
void ValidateGenConfig(const GenConfig& config);

// Strict: unknown keys are rejected. Missing keys keep their defaults.
GenConfig GenConfigFromJson(const nlohmann::json& value);
nlohmann::json GenConfigToJson(const GenConfig& config);

// Semi-synthetic instance, a pure function of `config`:
//  * popularity ranks 1..N are assigned to users by a seeded shuffle;
//  * every user gets one transaction, and the remaining T - N are split in
//    proportion to rank^-s with largest-remainder rounding (ties to the
//    lower user index), so demands sum to T exactly;
//  * each user draws k from apps_per_user (capped at num_apps), then k
//    distinct apps by market share without replacement;
//  * capacities are uniform, alpha of T.
// Users are named "u1", "u2", ... in order.
Instance Generate(const GenConfig& config);

struct ReducedInstance {
  Instance instance;
  int64_t budget = 0;
};

// Throws MeafError(kPrecondition) unless items has 3m positive entries with
// sum m * bound and bound/4 < s < bound/2 for every item.
void ValidateThreePartition(std::span<const int64_t> items, int64_t bound);

// m apps of capacity `bound`, users "u1".."u3m" with demand s_i and nothing
// preinstalled; budget 3m.
ReducedInstance ReduceThreePartition(std::span<const int64_t> items,
                                     int64_t bound);

}  // namespace meaf

#endif  // MEAF_SYNTH_H_
