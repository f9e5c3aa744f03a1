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

#include "meaf/synth.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "meaf/error.h"
#include "meaf/rng.h"

namespace meaf {
namespace {

using nlohmann::json;

[[noreturn]] void ConfigError(const std::string& message) {
  throw MeafError(ErrorCode::kInvalidConfig, message);
}

std::vector<double> SharesOrDefault(const GenConfig& config) {
  if (!config.market_shares.empty()) return config.market_shares;
  if (config.num_apps == 15) return DefaultMarketShares();
  return std::vector<double>(config.num_apps, 1.0 / config.num_apps);
}

// Splits `total` into parts proportional to `weights`, rounding by largest
// remainder with ties to the lower index.
std::vector<int64_t> LargestRemainder(int64_t total,
                                      const std::vector<long double>& weights) {
  const std::size_t n = weights.size();
  const long double sum =
      std::accumulate(weights.begin(), weights.end(), 0.0L);
  std::vector<int64_t> parts(n);
  std::vector<long double> remainder(n);
  int64_t assigned = 0;
  for (std::size_t i = 0; i < n; ++i) {
    const long double quota = static_cast<long double>(total) * weights[i] / sum;
    const long double floor = std::floor(quota);
    parts[i] = static_cast<int64_t>(floor);
    remainder[i] = quota - floor;
    assigned += parts[i];
  }
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return remainder[a] > remainder[b];
  });
  int64_t leftover = total - assigned;
  // Floating-point quotas can miss by a few units either way.
  for (std::size_t i = 0; leftover > 0; i = (i + 1) % n, --leftover) {
    ++parts[order[i]];
  }
  for (std::size_t i = n; leftover < 0;) {
    i = (i == 0 ? n : i) - 1;
    if (parts[order[i]] > 0) {
      --parts[order[i]];
      ++leftover;
    }
  }
  return parts;
}

}  // namespace

std::vector<double> DefaultMarketShares() {
  return {0.40,  0.40,  0.05,  0.035, 0.025, 0.02,  0.015, 0.012,
          0.01,  0.009, 0.008, 0.006, 0.004, 0.003, 0.003};
}

void ValidateGenConfig(const GenConfig& config) {
  if (config.num_users < 1) ConfigError("num_users must be at least 1");
  if (config.num_users > (int64_t{1} << 30)) ConfigError("num_users too large");
  if (config.num_apps < 1) ConfigError("num_apps must be at least 1");
  if (config.num_transactions < config.num_users) {
    ConfigError(fmt::format(
        "num_transactions {} below num_users {}: every user needs demand >= 1",
        config.num_transactions, config.num_users));
  }
  const std::vector<double> shares = SharesOrDefault(config);
  if (static_cast<int>(shares.size()) != config.num_apps) {
    ConfigError(fmt::format("market_shares has {} entries for {} apps",
                            shares.size(), config.num_apps));
  }
  double sum = 0.0;
  for (std::size_t a = 0; a < shares.size(); ++a) {
    if (!std::isfinite(shares[a]) || shares[a] <= 0.0) {
      ConfigError(fmt::format("market share of app {} must be positive", a));
    }
    sum += shares[a];
  }
  if (std::abs(sum - 1.0) > 1e-9) {
    ConfigError(fmt::format("market_shares sum to {}, expected 1", sum));
  }
  if (config.apps_per_user.empty()) ConfigError("apps_per_user is empty");
  double k_sum = 0.0;
  for (double w : config.apps_per_user) {
    if (!std::isfinite(w) || w < 0.0) {
      ConfigError("apps_per_user weights must be non-negative");
    }
    k_sum += w;
  }
  if (k_sum <= 0.0) ConfigError("apps_per_user has zero total weight");
  if (!std::isfinite(config.skew_exponent) || config.skew_exponent < 0.0) {
    ConfigError("skew_exponent must be a non-negative number");
  }
  if (!std::isfinite(config.alpha) || config.alpha <= 0.0 ||
      config.alpha > 1.0) {
    ConfigError(fmt::format("alpha {} outside (0, 1]", config.alpha));
  }
  if (!AlphaMeetsFloor(config.alpha, config.num_apps)) {
    ConfigError(fmt::format("alpha {} below 1/num_apps = 1/{}", config.alpha,
                            config.num_apps));
  }
}

GenConfig GenConfigFromJson(const json& value) {
  if (!value.is_object()) {
    throw MeafError(ErrorCode::kParse, "generator config must be an object");
  }
  GenConfig config;
  for (const auto& [key, item] : value.items()) {
    const bool integer_key = key == "num_users" || key == "num_transactions" ||
                             key == "num_apps";
    if (integer_key && !item.is_number_integer()) {
      throw MeafError(ErrorCode::kParse,
                      fmt::format("'{}' must be an integer", key));
    }
    if ((key == "skew_exponent" || key == "alpha") && !item.is_number()) {
      throw MeafError(ErrorCode::kParse,
                      fmt::format("'{}' must be a number", key));
    }
    if (key == "seed" &&
        !(item.is_number_unsigned() ||
          (item.is_number_integer() && item.get<int64_t>() >= 0))) {
      throw MeafError(ErrorCode::kParse,
                      "seed must be a non-negative integer");
    }
    try {
      if (key == "num_users") {
        config.num_users = item.get<int64_t>();
      } else if (key == "num_transactions") {
        config.num_transactions = item.get<int64_t>();
      } else if (key == "num_apps") {
        config.num_apps = item.get<int>();
      } else if (key == "market_shares") {
        config.market_shares = item.get<std::vector<double>>();
      } else if (key == "apps_per_user") {
        config.apps_per_user = item.get<std::vector<double>>();
      } else if (key == "skew_exponent") {
        config.skew_exponent = item.get<double>();
      } else if (key == "alpha") {
        config.alpha = item.get<double>();
      } else if (key == "seed") {
        config.seed = item.get<uint64_t>();
      } else {
        throw MeafError(ErrorCode::kParse,
                        fmt::format("unknown generator config key '{}'", key));
      }
    } catch (const json::exception& e) {
      throw MeafError(ErrorCode::kParse,
                      fmt::format("bad value for '{}': {}", key, e.what()));
    }
  }
  return config;
}

json GenConfigToJson(const GenConfig& config) {
  json out;
  out["num_users"] = config.num_users;
  out["num_transactions"] = config.num_transactions;
  out["num_apps"] = config.num_apps;
  out["market_shares"] = SharesOrDefault(config);
  out["apps_per_user"] = config.apps_per_user;
  out["skew_exponent"] = config.skew_exponent;
  out["alpha"] = config.alpha;
  out["seed"] = config.seed;
  return out;
}

Instance Generate(const GenConfig& config) {
  ValidateGenConfig(config);
  Rng rng(config.seed);
  const int64_t n = config.num_users;
  const std::vector<double> shares = SharesOrDefault(config);

  std::vector<int64_t> rank(n);
  std::iota(rank.begin(), rank.end(), 1);
  rng.Shuffle(std::span<int64_t>(rank));
  std::vector<long double> weight(n);
  for (int64_t i = 0; i < n; ++i) {
    weight[i] = std::pow(static_cast<long double>(rank[i]),
                         -static_cast<long double>(config.skew_exponent));
  }
  std::vector<int64_t> demand =
      LargestRemainder(config.num_transactions - n, weight);

  RawInstance raw;
  raw.num_apps = config.num_apps;
  raw.capacities = AlphaCapacity{config.alpha};
  raw.users.resize(n);
  std::vector<double> remaining(shares.size());
  for (int64_t i = 0; i < n; ++i) {
    UserRecord& user = raw.users[i];
    user.id = fmt::format("u{}", i + 1);
    user.demand = demand[i] + 1;
    const int k = std::min<int>(
        static_cast<int>(rng.WeightedIndex(config.apps_per_user)) + 1,
        config.num_apps);
    remaining = shares;
    for (int j = 0; j < k; ++j) {
      const std::size_t app = rng.WeightedIndex(remaining);
      remaining[app] = 0.0;
      user.preinstalled.push_back(static_cast<AppId>(app));
    }
    std::sort(user.preinstalled.begin(), user.preinstalled.end());
  }
  return Instance::Create(std::move(raw));
}

void ValidateThreePartition(std::span<const int64_t> items, int64_t bound) {
  auto fail = [](const std::string& message) {
    throw MeafError(ErrorCode::kPrecondition, message);
  };
  if (items.empty() || items.size() % 3 != 0) {
    fail(fmt::format("item count {} is not a positive multiple of 3",
                     items.size()));
  }
  if (bound <= 0) fail(fmt::format("bound {} must be positive", bound));
  const int64_t m = static_cast<int64_t>(items.size() / 3);
  for (std::size_t i = 0; i < items.size(); ++i) {
    const int64_t s = items[i];
    if (s <= 0) fail(fmt::format("item {} (index {}) is not positive", s, i));
    if (!(4 * s > bound && 2 * s < bound)) {
      fail(fmt::format(
          "item {} (index {}) violates {}/4 < s < {}/2", s, i, bound, bound));
    }
  }
  const int64_t sum = std::accumulate(items.begin(), items.end(), int64_t{0});
  if (sum != m * bound) {
    fail(fmt::format("items sum to {}, expected m * B = {} * {} = {}", sum, m,
                     bound, m * bound));
  }
}

ReducedInstance ReduceThreePartition(std::span<const int64_t> items,
                                     int64_t bound) {
  ValidateThreePartition(items, bound);
  const int64_t m = static_cast<int64_t>(items.size() / 3);
  RawInstance raw;
  raw.num_apps = static_cast<int>(m);
  raw.capacities = std::vector<int64_t>(m, bound);
  for (std::size_t i = 0; i < items.size(); ++i) {
    raw.users.push_back(UserRecord{fmt::format("u{}", i + 1), items[i], {}});
  }
  return ReducedInstance{Instance::Create(std::move(raw)), 3 * m};
}

}  // namespace meaf
