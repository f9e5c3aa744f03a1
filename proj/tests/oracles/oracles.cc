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

#include "oracles.h"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <limits>
#include <vector>

namespace meaf::oracle {
namespace {

// Per-user bitmask of reachable apps.
std::vector<uint32_t> ReachMasks(const Instance& inst,
                                 std::span<const Edge> active) {
  std::vector<uint32_t> mask(inst.num_users(), 0);
  for (UserIndex u = 0; u < inst.num_users(); ++u) {
    for (AppId a : inst.user(u).preinstalled) mask[u] |= 1u << a;
  }
  for (const Edge& e : active) mask[e.user] |= 1u << e.app;
  return mask;
}

bool HallFromMasks(const Instance& inst, const std::vector<uint32_t>& mask) {
  const int n = inst.num_users();
  const uint32_t apps = 1u << inst.num_apps();
  std::vector<int64_t> cap_of(apps, 0);
  for (uint32_t s = 1; s < apps; ++s) {
    const int low = std::countr_zero(s);
    cap_of[s] = cap_of[s & (s - 1)] + inst.capacity(low);
  }
  const uint32_t subsets = 1u << n;
  std::vector<int64_t> demand(subsets, 0);
  std::vector<uint32_t> reach(subsets, 0);
  for (uint32_t x = 1; x < subsets; ++x) {
    const int low = std::countr_zero(x);
    const uint32_t rest = x & (x - 1);
    demand[x] = demand[rest] + inst.demand(low);
    reach[x] = reach[rest] | mask[low];
    if (demand[x] > cap_of[reach[x]]) return false;
  }
  return true;
}

}  // namespace

bool HallFeasible(const Instance& inst, std::span<const Edge> active) {
  return HallFromMasks(inst, ReachMasks(inst, active));
}

std::optional<int> PowerSetMinActivations(const Instance& inst) {
  const int d = static_cast<int>(inst.num_dashed_edges());
  for (int k = 0; k <= d; ++k) {
    if (LexFirstFeasible(inst, k)) return k;
  }
  return std::nullopt;
}

std::optional<std::vector<Edge>> LexFirstFeasible(const Instance& inst,
                                                  int k) {
  const std::vector<Edge> dashed = CollectDashedEdges(inst);
  const int d = static_cast<int>(dashed.size());
  if (k > d) return std::nullopt;
  std::vector<int> idx(k);
  for (int i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::vector<Edge> subset;
    for (int i : idx) subset.push_back(dashed[i]);
    if (HallFeasible(inst, subset)) return subset;
    int i = k - 1;
    while (i >= 0 && idx[i] == d - k + i) --i;
    if (i < 0) return std::nullopt;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

int64_t MinCutValue(const FlowNetwork& net) {
  const int n = net.num_nodes();
  std::vector<int> inner;
  for (int v = 0; v < n; ++v) {
    if (v != net.source() && v != net.sink()) inner.push_back(v);
  }
  int64_t best = std::numeric_limits<int64_t>::max();
  std::vector<bool> side(n);
  for (uint32_t s = 0; s < (1u << inner.size()); ++s) {
    std::fill(side.begin(), side.end(), false);
    side[net.source()] = true;
    for (std::size_t i = 0; i < inner.size(); ++i) {
      if (s >> i & 1) side[inner[i]] = true;
    }
    int64_t cut = 0;
    for (ArcIndex a = 0; a < net.num_arcs(); ++a) {
      if (side[net.Tail(a)] && !side[net.Head(a)]) cut += net.Capacity(a);
    }
    best = std::min(best, cut);
  }
  return best;
}

FlowOptimum EnumerateMinCostMaxFlow(const FlowNetwork& net) {
  const int arcs = net.num_arcs();
  std::vector<int64_t> flow(arcs, 0);
  FlowOptimum best;
  bool have = false;
  std::function<void(int)> rec = [&](int i) {
    if (i == arcs) {
      std::vector<int64_t> excess(net.num_nodes(), 0);
      for (ArcIndex a = 0; a < arcs; ++a) {
        excess[net.Tail(a)] += flow[a];
        excess[net.Head(a)] -= flow[a];
      }
      for (int v = 0; v < net.num_nodes(); ++v) {
        if (v != net.source() && v != net.sink() && excess[v] != 0) return;
      }
      const int64_t value = excess[net.source()];
      Rational cost = 0;
      for (ArcIndex a = 0; a < arcs; ++a) {
        cost += Rational(net.Cost(a).num, net.Cost(a).den) * flow[a];
      }
      if (!have || value > best.value ||
          (value == best.value && cost < best.cost)) {
        best = {value, cost};
        have = true;
      }
      return;
    }
    for (int64_t f = 0; f <= net.Capacity(i); ++f) {
      flow[i] = f;
      rec(i + 1);
    }
    flow[i] = 0;
  };
  rec(0);
  return best;
}

std::optional<Rational> EnumerateRelaxation(const Instance& inst) {
  const int n = inst.num_users();
  const int m = inst.num_apps();
  std::vector<int64_t> load(m, 0);
  std::optional<Rational> best;
  // Distribute user u's demand over apps a.., with `left` still to place.
  std::function<void(int, int, int64_t, Rational)> rec =
      [&](int u, int a, int64_t left, Rational cost) {
        if (u == n) {
          if (!best || cost < *best) best = cost;
          return;
        }
        if (a == m - 1) {
          if (load[a] + left > inst.capacity(a)) return;
          load[a] += left;
          Rational c = cost;
          if (!inst.IsSolid(u, a)) c += Rational(left, inst.demand(u));
          const int next = u + 1;
          rec(next, 0, next < n ? inst.demand(next) : 0, c);
          load[a] -= left;
          return;
        }
        for (int64_t f = 0; f <= left; ++f) {
          if (load[a] + f > inst.capacity(a)) break;
          load[a] += f;
          Rational c = cost;
          if (!inst.IsSolid(u, a)) c += Rational(f, inst.demand(u));
          rec(u, a + 1, left - f, c);
          load[a] -= f;
        }
      };
  if (n == 0) return Rational(0);
  rec(0, 0, inst.demand(0), Rational(0));
  return best;
}

bool BruteForceThreePartition(std::span<const int64_t> items, int64_t bound) {
  const int n = static_cast<int>(items.size());
  if (n % 3 != 0) return false;
  std::vector<bool> used(n, false);
  std::function<bool()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < n; ++i) {
      if (!used[i]) {
        first = i;
        break;
      }
    }
    if (first < 0) return true;
    used[first] = true;
    for (int j = first + 1; j < n; ++j) {
      if (used[j]) continue;
      used[j] = true;
      for (int k = j + 1; k < n; ++k) {
        if (used[k] || items[first] + items[j] + items[k] != bound) continue;
        used[k] = true;
        if (rec()) return true;
        used[k] = false;
      }
      used[j] = false;
    }
    used[first] = false;
    return false;
  };
  return rec();
}

Rational GiniDoubleSum(std::span<const int64_t> loads) {
  const int64_t n = static_cast<int64_t>(loads.size());
  BigInt diff = 0;
  BigInt total = 0;
  for (int64_t x : loads) {
    total += x;
    for (int64_t y : loads) diff += x > y ? x - y : y - x;
  }
  // mean = total / n, so 2 n^2 mean = 2 n total.
  return 1 - Rational(diff, 2 * n * total);
}

}  // namespace meaf::oracle
