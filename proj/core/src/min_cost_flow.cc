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

#include "meaf/min_cost_flow.h"

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>
#include <queue>
#include <utility>

#include "blocking_flow.h"
#include "meaf/error.h"

namespace meaf {
namespace {

template <typename Cost>
class PrimalDual {
 public:
  // `cost` is indexed by residual arc: +c on forward, -c on backward arcs.
  PrimalDual(FlowNetwork& net, std::vector<Cost> cost)
      : net_(net),
        cost_(std::move(cost)),
        potential_(static_cast<std::size_t>(net.num_nodes()), Cost(0)) {}

  int64_t Run() {
    net_.ResetFlow();
    int64_t value = 0;
    while (ShortestPaths()) {
      auto admissible = [this](int32_t rarc, NodeId tail) {
        return Reduced(rarc, tail) == 0;
      };
      while (levels_.BuildLevels(net_, admissible)) {
        value += levels_.Augment(net_, admissible);
      }
    }
    return value;
  }

 private:
  Cost Reduced(int32_t rarc, NodeId tail) const {
    return cost_[rarc] + potential_[tail] -
           potential_[net_.ResidualHead(rarc)];
  }

  // Dijkstra on reduced costs; on success folds distances into potentials.
  bool ShortestPaths() {
    const auto n = static_cast<std::size_t>(net_.num_nodes());
    dist_.assign(n, Cost(0));
    reached_.assign(n, false);
    done_.assign(n, false);
    using Entry = std::pair<Cost, NodeId>;
    std::priority_queue<Entry, std::vector<Entry>, std::greater<Entry>> heap;
    reached_[net_.source()] = true;
    heap.emplace(Cost(0), net_.source());
    while (!heap.empty()) {
      auto [d, v] = heap.top();
      heap.pop();
      if (done_[v]) continue;
      done_[v] = true;
      for (int32_t rarc : net_.OutArcs(v)) {
        if (net_.ResidualCapacity(rarc) <= 0) continue;
        const NodeId w = net_.ResidualHead(rarc);
        if (done_[w]) continue;
        Cost nd = d + Reduced(rarc, v);
        if (!reached_[w] || nd < dist_[w]) {
          reached_[w] = true;
          dist_[w] = nd;
          heap.emplace(std::move(nd), w);
        }
      }
    }
    const NodeId t = net_.sink();
    if (!reached_[t]) return false;
    const Cost cap = dist_[t];
    for (std::size_t v = 0; v < n; ++v) {
      potential_[v] += (reached_[v] && dist_[v] < cap) ? dist_[v] : cap;
    }
    return true;
  }

  FlowNetwork& net_;
  std::vector<Cost> cost_;
  std::vector<Cost> potential_;
  std::vector<Cost> dist_;
  std::vector<bool> reached_;
  std::vector<bool> done_;
  internal::LevelGraph levels_;
};

BigInt Gcd(BigInt a, BigInt b) {
  while (b != 0) {
    BigInt r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

}  // namespace

MinCostFlowResult MinCostMaxFlow(FlowNetwork& net, CostArithmetic arithmetic) {
  const int num_arcs = net.num_arcs();

  // Common denominator of all (reduced) unit costs.
  BigInt common = 1;
  for (ArcIndex arc = 0; arc < num_arcs; ++arc) {
    const UnitCost c = net.Cost(arc);
    if (c.num == 0) continue;
    const int64_t den = c.den / std::gcd(c.num, c.den);
    if (common % den != 0) common = common / Gcd(common, den) * den;
  }
  std::vector<BigInt> scaled(static_cast<std::size_t>(num_arcs));
  BigInt max_cost = 0;
  BigInt total_bound = 0;
  for (ArcIndex arc = 0; arc < num_arcs; ++arc) {
    const UnitCost c = net.Cost(arc);
    if (c.num != 0) {
      const int64_t g = std::gcd(c.num, c.den);
      scaled[arc] = BigInt(c.num / g) * (common / (c.den / g));
    }
    max_cost = std::max(max_cost, scaled[arc]);
    total_bound += scaled[arc] * net.Capacity(arc);
  }
  // Potentials and distances stay within 3 * |V| * max_cost in magnitude;
  // the total cost stays within sum(capacity * cost).
  const BigInt bound =
      std::max(BigInt(3) * net.num_nodes() * max_cost, total_bound);
  const bool fits = bound <= (BigInt(1) << 62);

  if (!fits && arithmetic == CostArithmetic::kFixedWidth) {
    throw MeafError(
        ErrorCode::kCostOverflow,
        "scaled arc costs (common denominator " + common.str() +
            ") overflow 64-bit arithmetic; rerun with "
            "CostArithmetic::kBigInteger or kAuto for the big-integer path");
  }

  MinCostFlowResult result;
  if (fits && arithmetic != CostArithmetic::kBigInteger) {
    std::vector<int64_t> cost(2 * static_cast<std::size_t>(num_arcs));
    for (ArcIndex arc = 0; arc < num_arcs; ++arc) {
      cost[2 * arc] = static_cast<int64_t>(scaled[arc]);
      cost[2 * arc + 1] = -cost[2 * arc];
    }
    result.value = PrimalDual<int64_t>(net, std::move(cost)).Run();
  } else {
    std::vector<BigInt> cost(2 * static_cast<std::size_t>(num_arcs));
    for (ArcIndex arc = 0; arc < num_arcs; ++arc) {
      cost[2 * arc] = scaled[arc];
      cost[2 * arc + 1] = -scaled[arc];
    }
    result.value = PrimalDual<BigInt>(net, std::move(cost)).Run();
    result.used_big_integers = true;
  }

  result.arc_flows = net.ArcFlows();
  BigInt total = 0;
  for (ArcIndex arc = 0; arc < num_arcs; ++arc) {
    if (result.arc_flows[arc] != 0) total += scaled[arc] * result.arc_flows[arc];
  }
  result.cost = Rational(total, common);
  return result;
}

}  // namespace meaf
