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

#include "meaf/bipartite_network.h"

#include <algorithm>

#include "fmt/format.h"
#include "meaf/error.h"

namespace meaf {
namespace {

// Shared builder: solid edges always, plus every edge of `extra` (sorted)
// with capacity t_u, or capacity 0 when `extra_closed` is set.
BipartiteNetwork Build(const Instance& inst, std::span<const Edge> extra,
                       ArcCosts costs, bool extra_closed) {
  const int n_users = inst.num_users();
  const int n_apps = inst.num_apps();
  BipartiteNetwork net{FlowNetwork(2 + n_users + n_apps,
                                   BipartiteNetwork::kSource,
                                   BipartiteNetwork::kSink),
                       n_users, n_apps, {}, 0};
  for (UserIndex u = 0; u < n_users; ++u) {
    net.graph.AddArc(BipartiteNetwork::kSource, net.UserNode(u),
                     inst.demand(u));
  }
  net.first_pair_arc = net.graph.num_arcs();
  std::size_t next_extra = 0;
  for (UserIndex u = 0; u < n_users; ++u) {
    const auto& pre = inst.user(u).preinstalled;
    std::size_t next_pre = 0;
    for (AppId a = 0; a < n_apps; ++a) {
      const bool solid = next_pre < pre.size() && pre[next_pre] == a;
      if (solid) ++next_pre;
      const bool in_extra = next_extra < extra.size() &&
                            extra[next_extra] == Edge{u, a};
      if (in_extra) ++next_extra;
      if (!solid && !in_extra) continue;
      UnitCost cost;
      if (!solid && costs == ArcCosts::kActivationRelaxation) {
        cost = UnitCost{1, inst.demand(u)};
      }
      const int64_t cap = (!solid && extra_closed) ? 0 : inst.demand(u);
      net.graph.AddArc(net.UserNode(u), net.AppNode(a), cap, cost);
      net.pair_edges.push_back({u, a});
    }
  }
  for (AppId a = 0; a < n_apps; ++a) {
    net.graph.AddArc(net.AppNode(a), BipartiteNetwork::kSink, inst.capacity(a));
  }
  return net;
}

}  // namespace

std::vector<std::string> BipartiteNetwork::NodeNames(
    const Instance& inst) const {
  std::vector<std::string> names;
  names.reserve(static_cast<std::size_t>(graph.num_nodes()));
  names.push_back("s");
  names.push_back("t");
  for (const auto& user : inst.users()) names.push_back("user " + user.id);
  for (AppId a = 0; a < num_apps; ++a) names.push_back(fmt::format("app {}", a));
  return names;
}

BipartiteNetwork BuildNetwork(const Instance& inst,
                              std::span<const Edge> active, ArcCosts costs) {
  std::vector<Edge> sorted(active.begin(), active.end());
  std::sort(sorted.begin(), sorted.end());
  sorted.erase(std::unique(sorted.begin(), sorted.end()), sorted.end());
  for (const Edge& e : sorted) {
    if (e.user < 0 || e.user >= inst.num_users() || e.app < 0 ||
        e.app >= inst.num_apps()) {
      throw MeafError(ErrorCode::kPrecondition,
                      fmt::format("active edge ({},{}) is out of range", e.user,
                                  e.app));
    }
    if (inst.IsSolid(e.user, e.app)) {
      throw MeafError(ErrorCode::kPrecondition,
                      fmt::format("active edge ({},{}) is not a dashed edge",
                                  inst.user(e.user).id, e.app));
    }
  }
  return Build(inst, sorted, costs, /*extra_closed=*/false);
}

bool Feasible(const Instance& inst, std::span<const Edge> active) {
  if (inst.total_demand() > inst.total_capacity()) return false;
  BipartiteNetwork net = BuildNetwork(inst, active);
  MaxFlowSolver solver;
  return solver.Solve(net.graph) == inst.total_demand();
}

Allocation ExtractAllocation(const Instance& inst, const BipartiteNetwork& net,
                             std::span<const int64_t> arc_flows) {
  Allocation alloc;
  alloc.unallocated.resize(static_cast<std::size_t>(inst.num_users()));
  for (UserIndex u = 0; u < inst.num_users(); ++u) {
    alloc.unallocated[u] = inst.demand(u) - arc_flows[net.SourceArc(u)];
  }
  for (std::size_t i = 0; i < net.pair_edges.size(); ++i) {
    const int64_t f = arc_flows[net.first_pair_arc + static_cast<ArcIndex>(i)];
    if (f <= 0) continue;
    const Edge e = net.pair_edges[i];
    alloc.flows.push_back({e.user, e.app, f});
    if (!inst.IsSolid(e.user, e.app)) alloc.activated.push_back(e);
  }
  return alloc;
}

FeasibilityOracle::FeasibilityOracle(const Instance& inst)
    : inst_(&inst),
      dashed_(CollectDashedEdges(inst)),
      net_(Build(inst, dashed_, ArcCosts::kNone, /*extra_closed=*/true)),
      total_demand_(inst.total_demand()) {
  dashed_arc_.reserve(dashed_.size());
  std::size_t next = 0;
  for (std::size_t i = 0; i < net_.pair_edges.size(); ++i) {
    if (next < dashed_.size() && net_.pair_edges[i] == dashed_[next]) {
      dashed_arc_.push_back(net_.first_pair_arc + static_cast<ArcIndex>(i));
      ++next;
    }
  }
}

int64_t FeasibilityOracle::RoutableDemand(std::span<const int32_t> chosen) {
  for (int32_t i : open_) net_.graph.SetCapacity(dashed_arc_[i], 0);
  open_.assign(chosen.begin(), chosen.end());
  for (int32_t i : open_) {
    net_.graph.SetCapacity(dashed_arc_[i], inst_->demand(dashed_[i].user));
  }
  return solver_.Solve(net_.graph);
}

}  // namespace meaf
