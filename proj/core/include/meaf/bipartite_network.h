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

#ifndef MEAF_BIPARTITE_NETWORK_H_
#define MEAF_BIPARTITE_NETWORK_H_

#include <span>
#include <string>
#include <vector>

#include "meaf/flow_network.h"
#include "meaf/max_flow.h"
#include "meaf/model.h"

namespace meaf {

enum class ArcCosts {
  kNone,
  // Unit cost 1/t_u on every dashed u->a arc, zero elsewhere.
  kActivationRelaxation,
};

// The s -> users -> apps -> t network of an instance. Node 0 is s, node 1 is
// t, then one node per user and one per app. Arcs are inserted as: s->u for
// users ascending, u->a for (user, app) ascending, a->t for apps ascending.
struct BipartiteNetwork {
  FlowNetwork graph;
  int num_users = 0;
  int num_apps = 0;
  std::vector<Edge> pair_edges;  // the u->a arcs, in insertion order
  ArcIndex first_pair_arc = 0;   // arc index of pair_edges[0]

  static constexpr NodeId kSource = 0;
  static constexpr NodeId kSink = 1;
  NodeId UserNode(UserIndex u) const { return 2 + u; }
  NodeId AppNode(AppId a) const { return 2 + num_users + a; }
  ArcIndex SourceArc(UserIndex u) const { return u; }
  ArcIndex SinkArc(AppId a) const {
    return first_pair_arc + static_cast<ArcIndex>(pair_edges.size()) + a;
  }

  std::vector<std::string> NodeNames(const Instance& inst) const;
};

// u->a arcs exist exactly for solid edges and `active`. Throws
// MeafError(kPrecondition) if `active` holds a solid or out-of-range pair.
BipartiteNetwork BuildNetwork(const Instance& inst,
                              std::span<const Edge> active,
                              ArcCosts costs = ArcCosts::kNone);

// True iff every demand routes through solid edges plus `active`.
bool Feasible(const Instance& inst, std::span<const Edge> active);

// Reads the routing off per-arc flows. `activated` becomes the set of dashed
// edges carrying positive flow.
Allocation ExtractAllocation(const Instance& inst, const BipartiteNetwork& net,
                             std::span<const int64_t> arc_flows);

// Feasibility checks over subsets of the dashed edges of one instance. The
// network with every dashed arc is built once; a check toggles capacities.
class FeasibilityOracle {
 public:
  explicit FeasibilityOracle(const Instance& inst);

  // The dashed edges in (user, app) order; Check() takes indices into this.
  const std::vector<Edge>& dashed() const { return dashed_; }

  // Max-flow value with only the solid edges and dashed()[i], i in `chosen`.
  int64_t RoutableDemand(std::span<const int32_t> chosen);
  bool Check(std::span<const int32_t> chosen) {
    return RoutableDemand(chosen) == total_demand_;
  }

 private:
  const Instance* inst_;
  std::vector<Edge> dashed_;
  std::vector<ArcIndex> dashed_arc_;
  std::vector<int32_t> open_;
  BipartiteNetwork net_;
  MaxFlowSolver solver_;
  int64_t total_demand_;
};

}  // namespace meaf

#endif  // MEAF_BIPARTITE_NETWORK_H_
