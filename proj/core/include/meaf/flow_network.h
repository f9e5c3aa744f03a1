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

#ifndef MEAF_FLOW_NETWORK_H_
#define MEAF_FLOW_NETWORK_H_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

namespace meaf {

using NodeId = int32_t;
// Index of a forward arc, in insertion order. Each forward arc has a paired
// residual arc managed internally.
using ArcIndex = int32_t;

// Non-negative per-unit cost num/den.
struct UnitCost {
  int64_t num = 0;
  int64_t den = 1;
};

// Directed network with integral capacities and residual bookkeeping.
// Arcs keep their insertion order everywhere (adjacency lists included), so
// every algorithm run on the same build sequence is bit-reproducible.
class FlowNetwork {
 public:
  FlowNetwork(int num_nodes, NodeId source, NodeId sink);

  // Throws MeafError(kPrecondition) on negative capacity, bad endpoints or a
  // non-positive cost denominator.
  ArcIndex AddArc(NodeId tail, NodeId head, int64_t capacity,
                  UnitCost cost = {});

  int num_nodes() const { return static_cast<int>(out_.size()); }
  int num_arcs() const { return static_cast<int>(capacity_.size()); }
  NodeId source() const { return source_; }
  NodeId sink() const { return sink_; }

  NodeId Tail(ArcIndex arc) const { return head_[2 * arc + 1]; }
  NodeId Head(ArcIndex arc) const { return head_[2 * arc]; }
  int64_t Capacity(ArcIndex arc) const { return capacity_[arc]; }
  int64_t Flow(ArcIndex arc) const { return residual_[2 * arc + 1]; }
  UnitCost Cost(ArcIndex arc) const { return cost_[arc]; }

  // Changes the capacity of an arc and clears the flow on that arc only; the
  // network is a valid flow again after ResetFlow().
  void SetCapacity(ArcIndex arc, int64_t capacity);
  // Clears all flow, restoring residual capacities to the arc capacities.
  void ResetFlow();

  std::vector<int64_t> ArcFlows() const;

  // Graphviz rendering; arcs labelled "flow/capacity" plus cost when nonzero.
  std::string ToDot(std::span<const std::string> node_names = {}) const;

  // Residual-graph access for the flow algorithms. Residual arc ids are
  // 2 * arc (forward) and 2 * arc + 1 (backward).
  const std::vector<int32_t>& OutArcs(NodeId node) const { return out_[node]; }
  NodeId ResidualHead(int32_t rarc) const { return head_[rarc]; }
  int64_t ResidualCapacity(int32_t rarc) const { return residual_[rarc]; }
  void Push(int32_t rarc, int64_t amount) {
    residual_[rarc] -= amount;
    residual_[rarc ^ 1] += amount;
  }

 private:
  NodeId source_;
  NodeId sink_;
  std::vector<std::vector<int32_t>> out_;
  std::vector<NodeId> head_;       // per residual arc
  std::vector<int64_t> residual_;  // per residual arc
  std::vector<int64_t> capacity_;  // per forward arc
  std::vector<UnitCost> cost_;     // per forward arc
};

// Flow leaving minus flow entering each node. Zero everywhere except source
// and sink for a valid flow.
std::vector<int64_t> NodeExcess(const FlowNetwork& net,
                                std::span<const int64_t> arc_flows);

}  // namespace meaf

#endif  // MEAF_FLOW_NETWORK_H_
