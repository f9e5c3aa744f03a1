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

#include "meaf/flow_network.h"

#include <sstream>

#include "fmt/format.h"
#include "meaf/error.h"

namespace meaf {

FlowNetwork::FlowNetwork(int num_nodes, NodeId source, NodeId sink)
    : source_(source), sink_(sink), out_(static_cast<std::size_t>(num_nodes)) {
  if (source < 0 || source >= num_nodes || sink < 0 || sink >= num_nodes ||
      source == sink) {
    throw MeafError(ErrorCode::kPrecondition,
                    "source and sink must be distinct nodes of the network");
  }
}

ArcIndex FlowNetwork::AddArc(NodeId tail, NodeId head, int64_t capacity,
                             UnitCost cost) {
  if (tail < 0 || tail >= num_nodes() || head < 0 || head >= num_nodes()) {
    throw MeafError(ErrorCode::kPrecondition,
                    fmt::format("arc {}->{} has an endpoint outside the network",
                                tail, head));
  }
  if (capacity < 0) {
    throw MeafError(ErrorCode::kPrecondition,
                    fmt::format("arc {}->{} has negative capacity", tail, head));
  }
  if (cost.den <= 0 || cost.num < 0) {
    throw MeafError(ErrorCode::kPrecondition,
                    fmt::format("arc {}->{} has an invalid cost", tail, head));
  }
  const auto arc = static_cast<ArcIndex>(capacity_.size());
  head_.push_back(head);
  residual_.push_back(capacity);
  head_.push_back(tail);
  residual_.push_back(0);
  out_[tail].push_back(2 * arc);
  out_[head].push_back(2 * arc + 1);
  capacity_.push_back(capacity);
  cost_.push_back(cost);
  return arc;
}

void FlowNetwork::SetCapacity(ArcIndex arc, int64_t capacity) {
  if (capacity < 0) {
    throw MeafError(ErrorCode::kPrecondition, "negative capacity");
  }
  capacity_[arc] = capacity;
  residual_[2 * static_cast<std::size_t>(arc)] = capacity;
  residual_[2 * static_cast<std::size_t>(arc) + 1] = 0;
}

void FlowNetwork::ResetFlow() {
  for (std::size_t arc = 0; arc < capacity_.size(); ++arc) {
    residual_[2 * arc] = capacity_[arc];
    residual_[2 * arc + 1] = 0;
  }
}

std::vector<int64_t> FlowNetwork::ArcFlows() const {
  std::vector<int64_t> flows(capacity_.size());
  for (std::size_t arc = 0; arc < capacity_.size(); ++arc) {
    flows[arc] = residual_[2 * arc + 1];
  }
  return flows;
}

std::string FlowNetwork::ToDot(std::span<const std::string> node_names) const {
  auto name = [&](NodeId v) {
    if (static_cast<std::size_t>(v) < node_names.size()) return node_names[v];
    return fmt::format("n{}", v);
  };
  std::ostringstream out;
  out << "digraph flow {\n  rankdir=LR;\n";
  for (NodeId v = 0; v < num_nodes(); ++v) {
    out << fmt::format("  {} [label=\"{}\"];\n", v, name(v));
  }
  for (ArcIndex arc = 0; arc < num_arcs(); ++arc) {
    std::string label = fmt::format("{}/{}", Flow(arc), Capacity(arc));
    if (cost_[arc].num != 0) {
      label += fmt::format(" @{}/{}", cost_[arc].num, cost_[arc].den);
    }
    out << fmt::format("  {} -> {} [label=\"{}\"];\n", Tail(arc), Head(arc),
                       label);
  }
  out << "}\n";
  return out.str();
}

std::vector<int64_t> NodeExcess(const FlowNetwork& net,
                                std::span<const int64_t> arc_flows) {
  std::vector<int64_t> excess(static_cast<std::size_t>(net.num_nodes()), 0);
  for (ArcIndex arc = 0; arc < net.num_arcs(); ++arc) {
    excess[net.Tail(arc)] += arc_flows[arc];
    excess[net.Head(arc)] -= arc_flows[arc];
  }
  return excess;
}

}  // namespace meaf
