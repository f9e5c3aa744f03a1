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

#ifndef MEAF_SRC_BLOCKING_FLOW_H_
#define MEAF_SRC_BLOCKING_FLOW_H_

#include <algorithm>
#include <cstdint>
#include <limits>
#include <vector>

#include "meaf/flow_network.h"

namespace meaf::internal {

// Level graph + blocking flow (Dinic phases) over the residual arcs accepted
// by `usable(rarc, tail)`. Buffers are kept between calls.
class LevelGraph {
 public:
  template <typename Usable>
  bool BuildLevels(const FlowNetwork& net, Usable usable) {
    const int n = net.num_nodes();
    level_.assign(static_cast<std::size_t>(n), -1);
    queue_.clear();
    level_[net.source()] = 0;
    queue_.push_back(net.source());
    for (std::size_t qi = 0; qi < queue_.size(); ++qi) {
      const NodeId v = queue_[qi];
      for (int32_t rarc : net.OutArcs(v)) {
        const NodeId w = net.ResidualHead(rarc);
        if (level_[w] < 0 && net.ResidualCapacity(rarc) > 0 &&
            usable(rarc, v)) {
          level_[w] = level_[v] + 1;
          queue_.push_back(w);
        }
      }
    }
    return level_[net.sink()] >= 0;
  }

  // Saturates every shortest augmenting path in the current level graph.
  template <typename Usable>
  int64_t Augment(FlowNetwork& net, Usable usable) {
    const NodeId s = net.source();
    const NodeId t = net.sink();
    next_.assign(static_cast<std::size_t>(net.num_nodes()), 0);
    path_.clear();
    int64_t total = 0;
    NodeId v = s;
    while (true) {
      if (v == t) {
        int64_t bottleneck = std::numeric_limits<int64_t>::max();
        for (int32_t rarc : path_) {
          bottleneck = std::min(bottleneck, net.ResidualCapacity(rarc));
        }
        std::size_t cut = path_.size();
        for (std::size_t i = 0; i < path_.size(); ++i) {
          net.Push(path_[i], bottleneck);
          if (cut == path_.size() && net.ResidualCapacity(path_[i]) == 0) {
            cut = i;
          }
        }
        total += bottleneck;
        path_.resize(cut);
        v = path_.empty() ? s : net.ResidualHead(path_.back());
        continue;
      }
      const auto& arcs = net.OutArcs(v);
      bool advanced = false;
      for (auto& i = next_[v]; i < arcs.size(); ++i) {
        const int32_t rarc = arcs[i];
        const NodeId w = net.ResidualHead(rarc);
        if (level_[w] == level_[v] + 1 && net.ResidualCapacity(rarc) > 0 &&
            usable(rarc, v)) {
          path_.push_back(rarc);
          v = w;
          advanced = true;
          break;
        }
      }
      if (advanced) continue;
      level_[v] = -1;  // dead end for the rest of this phase
      if (v == s) break;
      const int32_t back = path_.back();
      path_.pop_back();
      v = net.ResidualHead(back ^ 1);
      ++next_[v];
    }
    return total;
  }

 private:
  std::vector<int32_t> level_;
  std::vector<NodeId> queue_;
  std::vector<std::size_t> next_;
  std::vector<int32_t> path_;
};

}  // namespace meaf::internal

#endif  // MEAF_SRC_BLOCKING_FLOW_H_
