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

#include "meaf/heuristics.h"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <stdexcept>
#include <vector>

#include <fmt/format.h>

namespace meaf {
namespace {

using Clock = std::chrono::steady_clock;

class Allocator {
 public:
  explicit Allocator(const Instance& inst)
      : inst_(inst),
        state_(HeuristicState::Initial(inst)),
        need_(inst.num_users()),
        is_pre_(inst.num_apps(), false) {
    for (UserIndex u = 0; u < inst.num_users(); ++u) need_[u] = inst.demand(u);
  }

  HeuristicState& state() { return state_; }
  int64_t need(UserIndex u) const { return need_[u]; }

  void MarkPreinstalled(UserIndex u, bool value) {
    for (AppId a : inst_.user(u).preinstalled) is_pre_[a] = value;
  }

  // Layer of the user's own apps.
  void ServePreinstalled(UserIndex u) {
    apps_.assign(inst_.user(u).preinstalled.begin(),
                 inst_.user(u).preinstalled.end());
    ServeInOrder(u, /*activation=*/false);
  }

  // Apps in extra_apps the user does not have. Requires MarkPreinstalled.
  void ServeExtras(UserIndex u) {
    apps_.clear();
    for (AppId a = 0; a < inst_.num_apps(); ++a) {
      if (state_.extra_apps[a] && !is_pre_[a]) apps_.push_back(a);
    }
    ServeInOrder(u, /*activation=*/true);
  }

  // Apps outside extra_apps, in one pass sorted up front.
  void ServeNewApps(UserIndex u) {
    apps_.clear();
    for (AppId a = 0; a < inst_.num_apps(); ++a) {
      if (!state_.extra_apps[a]) apps_.push_back(a);
    }
    ServeInOrder(u, /*activation=*/true);
  }

  // Installs the unused app with the most remaining capacity, one at a time.
  void ServeBestNewApps(UserIndex u) {
    while (need_[u] > 0) {
      AppId best = -1;
      for (AppId a = 0; a < inst_.num_apps(); ++a) {
        if (state_.extra_apps[a] || state_.remaining_capacity[a] <= 0) continue;
        if (best < 0 ||
            state_.remaining_capacity[a] > state_.remaining_capacity[best]) {
          best = a;
        }
      }
      if (best < 0) return;
      Pour(u, best, /*activation=*/true);
    }
  }

  void Check(const HeuristicOptions& options) const {
    if (options.check_state && !state_.Consistent(inst_)) {
      throw std::logic_error("heuristic state invariant violated");
    }
  }

  SolveResult Finish(Algorithm algorithm, Clock::time_point start) {
    SolveResult result;
    result.algorithm = algorithm;
    Allocation& alloc = result.allocation;
    alloc.flows = SortFlows();
    std::sort(state_.added.begin(), state_.added.end());
    alloc.activated = state_.added;
    alloc.unallocated = need_;
    result.activation_count = static_cast<int64_t>(alloc.activated.size());
    result.objective = result.activation_count;
    result.total_unallocated = state_.total_remaining;
    result.status = SolveStatus::kFeasible;
    result.wall_time = Clock::now() - start;
    return result;
  }

  Allocation TakeAllocation() {
    Allocation alloc;
    alloc.flows = SortFlows();
    alloc.unallocated = need_;
    return alloc;
  }

 private:
  void ServeInOrder(UserIndex u, bool activation) {
    const std::vector<int64_t>& rc = state_.remaining_capacity;
    std::sort(apps_.begin(), apps_.end(), [&rc](AppId a, AppId b) {
      return rc[a] != rc[b] ? rc[a] > rc[b] : a < b;
    });
    for (AppId a : apps_) {
      if (need_[u] == 0) break;
      Pour(u, a, activation);
    }
  }

  void Pour(UserIndex u, AppId a, bool activation) {
    const int64_t amount = std::min(need_[u], state_.remaining_capacity[a]);
    if (amount <= 0) return;
    need_[u] -= amount;
    state_.remaining_capacity[a] -= amount;
    state_.transactions_handled[a] += amount;
    state_.total_remaining -= amount;
    flows_.push_back(FlowEntry{u, a, amount});
    if (activation) {
      state_.added.push_back(Edge{u, a});
      state_.extra_apps[a] = true;
    }
  }

  // Counting sort by user, then by app within a user. Each (user, app) pair
  // is poured at most once, so no merging is needed.
  std::vector<FlowEntry> SortFlows() {
    const int n = inst_.num_users();
    std::vector<int64_t> start(n + 1, 0);
    for (const FlowEntry& f : flows_) ++start[f.user + 1];
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<FlowEntry> sorted(flows_.size());
    std::vector<int64_t> pos(start.begin(), start.end() - 1);
    for (const FlowEntry& f : flows_) sorted[pos[f.user]++] = f;
    for (int u = 0; u < n; ++u) {
      if (start[u + 1] - start[u] > 1) {
        std::sort(sorted.begin() + start[u], sorted.begin() + start[u + 1],
                  [](const FlowEntry& a, const FlowEntry& b) {
                    return a.app < b.app;
                  });
      }
    }
    flows_.clear();
    return sorted;
  }

  const Instance& inst_;
  HeuristicState state_;
  std::vector<int64_t> need_;
  std::vector<bool> is_pre_;
  std::vector<AppId> apps_;
  std::vector<FlowEntry> flows_;
};

}  // namespace

HeuristicState HeuristicState::Initial(const Instance& inst) {
  HeuristicState state;
  state.remaining_capacity.assign(inst.capacities().begin(),
                                  inst.capacities().end());
  state.transactions_handled.assign(inst.num_apps(), 0);
  state.extra_apps.assign(inst.num_apps(), false);
  for (const UserRecord& user : inst.users()) {
    for (AppId a : user.preinstalled) state.extra_apps[a] = true;
  }
  state.total_remaining = inst.total_demand();
  return state;
}

bool HeuristicState::Consistent(const Instance& inst) const {
  if (total_remaining < 0) return false;
  for (AppId a = 0; a < inst.num_apps(); ++a) {
    if (remaining_capacity[a] < 0 ||
        remaining_capacity[a] + transactions_handled[a] != inst.capacity(a)) {
      return false;
    }
  }
  return true;
}

std::vector<UserIndex> CarlUserOrder(const Instance& inst, CarlOrder order) {
  const int n = inst.num_users();
  std::vector<int64_t> own(n, 0);
  for (UserIndex u = 0; u < n; ++u) {
    for (AppId a : inst.user(u).preinstalled) own[u] += inst.capacity(a);
  }
  // t_u / own_u < t_v / own_v, with own = 0 meaning +infinity.
  auto less = [&](UserIndex u, UserIndex v) {
    if (own[u] == 0) return false;
    if (own[v] == 0) return true;
    return static_cast<__int128>(inst.demand(u)) * own[v] <
           static_cast<__int128>(inst.demand(v)) * own[u];
  };
  std::vector<UserIndex> users(n);
  std::iota(users.begin(), users.end(), 0);
  if (order == CarlOrder::kAscending) {
    std::stable_sort(users.begin(), users.end(), less);
  } else {
    std::stable_sort(users.begin(), users.end(),
                     [&](UserIndex u, UserIndex v) { return less(v, u); });
  }
  return users;
}

std::vector<UserIndex> DtasUserOrder(const Instance& inst) {
  std::vector<UserIndex> users(inst.num_users());
  std::iota(users.begin(), users.end(), 0);
  std::stable_sort(users.begin(), users.end(), [&](UserIndex u, UserIndex v) {
    if (inst.demand(u) != inst.demand(v)) return inst.demand(u) < inst.demand(v);
    return inst.user(u).preinstalled.size() < inst.user(v).preinstalled.size();
  });
  return users;
}

SolveResult Carl(const Instance& inst, CarlOrder order,
                 const HeuristicOptions& options) {
  const auto start = Clock::now();
  Allocator alloc(inst);
  for (UserIndex u : CarlUserOrder(inst, order)) {
    alloc.ServePreinstalled(u);
    if (alloc.need(u) > 0) {
      alloc.MarkPreinstalled(u, true);
      alloc.ServeExtras(u);
      alloc.MarkPreinstalled(u, false);
    }
    if (alloc.need(u) > 0) alloc.ServeNewApps(u);
    alloc.Check(options);
  }
  return alloc.Finish(order == CarlOrder::kAscending
                          ? Algorithm::kCarlAscending
                          : Algorithm::kCarlDescending,
                      start);
}

SolveResult Dtas(const Instance& inst, const HeuristicOptions& options) {
  const auto start = Clock::now();
  Allocator alloc(inst);
  const std::vector<UserIndex> users = DtasUserOrder(inst);
  for (UserIndex u : users) {
    alloc.ServePreinstalled(u);
    alloc.Check(options);
  }
  for (UserIndex u : users) {
    if (alloc.need(u) == 0) continue;
    alloc.MarkPreinstalled(u, true);
    alloc.ServeExtras(u);
    alloc.MarkPreinstalled(u, false);
    alloc.ServeBestNewApps(u);
    alloc.Check(options);
  }
  return alloc.Finish(Algorithm::kDtas, start);
}

Allocation AllocatePreinstalledOnly(const Instance& inst,
                                    std::span<const UserIndex> order) {
  Allocator alloc(inst);
  for (UserIndex u : order) alloc.ServePreinstalled(u);
  return alloc.TakeAllocation();
}

}  // namespace meaf
