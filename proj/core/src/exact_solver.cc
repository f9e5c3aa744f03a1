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

#include "meaf/exact_solver.h"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <limits>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "meaf/bipartite_network.h"
#include "meaf/error.h"
#include "meaf/lp_bound.h"
#include "meaf/max_flow.h"

namespace meaf {
namespace {

using Clock = std::chrono::steady_clock;

struct TimeUp {};

// Per-user data for the subtree tests, indexed by UserIndex.
struct UserTables {
  std::vector<int32_t> edge_user;        // per dashed edge
  std::vector<int64_t> edge_capacity;    // per dashed edge
  std::vector<int32_t> last_edge;        // -1 when the user has none
  std::vector<int64_t> solid_capacity;
  std::vector<int32_t> needy_after;      // needy users with a larger index
  int32_t first_blocked = 0;  // smallest start index that skips a needy user
};

UserTables BuildTables(const Instance& inst, const std::vector<Edge>& dashed) {
  UserTables t;
  const int n = inst.num_users();
  t.edge_user.reserve(dashed.size());
  t.edge_capacity.reserve(dashed.size());
  t.last_edge.assign(n, -1);
  t.solid_capacity.assign(n, 0);
  t.needy_after.assign(n, 0);
  for (std::size_t i = 0; i < dashed.size(); ++i) {
    t.edge_user.push_back(dashed[i].user);
    t.edge_capacity.push_back(inst.capacity(dashed[i].app));
    t.last_edge[dashed[i].user] = static_cast<int32_t>(i);
  }
  for (UserIndex u = 0; u < n; ++u) {
    for (AppId a : inst.user(u).preinstalled) {
      t.solid_capacity[u] += inst.capacity(a);
    }
  }
  t.first_blocked = static_cast<int32_t>(dashed.size());
  int32_t needy = 0;
  for (UserIndex u = n - 1; u >= 0; --u) {
    t.needy_after[u] = needy;
    if (t.solid_capacity[u] < inst.demand(u)) {
      ++needy;
      // A needy user always has a dashed edge: with none, every app is
      // solid and total capacity covers its demand.
      t.first_blocked = std::min(t.first_blocked, t.last_edge[u] + 1);
    }
  }
  return t;
}

class Searcher {
 public:
  Searcher(const Instance& inst, const UserTables& tables, bool prune,
           std::optional<Clock::time_point> deadline,
           const std::atomic<bool>* stop)
      : inst_(inst),
        tables_(tables),
        prune_(prune),
        deadline_(deadline),
        stop_(stop),
        oracle_(inst),
        num_edges_(static_cast<int32_t>(oracle_.dashed().size())),
        reach_(tables.solid_capacity) {}

  const std::vector<Edge>& dashed() const { return oracle_.dashed(); }
  const std::vector<int32_t>& chosen() const { return chosen_; }

  // Lexicographically first feasible k-subset whose smallest index is
  // `first`. Leaves it in chosen() on success.
  bool SearchFrom(int32_t first, int32_t k) {
    if (prune_ && first >= tables_.first_blocked) return false;
    return Choose(first, k);
  }

  bool SearchEmpty() {
    chosen_.clear();
    return Leaf(0);
  }

 private:
  bool Choose(int32_t j, int32_t remaining) {
    const int32_t u = tables_.edge_user[j];
    if (prune_ && tables_.needy_after[u] > remaining - 1) return false;
    chosen_.push_back(j);
    reach_[u] += tables_.edge_capacity[j];
    const bool found = Descend(j + 1, remaining - 1);
    if (!found) {
      reach_[u] -= tables_.edge_capacity[j];
      chosen_.pop_back();
    }
    return found;
  }

  bool Descend(int32_t pos, int32_t remaining) {
    if (prune_ && pos > 0 && Finalized(pos - 1)) return false;
    if (remaining == 0) return Leaf(pos);
    for (int32_t j = pos; j <= num_edges_ - remaining; ++j) {
      if (prune_ && j > pos && Finalized(j - 1)) break;
      if (Choose(j, remaining)) return true;
    }
    return false;
  }

  // True when edge `j` is its user's last and the user cannot be served.
  bool Finalized(int32_t j) const {
    const int32_t u = tables_.edge_user[j];
    return tables_.last_edge[u] == j && reach_[u] < inst_.demand(u);
  }

  bool Leaf(int32_t pos) {
    if (prune_) {
      // Users after the last pick are finished too.
      for (int32_t j = pos; j < num_edges_; ++j) {
        if (Finalized(j)) return false;
      }
    }
    if ((++leaves_ & 0xff) == 0) {
      if (stop_ != nullptr && stop_->load(std::memory_order_relaxed)) {
        throw TimeUp{};
      }
      if (deadline_ && Clock::now() >= *deadline_) throw TimeUp{};
    }
    return oracle_.Check(chosen_);
  }

  const Instance& inst_;
  const UserTables& tables_;
  bool prune_;
  std::optional<Clock::time_point> deadline_;
  const std::atomic<bool>* stop_;
  FeasibilityOracle oracle_;
  int32_t num_edges_;
  std::vector<int64_t> reach_;
  std::vector<int32_t> chosen_;
  uint64_t leaves_ = 0;
};

// Outcome of one size-k search.
struct LevelResult {
  bool timed_out = false;
  std::optional<std::vector<int32_t>> subset;
};

LevelResult SearchLevelSequential(const Instance& inst,
                                  const UserTables& tables,
                                  const ExactConfig& config,
                                  std::optional<Clock::time_point> deadline,
                                  int32_t k) {
  LevelResult out;
  Searcher searcher(inst, tables, config.prune, deadline, nullptr);
  try {
    if (k == 0) {
      if (searcher.SearchEmpty()) out.subset.emplace();
      return out;
    }
    const int32_t m = static_cast<int32_t>(searcher.dashed().size());
    for (int32_t first = 0; first <= m - k; ++first) {
      if (searcher.SearchFrom(first, k)) {
        out.subset = searcher.chosen();
        return out;
      }
    }
  } catch (const TimeUp&) {
    out.timed_out = true;
  }
  return out;
}

// Splits the level by the smallest chosen index. A branch is skipped once a
// smaller first index has succeeded, and the smallest successful branch
// wins, so the result equals the sequential one.
LevelResult SearchLevelParallel(const Instance& inst, const UserTables& tables,
                                const ExactConfig& config,
                                std::optional<Clock::time_point> deadline,
                                int32_t k) {
  const int32_t m = static_cast<int32_t>(tables.edge_user.size());
  const int32_t branches = m - k + 1;
  std::atomic<int32_t> next{0};
  std::atomic<int32_t> best{std::numeric_limits<int32_t>::max()};
  std::atomic<bool> timed_out{false};
  std::atomic<bool> stop{false};
  std::mutex mu;
  std::vector<std::optional<std::vector<int32_t>>> found(branches);

  auto work = [&] {
    Searcher searcher(inst, tables, config.prune, deadline, &stop);
    while (true) {
      const int32_t first = next.fetch_add(1);
      if (first >= branches || first > best.load()) return;
      try {
        if (searcher.SearchFrom(first, k)) {
          std::lock_guard<std::mutex> lock(mu);
          found[first] = searcher.chosen();
          int32_t current = best.load();
          while (first < current && !best.compare_exchange_weak(current, first)) {
          }
        }
      } catch (const TimeUp&) {
        timed_out = true;
        stop = true;
        return;
      }
    }
  };
  {
    std::vector<std::jthread> workers;
    const int count = std::min<int>(config.num_threads, branches);
    for (int i = 0; i < count; ++i) workers.emplace_back(work);
  }

  LevelResult out;
  // A timeout may have hit a branch smaller than the best one found, so any
  // timeout makes the level inconclusive.
  if (timed_out.load()) {
    out.timed_out = true;
    return out;
  }
  const int32_t b = best.load();
  if (b != std::numeric_limits<int32_t>::max()) out.subset = std::move(found[b]);
  return out;
}

SolveResult PartialResult(const Instance& inst, SolveStatus status,
                          int64_t lower_bound) {
  BipartiteNetwork net = BuildNetwork(inst, {});
  MaxFlowResult flow = MaxFlow(net.graph);
  SolveResult result;
  result.algorithm = Algorithm::kExact;
  result.allocation = ExtractAllocation(inst, net, flow.arc_flows);
  result.activation_count = 0;
  result.objective = 0;
  result.total_unallocated = TotalUnallocated(result.allocation);
  result.optimal = false;
  result.status = status;
  result.proven_lower_bound = lower_bound;
  return result;
}

}  // namespace

SolveResult ExactSolve(const Instance& inst, const ExactConfig& config) {
  const auto start = Clock::now();
  if (inst.total_demand() > inst.total_capacity()) {
    throw MeafError(ErrorCode::kGloballyInfeasible,
                    fmt::format("total demand {} exceeds total capacity {}",
                                inst.total_demand(), inst.total_capacity()));
  }
  const int64_t num_dashed = inst.num_dashed_edges();
  if (config.max_budget) {
    if (*config.max_budget < 0) {
      throw MeafError(ErrorCode::kInvalidConfig, "max_budget is negative");
    }
    if (*config.max_budget > num_dashed) {
      throw MeafError(
          ErrorCode::kInvalidConfig,
          fmt::format("max_budget {} exceeds the {} dashed edges",
                      *config.max_budget, num_dashed));
    }
  }
  if (config.num_threads < 1) {
    throw MeafError(ErrorCode::kInvalidConfig, "num_threads must be >= 1");
  }
  if (num_dashed > std::numeric_limits<int32_t>::max() / 2) {
    throw MeafError(ErrorCode::kPrecondition,
                    "too many dashed edges for exact search");
  }

  std::optional<Clock::time_point> deadline;
  if (config.time_limit) {
    deadline = start + std::chrono::duration_cast<Clock::duration>(
                           *config.time_limit);
  }

  const std::vector<Edge> dashed = CollectDashedEdges(inst);
  const UserTables tables = BuildTables(inst, dashed);
  const int64_t k_max = config.max_budget.value_or(num_dashed);
  int64_t k_lb = 0;
  if (config.prune) {
    const Rational bound = LpLowerBound(inst).objective;
    k_lb = static_cast<int64_t>(Ceil(bound));
  }

  auto finish = [&](SolveResult result) {
    result.wall_time = Clock::now() - start;
    return result;
  };

  for (int64_t k = k_lb; k <= k_max; ++k) {
    const int32_t k32 = static_cast<int32_t>(k);
    LevelResult level =
        (config.num_threads > 1 && k > 0)
            ? SearchLevelParallel(inst, tables, config, deadline, k32)
            : SearchLevelSequential(inst, tables, config, deadline, k32);
    if (level.subset) {
      std::vector<Edge> active;
      active.reserve(level.subset->size());
      for (int32_t i : *level.subset) active.push_back(dashed[i]);
      BipartiteNetwork net = BuildNetwork(inst, active);
      MaxFlowResult flow = MaxFlow(net.graph);
      SolveResult result;
      result.algorithm = Algorithm::kExact;
      result.allocation = ExtractAllocation(inst, net, flow.arc_flows);
      // The whole chosen set is reported even if the routing found here
      // leaves an activated edge idle.
      result.allocation.activated = std::move(active);
      result.activation_count = k;
      result.objective = k;
      result.total_unallocated = TotalUnallocated(result.allocation);
      result.optimal = true;
      result.status = SolveStatus::kOptimal;
      result.proven_lower_bound = k;
      return finish(std::move(result));
    }
    if (level.timed_out) {
      return finish(PartialResult(inst, SolveStatus::kTimeLimit, k));
    }
  }
  return finish(PartialResult(inst, SolveStatus::kBudgetExceeded,
                              std::max(k_lb, k_max + 1)));
}

}  // namespace meaf
