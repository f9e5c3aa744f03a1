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

#ifndef MEAF_HEURISTICS_H_
#define MEAF_HEURISTICS_H_

#include <cstdint>
#include <span>
#include <vector>

#include "meaf/model.h"

namespace meaf {

// Bookkeeping shared by the greedy allocators. A user's current app set is
// its preinstalled apps plus the entries of `added` for that user.
struct HeuristicState {
  std::vector<int64_t> remaining_capacity;    // per app
  std::vector<int64_t> transactions_handled;  // per app
  // Apps used as an extra by some user, seeded with every preinstalled app.
  std::vector<bool> extra_apps;
  std::vector<Edge> added;  // (user, app) pairs beyond preinstalls
  int64_t total_remaining = 0;

  static HeuristicState Initial(const Instance& inst);

  // remaining + handled = capacity per app and total_remaining >= 0. Cheap
  // enough to run after every user; extra_apps only grows from Initial().
  bool Consistent(const Instance& inst) const;
};

enum class CarlOrder {
  kAscending,   // lightest demand relative to own capacity first
  kDescending,  // heaviest first
};

struct HeuristicOptions {
  // Verify HeuristicState::Consistent after every user; std::logic_error on
  // failure. On by default in debug builds.
#ifdef NDEBUG
  bool check_state = false;
#else
  bool check_state = true;
#endif
};

// Users sorted by t_u / (sum of capacities of preinstalled apps); users with
// no preinstalled capacity get key +infinity. Stable, so ties keep input
// order. Keys are compared exactly.
std::vector<UserIndex> CarlUserOrder(const Instance& inst, CarlOrder order);

// Users sorted by (t_u, |preinstalled_u|) ascending, ties in input order.
std::vector<UserIndex> DtasUserOrder(const Instance& inst);

// Per user, in order: preinstalled apps, then apps already in extra_apps,
// then never-used apps, each group by remaining capacity descending (ties to
// the lower app id), taking min(remaining demand, remaining capacity).
SolveResult Carl(const Instance& inst, CarlOrder order = CarlOrder::kAscending,
                 const HeuristicOptions& options = {});

// Phase 1 serves every user from its preinstalled apps only. Phase 2 then
// revisits users with leftover demand: first apps in extra_apps, then it
// repeatedly installs the unused app with the most remaining capacity until
// the demand is met or nothing is left.
SolveResult Dtas(const Instance& inst, const HeuristicOptions& options = {});

// Preinstalled apps only, users in `order`, apps by remaining capacity
// descending. No activations.
Allocation AllocatePreinstalledOnly(const Instance& inst,
                                    std::span<const UserIndex> order);

}  // namespace meaf

#endif  // MEAF_HEURISTICS_H_
