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

#ifndef MEAF_MODEL_H_
#define MEAF_MODEL_H_

#include <chrono>
#include <compare>
#include <cstdint>
#include <iterator>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "meaf/rational.h"

namespace meaf {

// Position of a user in Instance::users(); stable for the instance lifetime.
using UserIndex = int32_t;
using AppId = int32_t;

// A (user, app) pair. Ordering is lexicographic on (user, app), which is the
// canonical order for every edge list in this library.
struct Edge {
  UserIndex user = 0;
  AppId app = 0;

  friend auto operator<=>(const Edge&, const Edge&) = default;
};

struct UserRecord {
  std::string id;
  int64_t demand = 0;
  // Apps already installed (solid edges). Sorted ascending after validation.
  std::vector<AppId> preinstalled;
};

// Uniform cap expressed as a fraction of total demand.
struct AlphaCapacity {
  double alpha = 0.0;
};

using CapacitySpec = std::variant<std::vector<int64_t>, AlphaCapacity>;

// Unvalidated instance data, as parsed from a file or built in code.
struct RawInstance {
  int num_apps = 0;
  CapacitySpec capacities;
  std::vector<UserRecord> users;
};

// ceil(alpha * total), with alpha taken at its shortest round-trip decimal
// value so that e.g. 0.3 * 10 is exactly 3.
int64_t UniformCapacity(double alpha, int64_t total);

// True when alpha >= 1/num_apps, compared exactly on the decimal value.
bool AlphaMeetsFloor(double alpha, int num_apps);

// A validated, immutable problem instance. Dashed edges are implicit: every
// (user, app) pair that is not preinstalled.
class Instance {
 public:
  // Validates and normalizes `raw`; throws MeafError(kInvalidInstance).
  static Instance Create(RawInstance raw);

  int num_users() const { return static_cast<int>(users_.size()); }
  int num_apps() const { return num_apps_; }
  std::span<const int64_t> capacities() const { return capacities_; }
  int64_t capacity(AppId app) const { return capacities_[app]; }
  const std::vector<UserRecord>& users() const { return users_; }
  const UserRecord& user(UserIndex u) const { return users_[u]; }
  int64_t demand(UserIndex u) const { return users_[u].demand; }
  int64_t total_demand() const { return total_demand_; }
  int64_t total_capacity() const { return total_capacity_; }
  // Set when capacities were given as a uniform fraction of total demand.
  std::optional<double> alpha() const { return alpha_; }

  bool IsSolid(UserIndex u, AppId app) const;
  std::optional<UserIndex> FindUser(std::string_view id) const;

  int64_t num_solid_edges() const { return num_solid_edges_; }
  int64_t num_dashed_edges() const {
    return static_cast<int64_t>(num_users()) * num_apps_ - num_solid_edges_;
  }

  // Same users and installs, uniform capacity ceil(alpha * total_demand).
  Instance WithUniformAlpha(double alpha) const;

 private:
  Instance() = default;

  int num_apps_ = 0;
  std::vector<int64_t> capacities_;
  std::vector<UserRecord> users_;
  std::vector<UserIndex> users_by_id_;
  int64_t total_demand_ = 0;
  int64_t total_capacity_ = 0;
  int64_t num_solid_edges_ = 0;
  std::optional<double> alpha_;
};

// Forward range over the dashed edges (U x A minus solid), in (user, app)
// order, computed on the fly.
class DashedEdgeRange {
 public:
  class Iterator {
   public:
    using value_type = Edge;
    using difference_type = std::ptrdiff_t;
    using iterator_category = std::forward_iterator_tag;

    Iterator() = default;
    Iterator(const Instance* inst, Edge start);

    Edge operator*() const { return current_; }
    Iterator& operator++();
    Iterator operator++(int) {
      Iterator copy = *this;
      ++*this;
      return copy;
    }
    bool operator==(const Iterator& other) const {
      return current_ == other.current_;
    }

   private:
    void SkipSolid();

    const Instance* inst_ = nullptr;
    Edge current_;
    std::size_t solid_pos_ = 0;
  };

  explicit DashedEdgeRange(const Instance& inst) : inst_(&inst) {}

  Iterator begin() const;
  Iterator end() const;

 private:
  const Instance* inst_;
};

DashedEdgeRange DashedEdges(const Instance& inst);
std::vector<Edge> CollectDashedEdges(const Instance& inst);

struct FlowEntry {
  UserIndex user = 0;
  AppId app = 0;
  int64_t amount = 0;

  friend bool operator==(const FlowEntry&, const FlowEntry&) = default;
};

// Sparse integral routing. `flows` holds positive amounts sorted by
// (user, app) with no repeated pair; `activated` is sorted; `unallocated` is
// dense, one entry per user.
struct Allocation {
  std::vector<FlowEntry> flows;
  std::vector<Edge> activated;
  std::vector<int64_t> unallocated;

  // Sorts and merges raw entries (dropping zero amounts) into canonical form.
  void Canonicalize();

  friend bool operator==(const Allocation&, const Allocation&) = default;
};

// Per-app routed transactions.
std::vector<int64_t> AppLoads(const Instance& inst, const Allocation& alloc);

int64_t TotalUnallocated(const Allocation& alloc);

enum class ViolationKind {
  kUnknownUser,
  kUnknownApp,
  kNonPositiveFlow,
  kDemandMismatch,
  kCapacityExceeded,
  kUnactivatedDashedEdge,
  kActivatedSolidEdge,
  kUnallocatedDemand,
};

struct Violation {
  ViolationKind kind;
  UserIndex user = -1;
  AppId app = -1;
  int64_t amount = 0;
  std::string message;
};

struct VerificationReport {
  bool ok = true;
  std::vector<Violation> violations;
};

// Checks conservation, capacity and activation consistency, and that no
// demand is left unallocated. Violations are data, never exceptions.
VerificationReport VerifyAllocation(const Instance& inst,
                                    const Allocation& alloc);

enum class Algorithm {
  kExact,
  kLpBound,
  kCarlAscending,
  kCarlDescending,
  kDtas,
};

std::string_view AlgorithmTag(Algorithm algorithm);
std::string_view AlgorithmVersion(Algorithm algorithm);
std::optional<Algorithm> ParseAlgorithm(std::string_view tag);
std::vector<Algorithm> AllAlgorithms();

enum class SolveStatus {
  kOptimal,            // exact solver proved optimality
  kFeasible,           // heuristic or relaxation finished normally
  kBudgetExceeded,     // exact solver: nothing feasible within max_budget
  kTimeLimit,          // exact solver stopped early
};

std::string_view SolveStatusName(SolveStatus status);

struct SolveResult {
  Allocation allocation;
  int64_t activation_count = 0;
  // |E'| for integral solvers; the fractional relaxation value for kLpBound.
  Rational objective;
  int64_t total_unallocated = 0;
  std::chrono::nanoseconds wall_time{0};
  Algorithm algorithm = Algorithm::kDtas;
  bool optimal = false;
  SolveStatus status = SolveStatus::kFeasible;
  // Exact solver only: every k below this value was proven infeasible.
  std::optional<int64_t> proven_lower_bound;
};

}  // namespace meaf

#endif  // MEAF_MODEL_H_
