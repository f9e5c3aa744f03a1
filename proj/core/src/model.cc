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

#include "meaf/model.h"

#include <algorithm>
#include <array>
#include <charconv>
#include <cmath>
#include <limits>
#include <numeric>
#include <string>
#include <tuple>

#include "fmt/format.h"
#include "meaf/error.h"

namespace meaf {
namespace {

// Exact decimal value of a double's shortest round-trip representation:
// mantissa / 10^exponent.
struct Decimal {
  __int128 mantissa = 0;
  int exponent = 0;
};

__int128 Pow10(int n) {
  __int128 r = 1;
  for (int i = 0; i < n; ++i) r *= 10;
  return r;
}

Decimal ToDecimal(double value) {
  std::array<char, 64> buf{};
  auto [end, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value,
                                 std::chars_format::scientific);
  if (ec != std::errc()) {
    throw MeafError(ErrorCode::kInvalidInstance, "cannot format alpha");
  }
  const std::string text(buf.data(), end);
  const auto e_pos = text.find('e');
  const std::string digits_part = text.substr(0, e_pos);
  const int exp10 = std::stoi(text.substr(e_pos + 1));
  Decimal d;
  int frac_digits = 0;
  bool after_dot = false;
  for (char c : digits_part) {
    if (c == '.') {
      after_dot = true;
      continue;
    }
    d.mantissa = d.mantissa * 10 + (c - '0');
    if (after_dot) ++frac_digits;
  }
  // value = mantissa * 10^(exp10 - frac_digits)
  int shift = exp10 - frac_digits;
  if (shift >= 0) {
    d.mantissa *= Pow10(shift);
    d.exponent = 0;
  } else {
    d.exponent = -shift;
  }
  return d;
}

void CheckAlphaRange(double alpha) {
  if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0) {
    throw MeafError(ErrorCode::kInvalidInstance,
                    fmt::format("alpha {} outside (0, 1]", alpha));
  }
}

}  // namespace

int64_t UniformCapacity(double alpha, int64_t total) {
  CheckAlphaRange(alpha);
  const Decimal d = ToDecimal(alpha);
  if (d.exponent > 36) {
    throw MeafError(ErrorCode::kInvalidInstance,
                    fmt::format("alpha {} has too many decimal digits", alpha));
  }
  const __int128 den = Pow10(d.exponent);
  const __int128 num = d.mantissa * total;
  return static_cast<int64_t>((num + den - 1) / den);
}

bool AlphaMeetsFloor(double alpha, int num_apps) {
  CheckAlphaRange(alpha);
  const Decimal d = ToDecimal(alpha);
  return d.mantissa * num_apps >= Pow10(d.exponent);
}

Instance Instance::Create(RawInstance raw) {
  auto fail = [](const std::string& message) {
    throw MeafError(ErrorCode::kInvalidInstance, message);
  };
  if (raw.num_apps <= 0) fail("num_apps must be positive");

  Instance inst;
  inst.num_apps_ = raw.num_apps;
  inst.users_ = std::move(raw.users);

  int64_t total = 0;
  for (auto& user : inst.users_) {
    if (user.demand <= 0) {
      fail(fmt::format("user '{}' has non-positive demand {}", user.id,
                       user.demand));
    }
    if (total > std::numeric_limits<int64_t>::max() - user.demand) {
      fail("total demand overflows 64-bit integers");
    }
    total += user.demand;
    for (AppId app : user.preinstalled) {
      if (app < 0 || app >= raw.num_apps) {
        fail(fmt::format("app id out of range: user '{}' lists app {} but "
                         "num_apps is {}",
                         user.id, app, raw.num_apps));
      }
    }
    std::sort(user.preinstalled.begin(), user.preinstalled.end());
    auto dup = std::adjacent_find(user.preinstalled.begin(),
                                  user.preinstalled.end());
    if (dup != user.preinstalled.end()) {
      fail(fmt::format("user '{}' lists app {} twice", user.id, *dup));
    }
    inst.num_solid_edges_ += static_cast<int64_t>(user.preinstalled.size());
  }
  inst.total_demand_ = total;

  inst.users_by_id_.resize(inst.users_.size());
  std::iota(inst.users_by_id_.begin(), inst.users_by_id_.end(), 0);
  std::sort(inst.users_by_id_.begin(), inst.users_by_id_.end(),
            [&](UserIndex a, UserIndex b) {
              return inst.users_[a].id < inst.users_[b].id;
            });
  for (std::size_t i = 1; i < inst.users_by_id_.size(); ++i) {
    const auto& prev = inst.users_[inst.users_by_id_[i - 1]].id;
    if (prev == inst.users_[inst.users_by_id_[i]].id) {
      fail(fmt::format("duplicate user id '{}'", prev));
    }
  }

  if (const auto* caps = std::get_if<std::vector<int64_t>>(&raw.capacities)) {
    if (static_cast<int>(caps->size()) != raw.num_apps) {
      fail(fmt::format("capacity list has {} entries but num_apps is {}",
                       caps->size(), raw.num_apps));
    }
    for (std::size_t a = 0; a < caps->size(); ++a) {
      if ((*caps)[a] < 0) {
        fail(fmt::format("capacity of app {} is negative", a));
      }
    }
    inst.capacities_ = *caps;
  } else {
    const double alpha = std::get<AlphaCapacity>(raw.capacities).alpha;
    if (!std::isfinite(alpha) || alpha <= 0.0 || alpha > 1.0) {
      fail(fmt::format("alpha {} outside (0, 1]", alpha));
    }
    if (!AlphaMeetsFloor(alpha, raw.num_apps)) {
      fail(fmt::format("alpha below 1/n: {} < 1/{}", alpha, raw.num_apps));
    }
    inst.alpha_ = alpha;
    inst.capacities_.assign(static_cast<std::size_t>(raw.num_apps),
                            UniformCapacity(alpha, total));
  }
  for (int64_t c : inst.capacities_) {
    if (inst.total_capacity_ > std::numeric_limits<int64_t>::max() - c) {
      fail("total capacity overflows 64-bit integers");
    }
    inst.total_capacity_ += c;
  }
  return inst;
}

bool Instance::IsSolid(UserIndex u, AppId app) const {
  const auto& pre = users_[u].preinstalled;
  return std::binary_search(pre.begin(), pre.end(), app);
}

std::optional<UserIndex> Instance::FindUser(std::string_view id) const {
  auto it = std::lower_bound(
      users_by_id_.begin(), users_by_id_.end(), id,
      [&](UserIndex u, std::string_view key) { return users_[u].id < key; });
  if (it == users_by_id_.end() || users_[*it].id != id) return std::nullopt;
  return *it;
}

Instance Instance::WithUniformAlpha(double alpha) const {
  RawInstance raw;
  raw.num_apps = num_apps_;
  raw.capacities = AlphaCapacity{alpha};
  raw.users = users_;
  return Create(std::move(raw));
}

DashedEdgeRange::Iterator::Iterator(const Instance* inst, Edge start)
    : inst_(inst), current_(start) {
  SkipSolid();
}

void DashedEdgeRange::Iterator::SkipSolid() {
  while (current_.user < inst_->num_users()) {
    const auto& pre = inst_->user(current_.user).preinstalled;
    while (solid_pos_ < pre.size() && pre[solid_pos_] < current_.app) {
      ++solid_pos_;
    }
    if (current_.app >= inst_->num_apps()) {
      ++current_.user;
      current_.app = 0;
      solid_pos_ = 0;
      continue;
    }
    if (solid_pos_ < pre.size() && pre[solid_pos_] == current_.app) {
      ++current_.app;
      continue;
    }
    return;
  }
  current_ = Edge{inst_->num_users(), 0};
}

DashedEdgeRange::Iterator& DashedEdgeRange::Iterator::operator++() {
  ++current_.app;
  SkipSolid();
  return *this;
}

DashedEdgeRange::Iterator DashedEdgeRange::begin() const {
  return Iterator(inst_, Edge{0, 0});
}

DashedEdgeRange::Iterator DashedEdgeRange::end() const {
  return Iterator(inst_, Edge{inst_->num_users(), 0});
}

DashedEdgeRange DashedEdges(const Instance& inst) {
  return DashedEdgeRange(inst);
}

std::vector<Edge> CollectDashedEdges(const Instance& inst) {
  std::vector<Edge> edges;
  edges.reserve(static_cast<std::size_t>(inst.num_dashed_edges()));
  for (Edge e : DashedEdges(inst)) edges.push_back(e);
  return edges;
}

void Allocation::Canonicalize() {
  std::sort(flows.begin(), flows.end(),
            [](const FlowEntry& a, const FlowEntry& b) {
              return std::tie(a.user, a.app) < std::tie(b.user, b.app);
            });
  std::vector<FlowEntry> merged;
  merged.reserve(flows.size());
  for (const FlowEntry& f : flows) {
    if (!merged.empty() && merged.back().user == f.user &&
        merged.back().app == f.app) {
      merged.back().amount += f.amount;
    } else {
      merged.push_back(f);
    }
  }
  std::erase_if(merged, [](const FlowEntry& f) { return f.amount == 0; });
  flows = std::move(merged);
  std::sort(activated.begin(), activated.end());
  activated.erase(std::unique(activated.begin(), activated.end()),
                  activated.end());
}

std::vector<int64_t> AppLoads(const Instance& inst, const Allocation& alloc) {
  std::vector<int64_t> loads(static_cast<std::size_t>(inst.num_apps()), 0);
  for (const FlowEntry& f : alloc.flows) {
    if (f.app >= 0 && f.app < inst.num_apps()) loads[f.app] += f.amount;
  }
  return loads;
}

int64_t TotalUnallocated(const Allocation& alloc) {
  return std::accumulate(alloc.unallocated.begin(), alloc.unallocated.end(),
                         int64_t{0});
}

VerificationReport VerifyAllocation(const Instance& inst,
                                    const Allocation& alloc) {
  VerificationReport report;
  auto add = [&](ViolationKind kind, UserIndex u, AppId a, int64_t amount,
                 std::string message) {
    report.ok = false;
    report.violations.push_back({kind, u, a, amount, std::move(message)});
  };
  auto user_name = [&](UserIndex u) {
    return (u >= 0 && u < inst.num_users()) ? inst.user(u).id
                                            : fmt::format("#{}", u);
  };

  std::vector<int64_t> routed(static_cast<std::size_t>(inst.num_users()), 0);
  std::vector<int64_t> loads(static_cast<std::size_t>(inst.num_apps()), 0);

  for (const FlowEntry& f : alloc.flows) {
    if (f.user < 0 || f.user >= inst.num_users()) {
      add(ViolationKind::kUnknownUser, f.user, f.app, f.amount,
          fmt::format("flow references unknown user {}", user_name(f.user)));
      continue;
    }
    if (f.app < 0 || f.app >= inst.num_apps()) {
      add(ViolationKind::kUnknownApp, f.user, f.app, f.amount,
          fmt::format("flow references unknown app {}", f.app));
      continue;
    }
    if (f.amount <= 0) {
      add(ViolationKind::kNonPositiveFlow, f.user, f.app, f.amount,
          fmt::format("non-positive flow {} on ({},{})", f.amount,
                      user_name(f.user), f.app));
      continue;
    }
    routed[f.user] += f.amount;
    loads[f.app] += f.amount;
    if (!inst.IsSolid(f.user, f.app) &&
        !std::binary_search(alloc.activated.begin(), alloc.activated.end(),
                            Edge{f.user, f.app})) {
      add(ViolationKind::kUnactivatedDashedEdge, f.user, f.app, f.amount,
          fmt::format("unactivated dashed edge ({},{})", user_name(f.user),
                      f.app));
    }
  }

  for (const Edge& e : alloc.activated) {
    if (e.user < 0 || e.user >= inst.num_users()) {
      add(ViolationKind::kUnknownUser, e.user, e.app, 0,
          fmt::format("activation references unknown user {}",
                      user_name(e.user)));
    } else if (e.app < 0 || e.app >= inst.num_apps()) {
      add(ViolationKind::kUnknownApp, e.user, e.app, 0,
          fmt::format("activation references unknown app {}", e.app));
    } else if (inst.IsSolid(e.user, e.app)) {
      add(ViolationKind::kActivatedSolidEdge, e.user, e.app, 0,
          fmt::format("activated edge ({},{}) is already solid",
                      user_name(e.user), e.app));
    }
  }

  const bool dense_ok =
      alloc.unallocated.size() == static_cast<std::size_t>(inst.num_users());
  for (UserIndex u = 0; u < inst.num_users(); ++u) {
    const int64_t left = dense_ok ? alloc.unallocated[u] : 0;
    if (routed[u] + left != inst.demand(u) || left < 0) {
      add(ViolationKind::kDemandMismatch, u, -1,
          routed[u] + left - inst.demand(u),
          fmt::format("user {} routes {} + unallocated {} != demand {}",
                      user_name(u), routed[u], left, inst.demand(u)));
    } else if (left > 0) {
      add(ViolationKind::kUnallocatedDemand, u, -1, left,
          fmt::format("user {} has {} unallocated transactions",
                      user_name(u), left));
    }
  }

  for (AppId a = 0; a < inst.num_apps(); ++a) {
    if (loads[a] > inst.capacity(a)) {
      add(ViolationKind::kCapacityExceeded, -1, a, loads[a] - inst.capacity(a),
          fmt::format("capacity exceeded at app {} by {}", a,
                      loads[a] - inst.capacity(a)));
    }
  }
  return report;
}

std::string_view AlgorithmTag(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kExact:
      return "exact";
    case Algorithm::kLpBound:
      return "lp";
    case Algorithm::kCarlAscending:
      return "carl-asc";
    case Algorithm::kCarlDescending:
      return "carl-desc";
    case Algorithm::kDtas:
      return "dtas";
  }
  return "unknown";
}

std::string_view AlgorithmVersion(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kExact:
      return "exact-id/1";
    case Algorithm::kLpBound:
      return "lp-mcmf/1";
    case Algorithm::kCarlAscending:
    case Algorithm::kCarlDescending:
      return "carl/1";
    case Algorithm::kDtas:
      return "dtas/1";
  }
  return "unknown";
}

std::optional<Algorithm> ParseAlgorithm(std::string_view tag) {
  for (Algorithm a : AllAlgorithms()) {
    if (AlgorithmTag(a) == tag) return a;
  }
  return std::nullopt;
}

std::vector<Algorithm> AllAlgorithms() {
  return {Algorithm::kExact, Algorithm::kLpBound, Algorithm::kCarlAscending,
          Algorithm::kCarlDescending, Algorithm::kDtas};
}

std::string_view SolveStatusName(SolveStatus status) {
  switch (status) {
    case SolveStatus::kOptimal:
      return "optimal";
    case SolveStatus::kFeasible:
      return "feasible";
    case SolveStatus::kBudgetExceeded:
      return "budget_exceeded";
    case SolveStatus::kTimeLimit:
      return "time_limit";
  }
  return "unknown";
}

}  // namespace meaf
