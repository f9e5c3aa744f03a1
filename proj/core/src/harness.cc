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

#include "meaf/harness.h"

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

#include <fmt/format.h>

#include "meaf/error.h"
#include "meaf/metrics.h"

namespace meaf {

int64_t FullNetworkArcs(const Instance& inst) {
  return static_cast<int64_t>(inst.num_users()) * (inst.num_apps() + 1) +
         inst.num_apps();
}

std::optional<std::string> GuardViolation(const Instance& inst,
                                          Algorithm algorithm,
                                          const BenchGuards& guards) {
  if (algorithm == Algorithm::kExact && !guards.force_exact &&
      inst.num_dashed_edges() > guards.max_exact_dashed_edges) {
    return fmt::format("{} dashed edges exceed the exact limit of {}",
                       inst.num_dashed_edges(), guards.max_exact_dashed_edges);
  }
  if (algorithm == Algorithm::kLpBound &&
      FullNetworkArcs(inst) > guards.max_lp_arcs) {
    return fmt::format("{} arcs exceed the relaxation limit of {}",
                       FullNetworkArcs(inst), guards.max_lp_arcs);
  }
  return std::nullopt;
}

void ParallelFor(std::size_t count, int threads,
                 const std::function<void(std::size_t)>& fn) {
  const std::size_t workers =
      std::min<std::size_t>(std::max(threads, 1), count);
  if (workers <= 1) {
    for (std::size_t i = 0; i < count; ++i) fn(i);
    return;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::atomic<bool> failed{false};
  {
    std::vector<std::jthread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back([&, w] {
        while (!failed.load()) {
          const std::size_t i = next.fetch_add(1);
          if (i >= count) return;
          try {
            fn(i);
          } catch (...) {
            if (!failed.exchange(true)) failure = std::current_exception();
            return;
          }
        }
      });
    }
  }
  if (failure) std::rethrow_exception(failure);
}

namespace {

BenchRecord RunCell(const Instance& inst, const std::string& name,
                    std::optional<uint64_t> seed, Algorithm algorithm,
                    const BenchOptions& options) {
  BenchRecord record;
  record.instance = name;
  record.users = inst.num_users();
  record.transactions = inst.total_demand();
  record.apps = inst.num_apps();
  record.alpha = inst.alpha();
  record.seed = seed;
  record.algorithm = algorithm;
  if (GuardViolation(inst, algorithm, options.guards)) {
    record.status = std::string(kSkippedScale);
    return record;
  }
  const auto start = std::chrono::steady_clock::now();
  SolveResult result;
  try {
    result = Solve(inst, algorithm, options.solve);
  } catch (const MeafError& e) {
    if (e.code() != ErrorCode::kGloballyInfeasible) throw;
    record.status = fmt::format("error: {}", ErrorCodeName(e.code()));
    record.ran = true;
    record.wall_time = std::max(std::chrono::nanoseconds(1),
                                std::chrono::steady_clock::now() - start);
    return record;
  }
  record.ran = true;
  record.status = std::string(SolveStatusName(result.status));
  record.activations = result.activation_count;
  record.objective = result.objective;
  record.unallocated = result.total_unallocated;
  record.verified = VerifyAllocation(inst, result.allocation).ok;
  const std::vector<int64_t> loads = AppLoads(inst, result.allocation);
  if (std::any_of(loads.begin(), loads.end(), [](int64_t x) { return x > 0; })) {
    record.inverse_gini = InverseGiniExact(loads);
  }
  record.wall_time = std::max(std::chrono::nanoseconds(1), result.wall_time);
  return record;
}

}  // namespace

std::vector<BenchRecord> RunComparison(std::span<const BenchInstance> instances,
                                       std::span<const Algorithm> algorithms,
                                       const BenchOptions& options) {
  const std::size_t cols = algorithms.size();
  std::vector<BenchRecord> records(instances.size() * cols);
  ParallelFor(records.size(), options.threads, [&](std::size_t cell) {
    const BenchInstance& bi = instances[cell / cols];
    records[cell] =
        RunCell(bi.instance, bi.name, bi.seed, algorithms[cell % cols], options);
  });
  return records;
}

bool AllVerified(std::span<const BenchRecord> records) {
  return std::all_of(records.begin(), records.end(), [](const BenchRecord& r) {
    return r.status == kSkippedScale || (r.ran && r.verified);
  });
}

std::vector<BenchRecord> SweepCapacity(const Instance& inst,
                                       std::span<const double> alphas,
                                       Algorithm algorithm,
                                       const BenchOptions& options,
                                       const std::string& name) {
  std::vector<Instance> scaled;
  scaled.reserve(alphas.size());
  // Built up front so a bad alpha fails before any solver runs.
  for (double alpha : alphas) scaled.push_back(inst.WithUniformAlpha(alpha));
  std::vector<BenchRecord> records(alphas.size());
  ParallelFor(records.size(), options.threads, [&](std::size_t i) {
    records[i] = RunCell(scaled[i], name, std::nullopt, algorithm, options);
  });
  return records;
}

}  // namespace meaf
