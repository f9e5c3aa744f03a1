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

#ifndef MEAF_HARNESS_H_
#define MEAF_HARNESS_H_

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "meaf/model.h"
#include "meaf/rational.h"
#include "meaf/solve.h"
#include "meaf/synth.h"

namespace meaf {

struct BenchInstance {
  std::string name;
  Instance instance;
  std::optional<uint64_t> seed;  // set for generated instances
};

struct BenchGuards {
  int64_t max_exact_dashed_edges = 30;
  int64_t max_lp_arcs = 10'000'000;
  bool force_exact = false;
};

struct BenchOptions {
  BenchGuards guards;
  SolveOptions solve;
  int threads = 1;
};

inline constexpr std::string_view kSkippedScale = "skipped (scale)";

struct BenchRecord {
  std::string instance;
  int64_t users = 0;
  int64_t transactions = 0;
  int apps = 0;
  std::optional<double> alpha;
  std::optional<uint64_t> seed;
  Algorithm algorithm = Algorithm::kDtas;
  // Solver status name, kSkippedScale, or "error: ..." for refused inputs.
  std::string status;
  bool ran = false;
  int64_t activations = 0;
  Rational objective;
  int64_t unallocated = 0;
  std::optional<Rational> inverse_gini;
  bool verified = false;
  std::chrono::nanoseconds wall_time{0};
};

// Arcs of the flow network with every dashed edge present.
int64_t FullNetworkArcs(const Instance& inst);

// Empty when the algorithm may run on `inst`, else the skip reason.
std::optional<std::string> GuardViolation(const Instance& inst,
                                          Algorithm algorithm,
                                          const BenchGuards& guards);

// One record per (instance, algorithm), instance-major. Cells run on a pool
// of `options.threads` workers; the output order does not depend on it.
// Every allocation is re-verified before it is recorded.
std::vector<BenchRecord> RunComparison(std::span<const BenchInstance> instances,
                                       std::span<const Algorithm> algorithms,
                                       const BenchOptions& options);

// True when every cell that ran verified.
bool AllVerified(std::span<const BenchRecord> records);

// The same instance at each alpha, one algorithm. Records are named after
// `name`.
std::vector<BenchRecord> SweepCapacity(const Instance& inst,
                                       std::span<const double> alphas,
                                       Algorithm algorithm,
                                       const BenchOptions& options,
                                       const std::string& name = "instance");

// Calls fn(i) for i in [0, count) on up to `threads` workers.
void ParallelFor(std::size_t count, int threads,
                 const std::function<void(std::size_t)>& fn);

}  // namespace meaf

#endif  // MEAF_HARNESS_H_
