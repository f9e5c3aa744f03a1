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

#ifndef MEAF_TOOLS_COMMANDS_H_
#define MEAF_TOOLS_COMMANDS_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace meaf::cli {

// Process exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitInfeasible = 3;
inline constexpr int kExitBudgetExceeded = 4;

enum class OutputFormat { kText, kJson, kCsv };

struct GlobalOptions {
  std::optional<uint64_t> seed;
  std::optional<std::string> out;
  OutputFormat format = OutputFormat::kText;
  int threads = 1;
  bool verbose = false;
};

struct GenerateArgs {
  std::string config_path;
  std::optional<int64_t> users;
  std::optional<int64_t> transactions;
  std::optional<int> apps;
  std::optional<double> alpha;
  std::optional<double> skew;
};

struct SolveArgs {
  std::string instance_path;
  std::string algorithm = "dtas";
  std::optional<int64_t> budget;
  std::optional<double> time_limit_s;
  bool force = false;
  bool no_prune = false;
  std::string arithmetic = "auto";
  std::optional<std::string> dot_path;
};

struct BenchArgs {
  std::optional<std::string> config_path;
  std::vector<std::string> instances;
  std::optional<std::string> gen_config;
  std::vector<uint64_t> seeds;
  std::vector<std::string> algorithms;
  bool force = false;
};

struct SweepArgs {
  std::string instance_path;
  std::vector<double> alphas;
  std::string algorithm = "dtas";
  bool force = false;
};

struct Reduce3pArgs {
  std::vector<int64_t> items;
  std::optional<int64_t> bound;
};

struct ExportMilpArgs {
  std::string instance_path;
};

int RunGenerate(const GlobalOptions& g, const GenerateArgs& args);
int RunSolve(const GlobalOptions& g, const SolveArgs& args);
int RunBench(const GlobalOptions& g, const BenchArgs& args);
int RunSweep(const GlobalOptions& g, const SweepArgs& args);
int RunReduce3p(const GlobalOptions& g, const Reduce3pArgs& args);
int RunExportMilp(const GlobalOptions& g, const ExportMilpArgs& args);

}  // namespace meaf::cli

#endif  // MEAF_TOOLS_COMMANDS_H_
