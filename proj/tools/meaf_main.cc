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

// Command-line front end for the meaf library.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <string>

#if __has_include("CLI11.hpp")
#include "CLI11.hpp"
#else
#include "CLI/CLI.hpp"
#endif
#include "commands.h"
#include "meaf/error.h"

namespace {

using meaf::cli::GlobalOptions;

int ExitCodeFor(meaf::ErrorCode code) {
  switch (code) {
    case meaf::ErrorCode::kGloballyInfeasible:
      return meaf::cli::kExitInfeasible;
    case meaf::ErrorCode::kUndefinedMetric:
      return meaf::cli::kExitVerificationFailed;
    default:
      return meaf::cli::kExitUsage;
  }
}

// --threads wins; MEAF_THREADS is the fallback.
bool ResolveThreads(const CLI::Option* flag, GlobalOptions& g) {
  if (flag->count() > 0) return g.threads >= 1;
  const char* env = std::getenv("MEAF_THREADS");
  if (env == nullptr || *env == '\0') return true;
  try {
    std::size_t used = 0;
    const int value = std::stoi(env, &used);
    if (used != std::string(env).size() || value < 1) return false;
    g.threads = value;
    return true;
  } catch (const std::exception&) {
    return false;
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimum edge activation flow toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_version_flag("--version", MEAF_VERSION_STRING);

  GlobalOptions g;
  std::string format = "text";
  app.add_option("--seed", g.seed, "Seed for generated instances");
  app.add_option("--out", g.out, "Output file (generate, solve) or directory");
  app.add_option("--format", format, "Stdout format")
      ->check(CLI::IsMember({"text", "json", "csv"}));
  CLI::Option* threads_flag =
      app.add_option("--threads", g.threads, "Worker threads (env MEAF_THREADS)");
  app.add_flag("-v,--verbose", g.verbose, "Progress on stderr");

  meaf::cli::GenerateArgs gen;
  CLI::App* generate = app.add_subcommand("generate", "Generate a synthetic instance");
  generate->add_option("config", gen.config_path, "Generator config JSON")
      ->required();
  generate->add_option("--users", gen.users);
  generate->add_option("--transactions", gen.transactions);
  generate->add_option("--apps", gen.apps);
  generate->add_option("--alpha", gen.alpha);
  generate->add_option("--skew", gen.skew);

  meaf::cli::SolveArgs solve_args;
  CLI::App* solve = app.add_subcommand("solve", "Solve one instance");
  solve->add_option("instance", solve_args.instance_path)->required();
  solve->add_option("--algo", solve_args.algorithm,
                    "exact, lp, carl-asc, carl-desc or dtas");
  solve->add_option("--budget", solve_args.budget, "Exact: max activations");
  solve->add_option("--time-limit", solve_args.time_limit_s, "Exact: seconds");
  solve->add_flag("--force", solve_args.force, "Run exact on large instances");
  solve->add_flag("--no-prune", solve_args.no_prune, "Exact: plain enumeration");
  solve->add_option("--arithmetic", solve_args.arithmetic, "LP cost arithmetic")
      ->check(CLI::IsMember({"auto", "fixed", "big"}));
  solve->add_option("--dot", solve_args.dot_path, "Write the routing as DOT");

  meaf::cli::BenchArgs bench_args;
  CLI::App* bench = app.add_subcommand("bench", "Compare algorithms");
  bench->add_option("config", bench_args.config_path, "Bench config JSON");
  bench->add_option("--instances", bench_args.instances)->delimiter(',');
  bench->add_option("--gen-config", bench_args.gen_config);
  bench->add_option("--seeds", bench_args.seeds)->delimiter(',');
  bench->add_option("--algos", bench_args.algorithms)->delimiter(',');
  bench->add_flag("--force", bench_args.force);

  meaf::cli::SweepArgs sweep_args;
  CLI::App* sweep = app.add_subcommand("sweep", "Sweep uniform capacity alpha");
  sweep->add_option("instance", sweep_args.instance_path)->required();
  sweep->add_option("--alphas", sweep_args.alphas)->delimiter(',');
  sweep->add_option("--algo", sweep_args.algorithm,
                    "carl-asc, carl-desc, dtas, lp, exact or tail-drop");
  sweep->add_flag("--force", sweep_args.force);

  meaf::cli::Reduce3pArgs reduce_args;
  CLI::App* reduce = app.add_subcommand("reduce3p", "Decide 3-Partition");
  reduce->add_option("--items", reduce_args.items)->delimiter(',')->required();
  reduce->add_option("--B", reduce_args.bound, "Target sum per triple");

  meaf::cli::ExportMilpArgs milp_args;
  CLI::App* milp = app.add_subcommand("export-milp", "Write the MILP model");
  milp->add_option("instance", milp_args.instance_path)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? meaf::cli::kExitOk : meaf::cli::kExitUsage;
  }
  if (!ResolveThreads(threads_flag, g)) {
    std::cerr << "error: thread count must be a positive integer\n";
    return meaf::cli::kExitUsage;
  }
  g.format = format == "json"  ? meaf::cli::OutputFormat::kJson
             : format == "csv" ? meaf::cli::OutputFormat::kCsv
                               : meaf::cli::OutputFormat::kText;

  try {
    if (generate->parsed()) return meaf::cli::RunGenerate(g, gen);
    if (solve->parsed()) return meaf::cli::RunSolve(g, solve_args);
    if (bench->parsed()) return meaf::cli::RunBench(g, bench_args);
    if (sweep->parsed()) return meaf::cli::RunSweep(g, sweep_args);
    if (reduce->parsed()) return meaf::cli::RunReduce3p(g, reduce_args);
    return meaf::cli::RunExportMilp(g, milp_args);
  } catch (const meaf::MeafError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return ExitCodeFor(e.code());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return meaf::cli::kExitUsage;
  }
}
