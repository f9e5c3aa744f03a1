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

#include "commands.h"

#include <chrono>
#include <filesystem>
#include <iostream>
#include <numeric>
#include <string>
#include <vector>

#include <fmt/format.h>
#include <nlohmann/json.hpp>

#include "meaf/bipartite_network.h"
#include "meaf/error.h"
#include "meaf/harness.h"
#include "meaf/metrics.h"
#include "meaf/milp_export.h"
#include "meaf/model_json.h"
#include "meaf/report.h"
#include "meaf/solve.h"
#include "meaf/synth.h"
#include "meaf/three_partition.h"

namespace meaf::cli {
namespace {

namespace fs = std::filesystem;
using nlohmann::json;

[[noreturn]] void ConfigError(const std::string& message) {
  throw MeafError(ErrorCode::kInvalidConfig, message);
}

void Progress(const GlobalOptions& g, const std::string& line) {
  if (g.verbose) std::cerr << line << '\n';
}

double Seconds(std::chrono::nanoseconds ns) {
  return static_cast<double>(ns.count()) * 1e-9;
}

Algorithm RequireAlgorithm(const std::string& tag) {
  std::optional<Algorithm> algorithm = ParseAlgorithm(tag);
  if (!algorithm) {
    ConfigError(fmt::format(
        "unknown algorithm '{}' (expected exact, lp, carl-asc, carl-desc or "
        "dtas)",
        tag));
  }
  return *algorithm;
}

CostArithmetic ParseArithmetic(const std::string& name) {
  if (name == "auto") return CostArithmetic::kAuto;
  if (name == "fixed") return CostArithmetic::kFixedWidth;
  if (name == "big") return CostArithmetic::kBigInteger;
  ConfigError(fmt::format("unknown arithmetic '{}' (auto, fixed or big)", name));
}

json ReadJsonFile(const fs::path& path) {
  return ParseJsonText(ReadTextFile(path), path.string());
}

void RequireOutDir(const GlobalOptions& g, const char* command) {
  if (!g.out) ConfigError(fmt::format("{} needs --out DIR", command));
}

// Routing of `alloc` drawn on the network of solid plus activated edges.
std::string AllocationDot(const Instance& inst, const Allocation& alloc) {
  BipartiteNetwork net = BuildNetwork(inst, alloc.activated);
  for (const FlowEntry& f : alloc.flows) {
    const auto it = std::lower_bound(net.pair_edges.begin(),
                                     net.pair_edges.end(), Edge{f.user, f.app});
    const ArcIndex pair =
        net.first_pair_arc + static_cast<ArcIndex>(it - net.pair_edges.begin());
    net.graph.Push(2 * net.SourceArc(f.user), f.amount);
    net.graph.Push(2 * pair, f.amount);
    net.graph.Push(2 * net.SinkArc(f.app), f.amount);
  }
  return net.graph.ToDot(net.NodeNames(inst));
}

std::string SolveSummary(const SolveResult& r, const ExactConfig& exact) {
  const std::string tag(AlgorithmTag(r.algorithm));
  const double secs = Seconds(r.wall_time);
  switch (r.status) {
    case SolveStatus::kBudgetExceeded:
      return fmt::format(
          "{}: no feasible activation set within budget {} (lower bound {}), "
          "{} unallocated on solid edges, {:.3f} s",
          tag, exact.max_budget.value_or(0), r.proven_lower_bound.value_or(0),
          r.total_unallocated, secs);
    case SolveStatus::kTimeLimit:
      return fmt::format(
          "{}: time limit reached, optimum is at least {}, {} unallocated on "
          "solid edges, {:.3f} s",
          tag, r.proven_lower_bound.value_or(0), r.total_unallocated, secs);
    default:
      break;
  }
  if (r.algorithm == Algorithm::kLpBound) {
    return fmt::format(
        "{}: bound {} ≈ {}, {} dashed edges carry flow, {} unallocated, "
        "{:.3f} s",
        tag, ToMixedString(r.objective), ToDecimalString(r.objective, 3),
        r.activation_count, r.total_unallocated, secs);
  }
  return fmt::format("{}: {} activation{}, {} unallocated, {}, {:.3f} s", tag,
                     r.activation_count, r.activation_count == 1 ? "" : "s",
                     r.total_unallocated, SolveStatusName(r.status), secs);
}

std::string SolveCsv(const SolveResult& r) {
  return fmt::format(
      "algorithm,status,activations,objective,objective_decimal,unallocated,"
      "wall_time_s\n{},{},{},{},{},{},{:.9f}\n",
      AlgorithmTag(r.algorithm), SolveStatusName(r.status), r.activation_count,
      ToFractionString(r.objective), ToDecimalString(r.objective, 6),
      r.total_unallocated, Seconds(r.wall_time));
}

std::string InstanceName(const fs::path& path) {
  return path.stem().string();
}

}  // namespace

int RunGenerate(const GlobalOptions& g, const GenerateArgs& args) {
  GenConfig config = GenConfigFromJson(ReadJsonFile(args.config_path));
  if (args.users) config.num_users = *args.users;
  if (args.transactions) config.num_transactions = *args.transactions;
  if (args.apps) config.num_apps = *args.apps;
  if (args.alpha) config.alpha = *args.alpha;
  if (args.skew) config.skew_exponent = *args.skew;
  if (g.seed) config.seed = *g.seed;
  Progress(g, fmt::format("generating {} users", config.num_users));
  const Instance inst = Generate(config);
  const std::string text = WriteInstanceString(inst);
  if (!g.out) {
    std::cout << text;
    return kExitOk;
  }
  WriteTextFile(*g.out, text);
  switch (g.format) {
    case OutputFormat::kJson:
      std::cout << CanonicalDump({{"users", inst.num_users()},
                                  {"transactions", inst.total_demand()},
                                  {"apps", inst.num_apps()},
                                  {"seed", config.seed},
                                  {"path", *g.out}});
      break;
    case OutputFormat::kCsv:
      std::cout << fmt::format("users,transactions,apps,seed,path\n{},{},{},{},{}\n",
                               inst.num_users(), inst.total_demand(),
                               inst.num_apps(), config.seed, *g.out);
      break;
    case OutputFormat::kText:
      std::cout << fmt::format(
          "generated {} users, {} transactions, {} apps (seed {}) -> {}\n",
          inst.num_users(), inst.total_demand(), inst.num_apps(), config.seed,
          *g.out);
      break;
  }
  return kExitOk;
}

int RunSolve(const GlobalOptions& g, const SolveArgs& args) {
  const Algorithm algorithm = RequireAlgorithm(args.algorithm);
  if (algorithm != Algorithm::kExact &&
      (args.budget || args.time_limit_s || args.no_prune)) {
    ConfigError("--budget, --time-limit and --no-prune apply to --algo exact");
  }
  if (args.time_limit_s && !(*args.time_limit_s > 0)) {
    ConfigError("--time-limit must be positive");
  }
  const Instance inst = ReadInstanceFile(args.instance_path);
  BenchGuards guards;
  guards.force_exact = args.force;
  guards.max_lp_arcs = std::numeric_limits<int64_t>::max();
  if (std::optional<std::string> why = GuardViolation(inst, algorithm, guards)) {
    ConfigError(*why + "; pass --force to run anyway");
  }

  SolveOptions options;
  options.exact.max_budget = args.budget;
  if (args.time_limit_s) {
    options.exact.time_limit = std::chrono::duration<double>(*args.time_limit_s);
  }
  options.exact.prune = !args.no_prune;
  options.exact.num_threads = g.threads;
  options.lp_arithmetic = ParseArithmetic(args.arithmetic);
  Progress(g, fmt::format("solving {} with {}", args.instance_path,
                          AlgorithmTag(algorithm)));
  const SolveResult result = Solve(inst, algorithm, options);

  const json result_json = SolveResultToJson(inst, result, true);
  if (g.out) WriteTextFile(*g.out, CanonicalDump(result_json));
  if (args.dot_path) WriteTextFile(*args.dot_path, AllocationDot(inst, result.allocation));
  switch (g.format) {
    case OutputFormat::kJson:
      std::cout << CanonicalDump(result_json);
      break;
    case OutputFormat::kCsv:
      std::cout << SolveCsv(result);
      break;
    case OutputFormat::kText:
      std::cout << SolveSummary(result, options.exact) << '\n';
      break;
  }
  // Heuristics still report their partial routing; the exit code flags it.
  if (inst.total_demand() > inst.total_capacity()) {
    std::cerr << fmt::format(
        "error: globally_infeasible: total demand {} exceeds total capacity "
        "{}\n",
        inst.total_demand(), inst.total_capacity());
    return kExitInfeasible;
  }
  return result.status == SolveStatus::kBudgetExceeded ? kExitBudgetExceeded
                                                       : kExitOk;
}

int RunBench(const GlobalOptions& g, const BenchArgs& args) {
  RequireOutDir(g, "bench");
  json file_config = json::object();
  fs::path base = fs::current_path();
  if (args.config_path) {
    file_config = ReadJsonFile(*args.config_path);
    if (!file_config.is_object()) ConfigError("bench config must be an object");
    base = fs::path(*args.config_path).parent_path();
  }
  for (const auto& [key, value] : file_config.items()) {
    if (key != "instances" && key != "generate" && key != "seeds" &&
        key != "algorithms" && key != "force_exact" &&
        key != "max_exact_dashed_edges" && key != "max_lp_arcs") {
      ConfigError(fmt::format("unknown bench config key '{}'", key));
    }
  }

  std::vector<std::string> instance_paths;
  std::vector<uint64_t> seeds;
  std::vector<std::string> algorithm_tags;
  std::optional<json> generate;
  BenchOptions options;
  try {
    for (const std::string& p :
         file_config.value("instances", std::vector<std::string>{})) {
      instance_paths.push_back((base / p).lexically_normal().string());
    }
    seeds = file_config.value("seeds", std::vector<uint64_t>{});
    algorithm_tags =
        file_config.value("algorithms", std::vector<std::string>{});
    if (file_config.contains("generate")) generate = file_config["generate"];
    options.guards.force_exact = file_config.value("force_exact", false);
    options.guards.max_exact_dashed_edges = file_config.value(
        "max_exact_dashed_edges", options.guards.max_exact_dashed_edges);
    options.guards.max_lp_arcs =
        file_config.value("max_lp_arcs", options.guards.max_lp_arcs);
  } catch (const json::exception& e) {
    ConfigError(fmt::format("bad bench config: {}", e.what()));
  }
  instance_paths.insert(instance_paths.end(), args.instances.begin(),
                        args.instances.end());
  if (args.gen_config) generate = ReadJsonFile(*args.gen_config);
  if (!args.seeds.empty()) seeds = args.seeds;
  if (g.seed) seeds = {*g.seed};
  if (!args.algorithms.empty()) algorithm_tags = args.algorithms;
  if (args.force) options.guards.force_exact = true;
  if (algorithm_tags.empty()) {
    for (Algorithm a : AllAlgorithms()) algorithm_tags.emplace_back(AlgorithmTag(a));
  }
  std::vector<Algorithm> algorithms;
  for (const std::string& tag : algorithm_tags) {
    algorithms.push_back(RequireAlgorithm(tag));
  }
  options.threads = g.threads;
  options.solve.exact.num_threads = 1;

  std::vector<BenchInstance> instances;
  for (const std::string& path : instance_paths) {
    Progress(g, "loading " + path);
    instances.push_back({InstanceName(path), ReadInstanceFile(path), std::nullopt});
  }
  if (generate) {
    GenConfig base_config = GenConfigFromJson(*generate);
    if (seeds.empty()) seeds = {base_config.seed};
    for (uint64_t seed : seeds) {
      GenConfig config = base_config;
      config.seed = seed;
      Progress(g, fmt::format("generating seed {}", seed));
      instances.push_back({fmt::format("gen-s{}", seed), Generate(config), seed});
    }
  }
  if (instances.empty()) {
    ConfigError("bench needs at least one instance (--instances or a generator)");
  }

  Progress(g, fmt::format("running {} cells on {} thread(s)",
                          instances.size() * algorithms.size(), g.threads));
  const std::vector<BenchRecord> records =
      RunComparison(instances, algorithms, options);

  json effective = {{"instances", instance_paths},
                    {"generate", generate ? *generate : json(nullptr)},
                    {"seeds", seeds},
                    {"algorithms", algorithm_tags},
                    {"force_exact", options.guards.force_exact},
                    {"max_exact_dashed_edges", options.guards.max_exact_dashed_edges},
                    {"max_lp_arcs", options.guards.max_lp_arcs}};
  const std::string csv = RecordsToCsv(records);
  const json records_json = RecordsToJson(records);
  const std::vector<OutputFile> files = {
      {"records.csv", csv},
      {"records.json", CanonicalDump(records_json)},
      {"runtime.gp", RuntimeGnuplot(records)}};
  WriteOutputs(*g.out, "bench", effective, files);

  const bool ok = AllVerified(records);
  int skipped = 0;
  int failed = 0;
  for (const BenchRecord& r : records) {
    if (r.status == kSkippedScale) {
      ++skipped;
    } else if (!r.verified) {
      ++failed;
    }
  }
  switch (g.format) {
    case OutputFormat::kJson:
      std::cout << CanonicalDump(records_json);
      break;
    case OutputFormat::kCsv:
      std::cout << csv;
      break;
    case OutputFormat::kText:
      std::cout << fmt::format("{} records, {} skipped, {} -> {}\n",
                               records.size(), skipped,
                               ok ? std::string("all verified")
                                  : fmt::format("{} failed verification", failed),
                               *g.out);
      break;
  }
  return ok ? kExitOk : kExitVerificationFailed;
}

int RunSweep(const GlobalOptions& g, const SweepArgs& args) {
  std::vector<double> alphas = args.alphas;
  if (alphas.empty()) alphas = {0.10, 0.15, 0.20, 0.25, 0.30, 0.35};
  const Instance inst = ReadInstanceFile(args.instance_path);
  json config = {{"instance", args.instance_path},
                 {"alphas", alphas},
                 {"algorithm", args.algorithm}};

  if (args.algorithm == "tail-drop") {
    const std::vector<TailDropRow> rows = TailDropEval(inst, alphas);
    const std::string csv = TailDropToCsv(rows);
    const json rows_json = TailDropToJson(rows);
    if (g.out) {
      const std::vector<OutputFile> files = {
          {"tail_drop.csv", csv}, {"tail_drop.json", CanonicalDump(rows_json)}};
      WriteOutputs(*g.out, "sweep", config, files);
    }
    switch (g.format) {
      case OutputFormat::kJson:
        std::cout << CanonicalDump(rows_json);
        break;
      case OutputFormat::kCsv:
        std::cout << csv;
        break;
      case OutputFormat::kText:
        for (const TailDropRow& r : rows) {
          std::cout << fmt::format(
              "alpha {}: {:.2f}% of users left with demand, {} transactions "
              "dropped\n",
              FormatDouble(r.alpha), r.users_with_remaining_pct, r.unallocated);
        }
        break;
    }
    return kExitOk;
  }

  const Algorithm algorithm = RequireAlgorithm(args.algorithm);
  BenchOptions options;
  options.threads = g.threads;
  options.guards.force_exact = args.force;
  const std::vector<BenchRecord> rows = SweepCapacity(
      inst, alphas, algorithm, options, InstanceName(args.instance_path));
  const std::string csv = RecordsToCsv(rows);
  const json rows_json = RecordsToJson(rows);
  if (g.out) {
    const std::vector<OutputFile> files = {
        {"sweep.csv", csv}, {"sweep.json", CanonicalDump(rows_json)}};
    WriteOutputs(*g.out, "sweep", config, files);
  }
  switch (g.format) {
    case OutputFormat::kJson:
      std::cout << CanonicalDump(rows_json);
      break;
    case OutputFormat::kCsv:
      std::cout << csv;
      break;
    case OutputFormat::kText:
      for (const BenchRecord& r : rows) {
        if (!r.ran) {
          std::cout << fmt::format("alpha {}: {}\n", FormatDouble(*r.alpha),
                                   r.status);
          continue;
        }
        std::cout << fmt::format(
            "alpha {}: {} activations, {} unallocated, inverse Gini {}\n",
            FormatDouble(*r.alpha),
            algorithm == Algorithm::kLpBound ? ToDecimalString(r.objective, 3)
                                             : std::to_string(r.activations),
            r.unallocated,
            r.inverse_gini ? ToDecimalString(*r.inverse_gini, 3) : "n/a");
      }
      break;
  }
  return AllVerified(rows) ? kExitOk : kExitVerificationFailed;
}

int RunReduce3p(const GlobalOptions& g, const Reduce3pArgs& args) {
  if (args.items.empty() || args.items.size() % 3 != 0) {
    throw MeafError(ErrorCode::kPrecondition,
                    fmt::format("item count {} is not a positive multiple of 3",
                                args.items.size()));
  }
  const int64_t m = static_cast<int64_t>(args.items.size() / 3);
  int64_t bound = 0;
  if (args.bound) {
    bound = *args.bound;
  } else {
    const int64_t sum =
        std::accumulate(args.items.begin(), args.items.end(), int64_t{0});
    if (sum % m != 0) {
      throw MeafError(ErrorCode::kPrecondition,
                      fmt::format("B = {}/{} is not an integer", sum, m));
    }
    bound = sum / m;
  }
  ExactConfig exact;
  exact.num_threads = g.threads;
  const ThreePartitionOutcome outcome =
      SolveThreePartition(args.items, bound, exact);
  const std::string answer = outcome.yes ? "YES" : "NO";
  if (g.out) {
    const ReducedInstance reduced = ReduceThreePartition(args.items, bound);
    json config = {{"items", args.items}, {"bound", bound}};
    const std::vector<OutputFile> files = {
        {"instance.json", WriteInstanceString(reduced.instance)},
        {"result.json",
         CanonicalDump(SolveResultToJson(reduced.instance, outcome.result, false))}};
    WriteOutputs(*g.out, "reduce3p", config, files);
  }
  switch (g.format) {
    case OutputFormat::kJson:
      std::cout << CanonicalDump({{"answer", answer},
                                  {"budget", outcome.budget},
                                  {"bound", bound},
                                  {"items", args.items},
                                  {"activation_count",
                                   outcome.result.activation_count}});
      break;
    case OutputFormat::kCsv:
      std::cout << fmt::format("answer,budget,bound\n{},{},{}\n", answer,
                               outcome.budget, bound);
      break;
    case OutputFormat::kText:
      std::cout << (outcome.yes ? fmt::format("YES (k={})", outcome.budget)
                                : std::string("NO"))
                << '\n';
      break;
  }
  return kExitOk;
}

int RunExportMilp(const GlobalOptions& g, const ExportMilpArgs& args) {
  const Instance inst = ReadInstanceFile(args.instance_path);
  const std::string lp = MilpToString(inst);
  if (!g.out) {
    std::cout << lp;
    return kExitOk;
  }
  json config = {{"instance", args.instance_path}};
  const std::vector<OutputFile> files = {{"model.lp", lp}};
  WriteOutputs(*g.out, "export-milp", config, files);
  const int64_t binaries = inst.num_dashed_edges();
  const int64_t generals =
      static_cast<int64_t>(inst.num_users()) * inst.num_apps();
  switch (g.format) {
    case OutputFormat::kJson:
      std::cout << CanonicalDump({{"path", (fs::path(*g.out) / "model.lp").string()},
                                  {"general_variables", generals},
                                  {"binary_variables", binaries}});
      break;
    case OutputFormat::kCsv:
      std::cout << fmt::format("path,general_variables,binary_variables\n{},{},{}\n",
                               (fs::path(*g.out) / "model.lp").string(),
                               generals, binaries);
      break;
    case OutputFormat::kText:
      std::cout << fmt::format("wrote {} ({} flow variables, {} binaries)\n",
                               (fs::path(*g.out) / "model.lp").string(),
                               generals, binaries);
      break;
  }
  return kExitOk;
}

}  // namespace meaf::cli
