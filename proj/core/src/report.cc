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

#include "meaf/report.h"

#include <charconv>
#include <map>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "meaf/model_json.h"

namespace meaf {
namespace {

using nlohmann::json;

std::string CsvField(std::string_view text) {
  if (text.find_first_of(",\"\r\n") == std::string_view::npos) {
    return std::string(text);
  }
  std::string out = "\"";
  for (char c : text) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

std::string GnuplotBlockName(Algorithm algorithm) {
  std::string name(AlgorithmTag(algorithm));
  for (char& c : name) {
    if (c == '-') c = '_';
  }
  return name;
}

double Seconds(std::chrono::nanoseconds ns) {
  return static_cast<double>(ns.count()) * 1e-9;
}

}  // namespace

std::string FormatDouble(double value) {
  char buffer[64];
  auto [end, ec] = std::to_chars(buffer, buffer + sizeof(buffer), value);
  return std::string(buffer, end);
}

std::string_view RecordsCsvHeader() {
  return "instance,users,transactions,apps,alpha,seed,algorithm,version,"
         "status,activations,objective,objective_decimal,unallocated,"
         "inverse_gini,verified";
}

std::string RecordsToCsv(std::span<const BenchRecord> records) {
  std::string out(RecordsCsvHeader());
  out += '\n';
  for (const BenchRecord& r : records) {
    std::vector<std::string> f;
    f.push_back(CsvField(r.instance));
    f.push_back(std::to_string(r.users));
    f.push_back(std::to_string(r.transactions));
    f.push_back(std::to_string(r.apps));
    f.push_back(r.alpha ? FormatDouble(*r.alpha) : "");
    f.push_back(r.seed ? std::to_string(*r.seed) : "");
    f.push_back(std::string(AlgorithmTag(r.algorithm)));
    f.push_back(std::string(AlgorithmVersion(r.algorithm)));
    f.push_back(CsvField(r.status));
    const bool solved = r.ran && r.status.rfind("error", 0) != 0;
    f.push_back(solved ? std::to_string(r.activations) : "");
    f.push_back(solved ? ToFractionString(r.objective) : "");
    f.push_back(solved ? ToDecimalString(r.objective, 6) : "");
    f.push_back(solved ? std::to_string(r.unallocated) : "");
    f.push_back(r.inverse_gini ? ToDecimalString(*r.inverse_gini, 6) : "");
    f.push_back(r.ran ? (r.verified ? "true" : "false") : "");
    for (std::size_t i = 0; i < f.size(); ++i) {
      if (i > 0) out += ',';
      out += f[i];
    }
    out += '\n';
  }
  return out;
}

json RecordsToJson(std::span<const BenchRecord> records) {
  json out = json::array();
  for (const BenchRecord& r : records) {
    json j;
    j["instance"] = r.instance;
    j["users"] = r.users;
    j["transactions"] = r.transactions;
    j["apps"] = r.apps;
    j["alpha"] = r.alpha ? json(*r.alpha) : json(nullptr);
    j["seed"] = r.seed ? json(*r.seed) : json(nullptr);
    j["algorithm"] = AlgorithmTag(r.algorithm);
    j["version"] = AlgorithmVersion(r.algorithm);
    j["status"] = r.status;
    const bool solved = r.ran && r.status.rfind("error", 0) != 0;
    if (solved) {
      j["activations"] = r.activations;
      j["objective"] = {{"fraction", ToFractionString(r.objective)},
                        {"decimal", ToDecimalString(r.objective, 6)}};
      j["unallocated"] = r.unallocated;
    }
    if (r.inverse_gini) {
      j["inverse_gini"] = static_cast<double>(*r.inverse_gini);
    }
    if (r.ran) {
      j["verified"] = r.verified;
      j["wall_time_s"] = Seconds(r.wall_time);
    }
    out.push_back(std::move(j));
  }
  return out;
}

std::string RuntimeGnuplot(std::span<const BenchRecord> records) {
  std::map<std::string, std::vector<const BenchRecord*>> series;
  std::vector<std::pair<std::string, std::string>> order;  // block, title
  for (const BenchRecord& r : records) {
    if (!r.ran || r.wall_time.count() <= 0) continue;
    const std::string block = GnuplotBlockName(r.algorithm);
    if (!series.contains(block)) {
      order.emplace_back(block, std::string(AlgorithmTag(r.algorithm)));
    }
    series[block].push_back(&r);
  }
  std::string out;
  out += "# Runtime scaling: wall time against total transactions.\n";
  out += "# Render with: gnuplot runtime.gp\n";
  out += "set terminal pngcairo size 900,600\n";
  out += "set output 'runtime.png'\n";
  out += "set logscale xy\n";
  out += "set xlabel 'total transactions'\n";
  out += "set ylabel 'wall time (s)'\n";
  out += "set key left top\n";
  for (const auto& [block, title] : order) {
    out += fmt::format("${} << EOD\n", block);
    for (const BenchRecord* r : series[block]) {
      out += fmt::format("{} {:.9f}\n", r->transactions, Seconds(r->wall_time));
    }
    out += "EOD\n";
  }
  if (order.empty()) {
    out += "# no timed records\n";
    return out;
  }
  out += "plot ";
  for (std::size_t i = 0; i < order.size(); ++i) {
    if (i > 0) out += ", \\\n     ";
    out += fmt::format("${} using 1:2 with linespoints title '{}'",
                       order[i].first, order[i].second);
  }
  out += '\n';
  return out;
}

std::string_view TailDropCsvHeader() {
  return "alpha,capacity,users_with_remaining,users_with_remaining_pct,"
         "unallocated";
}

std::string TailDropToCsv(std::span<const TailDropRow> rows) {
  std::string out(TailDropCsvHeader());
  out += '\n';
  for (const TailDropRow& r : rows) {
    out += fmt::format("{},{},{},{:.4f},{}\n", FormatDouble(r.alpha),
                       r.capacity, r.users_with_remaining,
                       r.users_with_remaining_pct, r.unallocated);
  }
  return out;
}

json TailDropToJson(std::span<const TailDropRow> rows) {
  json out = json::array();
  for (const TailDropRow& r : rows) {
    out.push_back({{"alpha", r.alpha},
                   {"capacity", r.capacity},
                   {"users_with_remaining", r.users_with_remaining},
                   {"users_with_remaining_pct", r.users_with_remaining_pct},
                   {"unallocated", r.unallocated}});
  }
  return out;
}

uint64_t Fnv1a64(std::string_view bytes) {
  uint64_t hash = 0xcbf29ce484222325ULL;
  for (unsigned char c : bytes) {
    hash ^= c;
    hash *= 0x100000001b3ULL;
  }
  return hash;
}

std::string HexDigest(uint64_t value) { return fmt::format("{:016x}", value); }

json BuildManifest(std::string_view command, const json& config,
                   std::span<const OutputFile> files) {
  json manifest;
  manifest["tool"] = "meaf";
  manifest["version"] = MEAF_VERSION_STRING;
  manifest["command"] = command;
  manifest["config"] = config;
  manifest["config_hash"] = HexDigest(Fnv1a64(config.dump()));
  json list = json::array();
  for (const OutputFile& file : files) {
    list.push_back({{"name", file.name},
                    {"bytes", file.content.size()},
                    {"fnv1a64", HexDigest(Fnv1a64(file.content))}});
  }
  manifest["files"] = std::move(list);
  return manifest;
}

void WriteOutputs(const std::filesystem::path& dir, std::string_view command,
                  const json& config, std::span<const OutputFile> files) {
  for (const OutputFile& file : files) {
    WriteTextFile(dir / file.name, file.content);
  }
  WriteTextFile(dir / "manifest.json",
                CanonicalDump(BuildManifest(command, config, files)));
}

}  // namespace meaf
