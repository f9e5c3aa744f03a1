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

#ifndef MEAF_REPORT_H_
#define MEAF_REPORT_H_

#include <cstdint>
#include <filesystem>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <nlohmann/json.hpp>

#include "meaf/harness.h"
#include "meaf/metrics.h"

namespace meaf {

// Fixed column set of records.csv. Changing it is a breaking change.
std::string_view RecordsCsvHeader();

// RFC 4180 with LF line endings. Timings are left out so equal inputs give
// equal bytes; they live in the JSON report and the gnuplot script.
std::string RecordsToCsv(std::span<const BenchRecord> records);
nlohmann::json RecordsToJson(std::span<const BenchRecord> records);

// Gnuplot script with inline data blocks: wall time against total
// transactions on log-log axes, one series per algorithm.
std::string RuntimeGnuplot(std::span<const BenchRecord> records);

std::string_view TailDropCsvHeader();
std::string TailDropToCsv(std::span<const TailDropRow> rows);
nlohmann::json TailDropToJson(std::span<const TailDropRow> rows);

// Shortest decimal that reads back as the same double.
std::string FormatDouble(double value);

uint64_t Fnv1a64(std::string_view bytes);
std::string HexDigest(uint64_t value);

struct OutputFile {
  std::string name;  // relative to the output directory
  std::string content;
};

// {"tool", "version", "command", "config", "config_hash", "files": [{name,
// bytes, fnv1a64}]}.
nlohmann::json BuildManifest(std::string_view command,
                             const nlohmann::json& config,
                             std::span<const OutputFile> files);

// Writes every file plus manifest.json into `dir`, creating it if needed.
void WriteOutputs(const std::filesystem::path& dir, std::string_view command,
                  const nlohmann::json& config,
                  std::span<const OutputFile> files);

}  // namespace meaf

#endif  // MEAF_REPORT_H_
