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

#ifndef MEAF_MODEL_JSON_H_
#define MEAF_MODEL_JSON_H_

#include <filesystem>
#include <string>

#include <nlohmann/json.hpp>

#include "meaf/model.h"

namespace meaf {

// Canonical text form shared by every JSON file this library writes: sorted
// keys, two-space indent, trailing newline.
std::string CanonicalDump(const nlohmann::json& value);

nlohmann::json InstanceToJson(const Instance& inst);
// Throws MeafError(kParse) on shape errors and kInvalidInstance on
// constraint violations.
Instance InstanceFromJson(const nlohmann::json& value);

std::string WriteInstanceString(const Instance& inst);
Instance ReadInstanceString(const std::string& text);
void WriteInstanceFile(const Instance& inst, const std::filesystem::path& path);
Instance ReadInstanceFile(const std::filesystem::path& path);

// Flows are written as [user_id, app, amount] triples, activations as
// [user_id, app] pairs, unallocated as {user_id: amount} for nonzero entries.
nlohmann::json AllocationToJson(const Instance& inst, const Allocation& alloc);
Allocation AllocationFromJson(const Instance& inst,
                              const nlohmann::json& value);

// Wall time is omitted when `include_timing` is false so the output is a pure
// function of the inputs.
nlohmann::json SolveResultToJson(const Instance& inst,
                                 const SolveResult& result,
                                 bool include_timing = true);

nlohmann::json ParseJsonText(const std::string& text, const std::string& what);
std::string ReadTextFile(const std::filesystem::path& path);
void WriteTextFile(const std::filesystem::path& path, const std::string& text);

}  // namespace meaf

#endif  // MEAF_MODEL_JSON_H_
