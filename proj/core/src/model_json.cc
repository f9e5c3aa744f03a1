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

#include "meaf/model_json.h"

#include <algorithm>
#include <cstdint>
#include <fstream>
#include <sstream>
#include <tuple>
#include <utility>

#include "fmt/format.h"
#include "meaf/error.h"

namespace meaf {
namespace {

using nlohmann::json;

[[noreturn]] void ParseFail(const std::string& message) {
  throw MeafError(ErrorCode::kParse, message);
}

void RequireKeys(const json& obj, std::initializer_list<std::string_view> keys,
                 const std::string& what) {
  if (!obj.is_object()) ParseFail(what + " must be a JSON object");
  for (const auto& [key, _] : obj.items()) {
    bool known = false;
    for (auto k : keys) known = known || key == k;
    if (!known) ParseFail(fmt::format("unknown key '{}' in {}", key, what));
  }
}

const json& Field(const json& obj, const char* key, const std::string& what) {
  auto it = obj.find(key);
  if (it == obj.end()) ParseFail(fmt::format("{} is missing '{}'", what, key));
  return *it;
}

int64_t AsInt(const json& value, const std::string& what) {
  if (!value.is_number_integer()) ParseFail(what + " must be an integer");
  return value.get<int64_t>();
}

UserIndex LookupUser(const Instance& inst, const json& value) {
  if (!value.is_string()) ParseFail("user reference must be a string id");
  auto u = inst.FindUser(value.get<std::string>());
  if (!u) ParseFail("unknown user id '" + value.get<std::string>() + "'");
  return *u;
}

}  // namespace

std::string CanonicalDump(const json& value) { return value.dump(2) + "\n"; }

json InstanceToJson(const Instance& inst) {
  json out;
  out["num_apps"] = inst.num_apps();
  if (inst.alpha()) {
    out["capacities"] = json{{"alpha", *inst.alpha()}};
  } else {
    out["capacities"] = json(std::vector<int64_t>(inst.capacities().begin(),
                                                  inst.capacities().end()));
  }
  json users = json::array();
  for (const UserRecord& user : inst.users()) {
    users.push_back(json{{"id", user.id},
                         {"demand", user.demand},
                         {"preinstalled", user.preinstalled}});
  }
  out["users"] = std::move(users);
  return out;
}

Instance InstanceFromJson(const json& value) {
  RequireKeys(value, {"num_apps", "capacities", "users"}, "instance");
  RawInstance raw;
  const int64_t num_apps = AsInt(Field(value, "num_apps", "instance"),
                                 "num_apps");
  if (num_apps <= 0 || num_apps > (1 << 20)) {
    throw MeafError(ErrorCode::kInvalidInstance,
                    fmt::format("num_apps {} out of range", num_apps));
  }
  raw.num_apps = static_cast<int>(num_apps);

  const json& caps = Field(value, "capacities", "instance");
  if (caps.is_array()) {
    std::vector<int64_t> list;
    for (const json& c : caps) list.push_back(AsInt(c, "capacity"));
    raw.capacities = std::move(list);
  } else if (caps.is_object()) {
    RequireKeys(caps, {"alpha"}, "capacities");
    const json& alpha = Field(caps, "alpha", "capacities");
    if (!alpha.is_number()) ParseFail("alpha must be a number");
    raw.capacities = AlphaCapacity{alpha.get<double>()};
  } else {
    ParseFail("capacities must be an array or {\"alpha\": x}");
  }

  const json& users = Field(value, "users", "instance");
  if (!users.is_array()) ParseFail("users must be an array");
  raw.users.reserve(users.size());
  for (const json& u : users) {
    RequireKeys(u, {"id", "demand", "preinstalled"}, "user");
    UserRecord rec;
    const json& id = Field(u, "id", "user");
    if (!id.is_string()) ParseFail("user id must be a string");
    rec.id = id.get<std::string>();
    rec.demand = AsInt(Field(u, "demand", "user"), "demand");
    const json& pre = Field(u, "preinstalled", "user");
    if (!pre.is_array()) ParseFail("preinstalled must be an array");
    for (const json& a : pre) {
      const int64_t app = AsInt(a, "preinstalled app");
      if (app < INT32_MIN || app > INT32_MAX) {
        throw MeafError(ErrorCode::kInvalidInstance,
                        fmt::format("app id out of range: {}", app));
      }
      rec.preinstalled.push_back(static_cast<AppId>(app));
    }
    raw.users.push_back(std::move(rec));
  }
  return Instance::Create(std::move(raw));
}

std::string WriteInstanceString(const Instance& inst) {
  return CanonicalDump(InstanceToJson(inst));
}

Instance ReadInstanceString(const std::string& text) {
  return InstanceFromJson(ParseJsonText(text, "instance"));
}

void WriteInstanceFile(const Instance& inst,
                       const std::filesystem::path& path) {
  WriteTextFile(path, WriteInstanceString(inst));
}

Instance ReadInstanceFile(const std::filesystem::path& path) {
  return ReadInstanceString(ReadTextFile(path));
}

json AllocationToJson(const Instance& inst, const Allocation& alloc) {
  json flows = json::array();
  for (const FlowEntry& f : alloc.flows) {
    flows.push_back(json::array({inst.user(f.user).id, f.app, f.amount}));
  }
  json activated = json::array();
  for (const Edge& e : alloc.activated) {
    activated.push_back(json::array({inst.user(e.user).id, e.app}));
  }
  json unallocated = json::object();
  for (UserIndex u = 0; u < static_cast<UserIndex>(alloc.unallocated.size());
       ++u) {
    if (alloc.unallocated[u] != 0) {
      unallocated[inst.user(u).id] = alloc.unallocated[u];
    }
  }
  return json{{"flows", std::move(flows)},
              {"activated", std::move(activated)},
              {"unallocated", std::move(unallocated)}};
}

Allocation AllocationFromJson(const Instance& inst, const json& value) {
  RequireKeys(value, {"flows", "activated", "unallocated"}, "allocation");
  Allocation alloc;
  alloc.unallocated.assign(static_cast<std::size_t>(inst.num_users()), 0);
  const json& flows = Field(value, "flows", "allocation");
  if (!flows.is_array()) ParseFail("flows must be an array");
  for (const json& f : flows) {
    if (!f.is_array() || f.size() != 3) {
      ParseFail("flow entries must be [user, app, amount]");
    }
    alloc.flows.push_back({LookupUser(inst, f[0]),
                           static_cast<AppId>(AsInt(f[1], "flow app")),
                           AsInt(f[2], "flow amount")});
  }
  const json& activated = Field(value, "activated", "allocation");
  if (!activated.is_array()) ParseFail("activated must be an array");
  for (const json& e : activated) {
    if (!e.is_array() || e.size() != 2) {
      ParseFail("activated entries must be [user, app]");
    }
    alloc.activated.push_back({LookupUser(inst, e[0]),
                               static_cast<AppId>(AsInt(e[1], "edge app"))});
  }
  const json& unallocated = Field(value, "unallocated", "allocation");
  if (!unallocated.is_object()) ParseFail("unallocated must be an object");
  for (const auto& [id, amount] : unallocated.items()) {
    alloc.unallocated[LookupUser(inst, json(id))] =
        AsInt(amount, "unallocated amount");
  }
  std::sort(alloc.flows.begin(), alloc.flows.end(),
            [](const FlowEntry& a, const FlowEntry& b) {
              return std::tie(a.user, a.app) < std::tie(b.user, b.app);
            });
  std::sort(alloc.activated.begin(), alloc.activated.end());
  return alloc;
}

json SolveResultToJson(const Instance& inst, const SolveResult& result,
                       bool include_timing) {
  json out;
  out["algorithm"] = AlgorithmTag(result.algorithm);
  out["version"] = AlgorithmVersion(result.algorithm);
  out["status"] = SolveStatusName(result.status);
  out["optimal"] = result.optimal;
  out["activation_count"] = result.activation_count;
  out["objective"] = json{{"fraction", ToFractionString(result.objective)},
                          {"decimal", ToDecimalString(result.objective, 6)}};
  out["total_unallocated"] = result.total_unallocated;
  if (result.proven_lower_bound) {
    out["proven_lower_bound"] = *result.proven_lower_bound;
  }
  if (include_timing) {
    out["wall_time_s"] =
        std::chrono::duration<double>(result.wall_time).count();
  }
  out["allocation"] = AllocationToJson(inst, result.allocation);
  return out;
}

json ParseJsonText(const std::string& text, const std::string& what) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    ParseFail(fmt::format("{} is not valid JSON: {}", what, e.what()));
  }
}

std::string ReadTextFile(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw MeafError(ErrorCode::kIo, "cannot open " + path.string());
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void WriteTextFile(const std::filesystem::path& path, const std::string& text) {
  if (path.has_parent_path()) {
    std::error_code ec;
    std::filesystem::create_directories(path.parent_path(), ec);
  }
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw MeafError(ErrorCode::kIo, "cannot write " + path.string());
  }
  out << text;
  if (!out) throw MeafError(ErrorCode::kIo, "write failed: " + path.string());
}

}  // namespace meaf
