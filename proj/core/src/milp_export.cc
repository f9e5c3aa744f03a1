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

#include "meaf/milp_export.h"

#include <cstdint>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <fmt/format.h>

#include "meaf/error.h"
#include "meaf/model_json.h"

namespace meaf {
namespace {

constexpr std::size_t kMaxLine = 250;

// Accumulates one expression and wraps it before kMaxLine characters.
class RowWriter {
 public:
  explicit RowWriter(std::ostream& out) : out_(out) {}

  void Begin(const std::string& head) {
    line_ = head;
    first_term_ = true;
  }

  void Term(int64_t coefficient, const std::string& var) {
    std::string token;
    if (first_term_) {
      token = coefficient == 1    ? var
              : coefficient == -1 ? "- " + var
                                  : fmt::format("{} {}", coefficient, var);
    } else if (coefficient >= 0) {
      token = coefficient == 1 ? "+ " + var
                               : fmt::format("+ {} {}", coefficient, var);
    } else {
      token = coefficient == -1 ? "- " + var
                                : fmt::format("- {} {}", -coefficient, var);
    }
    Append(token);
    first_term_ = false;
  }

  void End(const std::string& tail) {
    if (!tail.empty()) Append(tail);
    out_ << line_ << '\n';
    line_.clear();
  }

 private:
  void Append(const std::string& token) {
    if (line_.size() + 1 + token.size() > kMaxLine) {
      out_ << line_ << '\n';
      line_ = "  ";
    } else if (!line_.empty() && line_.back() != ' ') {
      line_ += ' ';
    }
    line_ += token;
  }

  std::ostream& out_;
  std::string line_;
  bool first_term_ = true;
};

}  // namespace

std::string LpNameToken(std::string_view user_id) {
  std::string out;
  out.reserve(user_id.size());
  for (unsigned char c : user_id) {
    if ((c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') ||
        (c >= '0' && c <= '9')) {
      out += static_cast<char>(c);
    } else {
      out += fmt::format("_{:02x}", c);
    }
  }
  return out;
}

void WriteMilp(const Instance& inst, std::ostream& out) {
  const int n = inst.num_users();
  const int m = inst.num_apps();
  std::vector<std::string> token(n);
  for (UserIndex u = 0; u < n; ++u) {
    token[u] = LpNameToken(inst.user(u).id);
    if (token[u].size() > 200) {
      throw MeafError(ErrorCode::kPrecondition,
                      fmt::format("user id too long for LP names: {}",
                                  inst.user(u).id));
    }
  }
  auto f = [&](UserIndex u, AppId a) {
    return fmt::format("f_{}_{}", token[u], a);
  };
  auto x = [&](UserIndex u, AppId a) {
    return fmt::format("x_{}_{}", token[u], a);
  };

  RowWriter row(out);
  out << fmt::format("\\ minimum edge activation: {} users, {} apps\n", n, m);
  out << "Minimize\n";
  row.Begin(" obj:");
  for (Edge e : DashedEdges(inst)) row.Term(1, x(e.user, e.app));
  row.End("");

  out << "Subject To\n";
  for (UserIndex u = 0; u < n; ++u) {
    row.Begin(fmt::format(" R_user_{}:", token[u]));
    for (AppId a = 0; a < m; ++a) row.Term(1, f(u, a));
    row.End(fmt::format("= {}", inst.demand(u)));
  }
  for (AppId a = 0; a < m && n > 0; ++a) {
    row.Begin(fmt::format(" R_cap_{}:", a));
    for (UserIndex u = 0; u < n; ++u) row.Term(1, f(u, a));
    row.End(fmt::format("<= {}", inst.capacity(a)));
  }
  for (Edge e : DashedEdges(inst)) {
    row.Begin(fmt::format(" R_act_{}_{}:", token[e.user], e.app));
    row.Term(1, f(e.user, e.app));
    row.Term(-inst.demand(e.user), x(e.user, e.app));
    row.End("<= 0");
  }

  out << "Bounds\n";
  for (UserIndex u = 0; u < n; ++u) {
    for (AppId a = 0; a < m; ++a) {
      out << fmt::format(" 0 <= {} <= {}\n", f(u, a), inst.demand(u));
    }
  }
  out << "Generals\n";
  for (UserIndex u = 0; u < n; ++u) {
    for (AppId a = 0; a < m; ++a) out << ' ' << f(u, a) << '\n';
  }
  out << "Binaries\n";
  for (Edge e : DashedEdges(inst)) out << ' ' << x(e.user, e.app) << '\n';
  out << "End\n";
}

std::string MilpToString(const Instance& inst) {
  std::ostringstream out;
  WriteMilp(inst, out);
  return out.str();
}

void ExportMilp(const Instance& inst, const std::filesystem::path& path) {
  WriteTextFile(path, MilpToString(inst));
}

}  // namespace meaf
