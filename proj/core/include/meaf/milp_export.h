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

#ifndef MEAF_MILP_EXPORT_H_
#define MEAF_MILP_EXPORT_H_

#include <filesystem>
#include <ostream>
#include <string>
#include <string_view>

#include "meaf/model.h"

namespace meaf {

// Writes the activation ILP in CPLEX LP format:
//
//   Minimize    sum of x_<u>_<a> over dashed pairs
//   R_user_<u>: sum_a f_<u>_<a> = t_u
//   R_cap_<a>:  sum_u f_<u>_<a> <= c_a
//   R_act_<u>_<a>: f_<u>_<a> - t_u x_<u>_<a> <= 0   (dashed pairs only)
//
// with f general integers in [0, t_u] and x binary. User ids are embedded
// through LpNameToken(); long rows are wrapped below 255 characters.
void WriteMilp(const Instance& inst, std::ostream& out);
std::string MilpToString(const Instance& inst);
void ExportMilp(const Instance& inst, const std::filesystem::path& path);

// Letters and digits pass through; any other byte b becomes "_hh" (lowercase
// hex), which keeps names injective and legal in LP files.
std::string LpNameToken(std::string_view user_id);

}  // namespace meaf

#endif  // MEAF_MILP_EXPORT_H_
