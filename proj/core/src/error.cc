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

#include "meaf/error.h"

namespace meaf {

std::string_view ErrorCodeName(ErrorCode code) {
  switch (code) {
    case ErrorCode::kInvalidInstance:
      return "invalid_instance";
    case ErrorCode::kInvalidConfig:
      return "invalid_config";
    case ErrorCode::kGloballyInfeasible:
      return "globally_infeasible";
    case ErrorCode::kPrecondition:
      return "precondition";
    case ErrorCode::kCostOverflow:
      return "cost_overflow";
    case ErrorCode::kUndefinedMetric:
      return "undefined_metric";
    case ErrorCode::kIo:
      return "io";
    case ErrorCode::kParse:
      return "parse";
  }
  return "unknown";
}

MeafError::MeafError(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(ErrorCodeName(code)) + ": " + message),
      code_(code) {}

}  // namespace meaf
