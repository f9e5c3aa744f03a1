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

#ifndef MEAF_ERROR_H_
#define MEAF_ERROR_H_

#include <stdexcept>
#include <string>
#include <string_view>

namespace meaf {

enum class ErrorCode {
  kInvalidInstance,
  kInvalidConfig,
  kGloballyInfeasible,
  kPrecondition,
  kCostOverflow,
  kUndefinedMetric,
  kIo,
  kParse,
};

std::string_view ErrorCodeName(ErrorCode code);

// Every failure raised by the library carries a machine-checkable code so the
// command-line front end can map it onto its exit-code contract.
class MeafError : public std::runtime_error {
 public:
  MeafError(ErrorCode code, const std::string& message);

  ErrorCode code() const { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace meaf

#endif  // MEAF_ERROR_H_
