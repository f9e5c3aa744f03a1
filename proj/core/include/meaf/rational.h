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

#ifndef MEAF_RATIONAL_H_
#define MEAF_RATIONAL_H_

#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace meaf {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// "p/q", or "p" when the denominator is one.
std::string ToFractionString(const Rational& value);

// Mixed-number rendering used in summaries, e.g. 793/30 -> "26 13/30".
std::string ToMixedString(const Rational& value);

// Decimal rendering rounded half away from zero, computed exactly.
std::string ToDecimalString(const Rational& value, int digits);

// Smallest integer >= value.
BigInt Ceil(const Rational& value);

// Parses "p/q", "p", or a plain decimal such as "3.78".
Rational ParseRational(const std::string& text);

}  // namespace meaf

#endif  // MEAF_RATIONAL_H_
