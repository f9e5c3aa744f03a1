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

#include "meaf/rational.h"

#include <cctype>

#include "meaf/error.h"

namespace meaf {

std::string ToFractionString(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  return num.str() + "/" + den.str();
}

std::string ToMixedString(const Rational& value) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  if (den == 1) return num.str();
  std::string sign;
  if (num < 0) {
    sign = "-";
    num = -num;
  }
  const BigInt whole = num / den;
  const BigInt rest = num % den;
  if (whole == 0) return sign + rest.str() + "/" + den.str();
  return sign + whole.str() + " " + rest.str() + "/" + den.str();
}

std::string ToDecimalString(const Rational& value, int digits) {
  BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  const bool negative = num < 0;
  if (negative) num = -num;
  BigInt scale = 1;
  for (int i = 0; i < digits; ++i) scale *= 10;
  // round(num * scale / den), half away from zero.
  BigInt scaled = (2 * num * scale + den) / (2 * den);
  std::string text = scaled.str();
  if (digits > 0) {
    if (static_cast<int>(text.size()) <= digits) {
      text.insert(0, static_cast<std::size_t>(digits) + 1 - text.size(), '0');
    }
    text.insert(text.size() - static_cast<std::size_t>(digits), ".");
  }
  if (negative && scaled != 0) text.insert(0, "-");
  return text;
}

BigInt Ceil(const Rational& value) {
  const BigInt num = boost::multiprecision::numerator(value);
  const BigInt den = boost::multiprecision::denominator(value);
  BigInt q = num / den;  // truncates toward zero
  if (q * den < num) ++q;
  return q;
}

Rational ParseRational(const std::string& text) {
  auto fail = [&] {
    throw MeafError(ErrorCode::kParse, "not a rational number: '" + text + "'");
  };
  if (text.empty()) fail();
  const auto slash = text.find('/');
  auto parse_int = [&](const std::string& digits) {
    if (digits.empty()) fail();
    std::size_t start = digits[0] == '-' ? 1 : 0;
    if (start == digits.size()) fail();
    for (std::size_t i = start; i < digits.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(digits[i]))) fail();
    }
    return BigInt(digits);
  };
  if (slash != std::string::npos) {
    const BigInt den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Rational(parse_int(text.substr(0, slash)), den);
  }
  const auto dot = text.find('.');
  if (dot == std::string::npos) return Rational(parse_int(text));
  const std::string frac = text.substr(dot + 1);
  BigInt den = 1;
  for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
  std::string whole = text.substr(0, dot);
  const bool negative = !whole.empty() && whole[0] == '-';
  if (negative) whole.erase(0, 1);
  if (whole.empty()) whole = "0";
  Rational r(parse_int(whole + frac), den);
  return negative ? -r : r;
}

}  // namespace meaf
