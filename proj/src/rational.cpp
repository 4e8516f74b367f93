// Copyright 2026 The Authors.
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

#include "fairdiv/rational.hpp"

#include <cstddef>
#include <string>

#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

using Integer = boost::multiprecision::cpp_int;

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

Integer integer_from_digits(std::string_view digits) {
  // cpp_int's string constructor accepts the plain digit form; callers have
  // already validated the characters.
  return Integer(std::string(digits));
}

}  // namespace

Rational rational_from_decimal(std::string_view text) {
  const std::string_view original = text;
  const auto fail = [&original]() -> InputError {
    return InputError("not a decimal literal: \"" + std::string(original) +
                      "\"");
  };

  bool negative = false;
  if (!text.empty() && (text.front() == '+' || text.front() == '-')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }

  const size_t dot = text.find('.');
  std::string_view whole = text;
  std::string_view frac;
  if (dot != std::string_view::npos) {
    whole = text.substr(0, dot);
    frac = text.substr(dot + 1);
    if (frac.empty()) throw fail();  // "1." is a typo, not a number
  }
  if (whole.empty() || !all_digits(whole)) throw fail();
  if (dot != std::string_view::npos && !all_digits(frac)) throw fail();

  Integer numerator = integer_from_digits(whole);
  Integer denominator = 1;
  for (char c : frac) {
    numerator = numerator * 10 + (c - '0');
    denominator *= 10;
  }
  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

std::string rational_to_string(const Rational& value) {
  std::string out = numerator(value).str();
  if (denominator(value) != 1) {
    out += '/';
    out += denominator(value).str();
  }
  return out;
}

Rational rational_from_fraction(std::string_view text) {
  const std::string_view original = text;
  const auto fail = [&original]() -> InputError {
    return InputError("not a rational literal: \"" + std::string(original) +
                      "\"");
  };

  const size_t slash = text.find('/');
  if (slash == std::string_view::npos) {
    // Plain integer, possibly signed.
    std::string_view digits = text;
    bool negative = false;
    if (!digits.empty() && (digits.front() == '+' || digits.front() == '-')) {
      negative = digits.front() == '-';
      digits.remove_prefix(1);
    }
    if (!all_digits(digits)) throw fail();
    Integer n = integer_from_digits(digits);
    if (negative) n = -n;
    return Rational(n);
  }

  std::string_view num = text.substr(0, slash);
  std::string_view den = text.substr(slash + 1);
  bool negative = false;
  if (!num.empty() && (num.front() == '+' || num.front() == '-')) {
    negative = num.front() == '-';
    num.remove_prefix(1);
  }
  if (!all_digits(num) || !all_digits(den)) throw fail();
  Integer denominator = integer_from_digits(den);
  if (denominator == 0) throw fail();
  Integer numerator = integer_from_digits(num);
  if (negative) numerator = -numerator;
  return Rational(numerator, denominator);
}

}  // namespace fairdiv
