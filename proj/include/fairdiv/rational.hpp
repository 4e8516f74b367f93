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

#ifndef FAIRDIV_RATIONAL_HPP_
#define FAIRDIV_RATIONAL_HPP_

#include <boost/multiprecision/cpp_int.hpp>

#include <string>
#include <string_view>

namespace fairdiv {

// All values, bundle sums, ratios and welfare products are exact rationals.
// Verdicts in this library are equality-sensitive, so nothing is ever
// computed through binary floating point.
using Rational = boost::multiprecision::cpp_rational;

// Parses an integer or decimal literal ("7", "-2", "12.75") into an exact
// rational. The fractional part is scaled by the matching power of ten, so
// "0.1" is exactly 1/10. Throws InputError on anything else (exponents,
// fraction syntax, stray characters, empty input).
Rational rational_from_decimal(std::string_view text);

// Canonical display form: "p" when the denominator is one, else "p/q" with
// q > 0 and gcd(p, q) = 1. Round-trips through rational_from_fraction.
std::string rational_to_string(const Rational& value);

// Parses the display form produced by rational_to_string ("p" or "p/q").
Rational rational_from_fraction(std::string_view text);

}  // namespace fairdiv

#endif  // FAIRDIV_RATIONAL_HPP_
