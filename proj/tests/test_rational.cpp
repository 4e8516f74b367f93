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

#include "doctest.h"
#include "fairdiv/errors.hpp"

namespace fairdiv {
namespace {

TEST_CASE("decimal parsing is exact") {
  CHECK(rational_from_decimal("7") == Rational(7));
  CHECK(rational_from_decimal("0") == Rational(0));
  CHECK(rational_from_decimal("-2") == Rational(-2));
  CHECK(rational_from_decimal("+3") == Rational(3));
  CHECK(rational_from_decimal("12.75") == Rational(51, 4));
  CHECK(rational_from_decimal("0.1") == Rational(1, 10));
  CHECK(rational_from_decimal("-0.25") == Rational(-1, 4));
  CHECK(rational_from_decimal("0004.50") == Rational(9, 2));
  // Never routed through binary floating point: these are exactly unequal.
  CHECK(rational_from_decimal("0.1") + rational_from_decimal("0.2") ==
        Rational(3, 10));
  CHECK(rational_from_decimal("123456789012345678901234567890") ==
        Rational(boost::multiprecision::cpp_int(
            "123456789012345678901234567890")));
}

TEST_CASE("decimal parsing rejects junk") {
  CHECK_THROWS_AS(rational_from_decimal(""), InputError);
  CHECK_THROWS_AS(rational_from_decimal("1e5"), InputError);
  CHECK_THROWS_AS(rational_from_decimal("1/2"), InputError);
  CHECK_THROWS_AS(rational_from_decimal("1.2.3"), InputError);
  CHECK_THROWS_AS(rational_from_decimal("abc"), InputError);
  CHECK_THROWS_AS(rational_from_decimal("1."), InputError);
  CHECK_THROWS_AS(rational_from_decimal(".5"), InputError);
  CHECK_THROWS_AS(rational_from_decimal(" 1"), InputError);
  CHECK_THROWS_AS(rational_from_decimal("1 "), InputError);
  CHECK_THROWS_AS(rational_from_decimal("--1"), InputError);
}

TEST_CASE("fraction strings round-trip") {
  CHECK(rational_to_string(Rational(7)) == "7");
  CHECK(rational_to_string(Rational(0)) == "0");
  CHECK(rational_to_string(Rational(51, 4)) == "51/4");
  CHECK(rational_to_string(Rational(-3, 2)) == "-3/2");
  CHECK(rational_to_string(Rational(4, 8)) == "1/2");

  CHECK(rational_from_fraction("51/4") == Rational(51, 4));
  CHECK(rational_from_fraction("7") == Rational(7));
  CHECK(rational_from_fraction("-3/2") == Rational(-3, 2));
  for (const Rational& r :
       {Rational(0), Rational(5), Rational(-7, 3), Rational(1000001, 7)}) {
    CHECK(rational_from_fraction(rational_to_string(r)) == r);
  }

  CHECK_THROWS_AS(rational_from_fraction("1/0"), InputError);
  CHECK_THROWS_AS(rational_from_fraction("1/"), InputError);
  CHECK_THROWS_AS(rational_from_fraction("/2"), InputError);
  CHECK_THROWS_AS(rational_from_fraction("x"), InputError);
}

}  // namespace
}  // namespace fairdiv
