// Copyright 2026 The effgames Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "effgames/rational.hpp"

using effgames::BigInt;
using effgames::Rational;

TEST_CASE("canonical form after every operation") {
  Rational r(6, 4);
  CHECK(r.numerator() == 3);
  CHECK(r.denominator() == 2);
  Rational s(-6, -4);
  CHECK(s.numerator() == 3);
  CHECK(s.denominator() == 2);
  Rational t(6, -4);
  CHECK(t.numerator() == -3);
  CHECK(t.denominator() == 2);
  CHECK((Rational(1, 3) + Rational(2, 3)).is_integer());
}

TEST_CASE("parsing: integers, fractions, finite decimals") {
  CHECK(Rational::parse("12") == Rational(12));
  CHECK(Rational::parse("-3/7") == Rational(-3, 7));
  CHECK(Rational::parse("6.4") == Rational(32, 5));
  CHECK(Rational::parse("-0.5") == Rational(-1, 2));
  CHECK(Rational::parse("0.125") == Rational(1, 8));
  CHECK_THROWS_AS(Rational::parse("1/0"), std::domain_error);
  CHECK_THROWS_AS(Rational::parse("abc"), std::invalid_argument);
  CHECK_THROWS_AS(Rational::parse("1.2.3"), std::invalid_argument);
}

TEST_CASE("formatting round-trips") {
  CHECK(Rational(32, 5).str() == "32/5");
  CHECK(Rational(10).str() == "10");
  CHECK(Rational(-7, 3).str() == "-7/3");
  for (const char* s : {"0", "-11/13", "5", "972/997"}) {
    CHECK(Rational::parse(s).str() == s);
  }
}

TEST_CASE("division by zero is an error, never a value") {
  CHECK_THROWS_AS(Rational(1) / Rational(0), std::domain_error);
  CHECK_THROWS_AS(Rational(1, 0), std::domain_error);
}

TEST_CASE("random fractions: inverses and cross-multiplied comparisons") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> num(-1000, 1000);
  std::uniform_int_distribution<long long> den(1, 1000);
  for (int i = 0; i < 2000; ++i) {
    long long a = num(rng), b = den(rng), c = num(rng), d = den(rng);
    if (a == 0 || c == 0) continue;
    Rational x(a, b), y(c, d);
    CHECK(x * (Rational(b, 1) / Rational(a, 1)) == Rational(1));
    CHECK((x < y) == (a * d < c * b));
    CHECK((x == y) == (a * d == c * b));
  }
}

TEST_CASE("exact arithmetic identities") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> num(-50, 50);
  std::uniform_int_distribution<long long> den(1, 50);
  for (int i = 0; i < 500; ++i) {
    Rational x(num(rng), den(rng)), y(num(rng), den(rng)), z(num(rng), den(rng));
    CHECK(x + y == y + x);
    CHECK((x + y) + z == x + (y + z));
    CHECK(x * (y + z) == x * y + x * z);
    if (!y.is_zero()) CHECK((x / y) * y == x);
  }
}
