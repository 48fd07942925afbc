// Copyright 2026 The graphchi Authors.
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

#include <random>

#include "doctest.h"

#include "graphchi/errors.hpp"
#include "graphchi/rational.hpp"

using graphchi::BigInt;
using graphchi::Rational;

TEST_CASE("rationals normalize and render") {
  CHECK(Rational(6, -4).to_fraction_string() == "-3/2");
  CHECK(Rational(4, 2).to_string() == "2");
  CHECK(Rational(4, 2).to_fraction_string() == "2/1");
  CHECK(Rational(0).to_fraction_string() == "0/1");
  CHECK(Rational(1, 3).to_decimal_string(5) == "3.3333e-1");
  CHECK(Rational(-5).to_decimal_string(3) == "-5e0");
}

TEST_CASE("parse round trip") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> num(-1000000, 1000000);
  std::uniform_int_distribution<long> den(1, 1000000);
  for (int i = 0; i < 500; ++i) {
    const Rational q(num(rng), den(rng));
    CHECK(Rational::parse(q.to_fraction_string()) == q);
    CHECK(Rational::parse(q.to_string()) == q);
  }
  const Rational big(graphchi::factorial(60), graphchi::factorial(31));
  CHECK(Rational::parse(big.to_fraction_string()) == big);
}

TEST_CASE("malformed input is rejected") {
  CHECK_THROWS_AS(Rational::parse(""), graphchi::UsageError);
  CHECK_THROWS_AS(Rational::parse("1/"), graphchi::UsageError);
  CHECK_THROWS_AS(Rational::parse("1/0"), graphchi::UsageError);
  CHECK_THROWS_AS(Rational::parse("x"), graphchi::UsageError);
  CHECK_THROWS_AS(Rational(1, 0), graphchi::DomainError);
  CHECK_THROWS_AS(Rational(1) / Rational(0), graphchi::DomainError);
}

TEST_CASE("field axioms on random samples") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> num(-50, 50);
  std::uniform_int_distribution<long> den(1, 50);
  auto draw = [&] { return Rational(num(rng), den(rng)); };
  for (int i = 0; i < 300; ++i) {
    const Rational a = draw(), b = draw(), c = draw();
    CHECK(a + b == b + a);
    CHECK(a * (b + c) == a * b + a * c);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a - a == Rational(0));
    if (!a.is_zero()) CHECK(a / a == Rational(1));
    CHECK((a < b) == ((a - b).sign() < 0));
  }
}

TEST_CASE("factorial") {
  CHECK(graphchi::factorial(0) == 1);
  CHECK(graphchi::factorial(10) == 3628800);
  CHECK(graphchi::factorial(25) == BigInt("15511210043330985984000000"));
}
