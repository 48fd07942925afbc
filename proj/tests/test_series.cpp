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
#include "graphchi/laurent.hpp"
#include "graphchi/series.hpp"

using namespace graphchi;

namespace {

using RSeries = TruncatedSeries<Rational>;

RSeries random_series(std::mt19937_64& rng, std::size_t cap, bool zero_constant) {
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 6);
  RSeries s(Var::x, cap);
  for (std::size_t d = zero_constant ? 1 : 0; d <= cap; ++d) s.set_coeff(d, Rational(num(rng), den(rng)));
  return s;
}

RSeries from(std::vector<Rational> c, std::size_t cap) { return RSeries(Var::x, cap, std::move(c)); }

}  // namespace

TEST_CASE("ring axioms for truncated series") {
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 25; ++trial) {
    const auto a = random_series(rng, 8, false);
    const auto b = random_series(rng, 8, false);
    const auto c = random_series(rng, 8, false);
    CHECK(a + b == b + a);
    CHECK(a * b == b * a);
    CHECK((a * b) * c == a * (b * c));
    CHECK(a * (b + c) == a * b + a * c);
    CHECK(a * RSeries::one(Var::x, 8) == a);
    CHECK(a - a == RSeries(Var::x, 8));
  }
}

TEST_CASE("truncation commutes with products") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_series(rng, 12, false);
    const auto b = random_series(rng, 12, false);
    for (std::size_t cap : {0U, 3U, 7U, 12U}) {
      CHECK((a * b).truncated(cap) == a.truncated(cap) * b.truncated(cap));
    }
    CHECK((a * b.truncated(5)).cap() == 5);
  }
}

TEST_CASE("exp and log are inverse") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = random_series(rng, 9, true);
    CHECK(log_series(exp_series(a)) == a);
    const auto e = exp_series(a);
    CHECK(exp_series(log_series(e)) == e);
  }
}

TEST_CASE("exp turns sums into products") {
  std::mt19937_64 rng(23);
  for (int trial = 0; trial < 15; ++trial) {
    const auto a = random_series(rng, 9, true);
    const auto b = random_series(rng, 9, true);
    CHECK(exp_series(a + b) == exp_series(a) * exp_series(b));
    CHECK(exp_scaled(a, Rational(1)) == exp_series(a));
    CHECK(exp_scaled(a, Rational(-2, 3)) == exp_series(scale(a, Rational(-2, 3))));
  }
}

TEST_CASE("exp of x against factorials") {
  const auto e = exp_series(RSeries::variable(Var::x, 12));
  for (unsigned n = 0; n <= 12; ++n) CHECK(e[n] == Rational(BigInt(1), factorial(n)));
  const auto l = log_series(RSeries::one(Var::x, 6) + RSeries::variable(Var::x, 6));
  CHECK(l == from({0, 1, Rational(-1, 2), Rational(1, 3), Rational(-1, 4), Rational(1, 5),
                   Rational(-1, 6)}, 6));
}

TEST_CASE("compose, derivative and inverse") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 10; ++trial) {
    const auto f = random_series(rng, 8, false);
    const auto g = random_series(rng, 8, true);
    const auto h = random_series(rng, 8, true);
    // chain rule, one degree lower
    CHECK(derivative(compose(f, g)) == (compose(derivative(f), g.truncated(7)) * derivative(g)));
    CHECK(compose(compose(f, g), h) == compose(f, compose(g, h)));
    auto unit = random_series(rng, 8, false);
    unit.set_coeff(0, Rational(3, 2));
    CHECK(unit * inverse_series(unit) == RSeries::one(Var::x, 8));
  }
  const auto x = RSeries::variable(Var::x, 5);
  CHECK(compose(exp_series(x), x) == exp_series(x));
}

TEST_CASE("series error paths") {
  const auto x = RSeries::variable(Var::x, 4);
  CHECK_THROWS_AS(x.coeff(5), RangeError);
  CHECK_THROWS_AS(x.truncated(6), RangeError);
  CHECK_THROWS_AS(exp_series(RSeries::one(Var::x, 4)), DomainError);
  CHECK_THROWS_AS(log_series(x), DomainError);
  CHECK_THROWS_AS(inverse_series(x), DomainError);
  CHECK_THROWS_AS(derivative(RSeries::one(Var::x, 0)), RangeError);
  CHECK_THROWS_AS(x + RSeries::variable(Var::hbar, 4), UsageError);
  CHECK_THROWS_AS(compose(x.truncated(2), RSeries::variable(Var::x, 6)), RangeError);
  CHECK_THROWS_AS(compose(x, x + RSeries::one(Var::x, 4)), DomainError);
}

TEST_CASE("capped Laurent arithmetic") {
  using L = HbarLaurent;
  const L a = L::from_coeffs(-1, {Rational(2), Rational(1)}, 3);  // 2/h + 1 + O(h^4)
  const L b = L::monomial(Rational(1, 2), -2);                   // exact h^-2 / 2
  CHECK(a.valuation() == -1);
  CHECK(a.coeff(3) == Rational(0));
  CHECK_THROWS_AS(a.coeff(4), RangeError);
  const L p = a * b;
  CHECK(p.valuation() == -3);
  CHECK(p.cap() == 1);  // a known through h^3, times h^-2
  CHECK(p.coeff(-3) == Rational(1));
  CHECK(p.coeff(-2) == Rational(1, 2));
  CHECK(L(Rational(0)).is_zero());
  CHECK(L().is_exact());
  CHECK_THROWS_AS(L().valuation(), DomainError);
  CHECK_THROWS_AS(LambdaPoly::monomial(Rational(1), -1), DomainError);
  CHECK(a.to_string() == "2*h^-1 + 1 + O(h^4)");
}

TEST_CASE("Laurent valuations add under products") {
  std::mt19937_64 rng(31);
  std::uniform_int_distribution<int> val(-4, 4);
  std::uniform_int_distribution<long> num(1, 9);
  for (int trial = 0; trial < 100; ++trial) {
    const int va = val(rng), vb = val(rng);
    const auto a = HbarLaurent::from_coeffs(va, {Rational(num(rng)), Rational(num(rng))}, 10);
    const auto b = HbarLaurent::from_coeffs(vb, {Rational(num(rng)), Rational(-num(rng))}, 10);
    const auto p = a * b;
    CHECK(p.valuation() == va + vb);
    CHECK(p.cap() == std::min(10 + vb, 10 + va));
    CHECK(p.coeff(va + vb) == a.coeff(va) * b.coeff(vb));
    CHECK(a * b == b * a);
  }
}

TEST_CASE("series over Laurent coefficients") {
  using LS = TruncatedSeries<HbarLaurent>;
  const auto phi = RSeries(Var::x, 4, {0, 0, 0, Rational(1), Rational(1)});
  const auto e = exp_scaled(phi, HbarLaurent::monomial(Rational(1), -1));
  CHECK(e[3] == HbarLaurent::monomial(Rational(1), -1));
  CHECK(e[4] == HbarLaurent::monomial(Rational(1), -1));
  const LS lifted(Var::x, 4, {HbarLaurent(0), HbarLaurent(0), HbarLaurent(0),
                              HbarLaurent::monomial(Rational(1), -1),
                              HbarLaurent::monomial(Rational(1), -1)});
  CHECK(exp_series(lifted) == e);
}
