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

#include "doctest.h"

#include "graphchi/errors.hpp"
#include "graphchi/genfunc.hpp"
#include "reference.hpp"

using namespace graphchi;

namespace {

Rational q(long p, long d = 1) { return Rational(p, d); }

}  // namespace

TEST_CASE("graph sum F matches the published coefficients") {
  const auto f = compute_F(2);
  CHECK(f.at(0) == q(1));
  CHECK(f.at(1) == q(1, 3));
  CHECK(f.at(2) == q(41, 36));
  CHECK(f.name == "F");
  CHECK(f.order == 2);
}

TEST_CASE("F, E and X agree with the fat-partition recurrence") {
  const int order = 7;
  const auto f_ref = reference::graph_sum(order, +1);
  const auto e_ref = reference::graph_sum(order, -1);
  const auto x_ref = reference::log_recurrence(e_ref);
  const auto f = compute_F(order);
  const auto e = compute_E(order);
  const auto x = compute_X(order);
  for (int n = 0; n <= order; ++n) {
    CAPTURE(n);
    CHECK(f.at(n) == f_ref[static_cast<std::size_t>(n)]);
    CHECK(e.at(n) == e_ref[static_cast<std::size_t>(n)]);
    CHECK(x.at(n) == x_ref[static_cast<std::size_t>(n)]);
  }
  CHECK(f.at(3) == q(47227, 6480));
  CHECK(f.at(4) == q(2678627, 38880));
}

TEST_CASE("X has the expected low coefficients") {
  const auto x = compute_X(5);
  CHECK(x.at(0) == q(0));
  CHECK(x.at(1) == q(-1, 12));
  CHECK(x.at(2) == q(0));
  CHECK(x.at(3) == q(1, 360));
  CHECK(x.at(4) == q(0));
  CHECK(x.at(5) == q(-1, 1260));
}

TEST_CASE("p_m counts fat partitions") {
  CHECK(p_m(1).is_zero());
  CHECK(p_m(2) == LambdaPoly::monomial(q(1, 8), 1));
  // m=3: lambda/48 from the single block, 5 lambda^2/24 from {3,3}
  const auto p3 = p_m(3);
  CHECK(p3.coeff(1) == q(1, 48));
  CHECK(p3.coeff(2) == q(5, 24));
  const reference::FatPartitionTable s(16);
  for (unsigned m = 1; m <= 8; ++m) {
    const auto p = p_m(m);
    for (unsigned k = 0; k <= m; ++k) {
      CAPTURE(m);
      CAPTURE(k);
      const Rational expected(reference::odd_double_factorial(m) * s(2 * m, k), factorial(2 * m));
      CHECK(p.coeff(k) == expected);
    }
  }
  CHECK_THROWS_AS(p_m(0), UsageError);
}

TEST_CASE("fat_partition_gf coefficient sums are Bell-like counts") {
  const auto gf = fat_partition_gf(12);
  const reference::FatPartitionTable s(12);
  for (unsigned n = 0; n <= 12; ++n) {
    for (unsigned k = 0; k <= 4; ++k) {
      CHECK(gf.coeff(n).coeff(k) * Rational(factorial(n)) == Rational(s(n, k)));
    }
  }
  const auto capped = fat_partition_gf(12, 2);
  CHECK(capped.coeff(12).cap() == 2);
  CHECK(capped.coeff(9).coeff(2) == gf.coeff(9).coeff(2));
}

TEST_CASE("Bernoulli numbers agree with the binomial recurrence") {
  const auto ref = reference::bernoulli_recurrence(40);
  const auto got = bernoulli_numbers(40);
  REQUIRE(got.size() == ref.size());
  for (std::size_t n = 0; n < ref.size(); ++n) {
    CAPTURE(n);
    CHECK(got[n] == ref[n]);
  }
  CHECK(bernoulli(1) == q(-1, 2));
  CHECK(bernoulli(12) == q(-691, 2730));
  CHECK(bernoulli(13) == q(0));
}

TEST_CASE("closed form for GC2") {
  CHECK(chi_gc2(1) == q(-1, 12));
  CHECK(chi_gc2(2) == q(0));
  CHECK(chi_gc2(3) == q(1, 360));
  CHECK(chi_gc2(5) == q(-1, 1260));
  CHECK_THROWS_AS(chi_gc2(0), UsageError);
  const auto report = verify_gc2(12);
  CHECK(report.passed);
  CHECK(report.checks == 24);
}

TEST_CASE("wick_sum on simple integrands") {
  // exact x^4 -> 3 h^2, x^6/h -> 15 h^2
  TruncatedSeries<HbarLaurent> s(Var::x, 12);
  s.set_coeff(4, HbarLaurent(1));
  s.set_coeff(6, HbarLaurent::monomial(q(1), -1));
  const auto w = wick_sum(s, 2);
  CHECK(w[0] == q(0));
  CHECK(w[2] == q(18));
  const auto alt = wick_sum(s, 2, WickSign::alternating);
  CHECK(alt[2] == q(3 - 15));
  CHECK(double_factorial(5) == 945);
  CHECK(double_factorial(0) == 1);
}

TEST_CASE("wick_sum refuses unsound input") {
  TruncatedSeries<HbarLaurent> low(Var::x, 5);
  CHECK_THROWS_AS(wick_sum(low, 1), RangeError);
  TruncatedSeries<HbarLaurent> steep(Var::x, 6);
  steep.set_coeff(2, HbarLaurent::monomial(q(1), -1));
  CHECK_THROWS_AS(wick_sum(steep, 1), ConsistencyError);
  TruncatedSeries<HbarLaurent> vague(Var::x, 6);
  vague.set_coeff(0, HbarLaurent::from_coeffs(0, {q(1)}, 0));
  CHECK_THROWS_AS(wick_sum(vague, 1), RangeError);
  CHECK_THROWS_AS(wick_sum(TruncatedSeries<HbarLaurent>(Var::hbar, 6), 1), UsageError);
  CHECK_THROWS_AS(compute_F(3, 17), RangeError);
  CHECK_THROWS_AS(compute_F(-1), UsageError);
}

TEST_CASE("integrand respects the valuation bound") {
  const auto s = graph_integrand(30, +1);
  CHECK_NOTHROW(check_valuation_bound(s));
  CHECK(s.coeff(3).valuation() == -1);
  CHECK(s.coeff(6).valuation() == -2);
  CHECK(s.coeff(6).coeff(-2) == q(1, 72));
}

TEST_CASE("raising the x-cap does not change known coefficients") {
  for (int order : {1, 4, 8}) {
    CAPTURE(order);
    const auto base = static_cast<std::size_t>(6 * order);
    CHECK(compute_F(order).coefficients == compute_F(order, base + 2).coefficients);
    CHECK(compute_E(order).coefficients == compute_E(order, base + 2).coefficients);
    CHECK(compute_X(order).coefficients == compute_X(order, base + 7).coefficients);
  }
}

TEST_CASE("exponential formula for E and X") {
  const auto e = compute_E(12);
  const auto x = compute_X(12);
  CHECK(exp_series(x.as_series()) == e.as_series());
  CHECK(reference::exp_recurrence(x.coefficients) == e.coefficients);
}
