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
#include "graphchi/trees.hpp"
#include "reference.hpp"

using namespace graphchi;

namespace {

using RSeries = TruncatedSeries<Rational>;

RSeries log_one_plus_x(std::size_t cap) {
  RSeries out(Var::x, cap);
  for (std::size_t n = 1; n <= cap; ++n) out.set_coeff(n, Rational(n % 2 == 1 ? 1 : -1, static_cast<long>(n)));
  return out;
}

}  // namespace

TEST_CASE("signed rooted trees sum to log(1+x)") {
  const auto r = rooted_gf_signed(30);
  CHECK(r == log_one_plus_x(30));
  const auto one_plus_x = RSeries::one(Var::x, 30) + RSeries::variable(Var::x, 30);
  CHECK(exp_series(r) == one_plus_x);
}

TEST_CASE("symbolic rooted series counts trees by internal vertices") {
  const std::size_t cap = 8;
  const auto r = rooted_gf_symbolic(cap);
  const auto counts = reference::rooted_tree_counts(cap, 1);
  // Schroeder's fourth problem: 1, 1, 4, 26, 236, 2752, 39208
  CHECK(counts[4] == 26);
  CHECK(counts[7] == 39208);
  for (std::size_t n = 1; n <= cap; ++n) {
    CAPTURE(n);
    Rational total, signed_total;
    const auto& c = r.coeff(n);
    for (LambdaPoly::Exponent k = 0; k < static_cast<LambdaPoly::Exponent>(n); ++k) {
      total += c.coeff(k);
      signed_total += k % 2 == 0 ? c.coeff(k) : -c.coeff(k);
    }
    CHECK(total * Rational(factorial(static_cast<unsigned>(n))) == Rational(counts[n]));
    CHECK(signed_total * Rational(factorial(static_cast<unsigned>(n))) ==
          Rational(signed_rooted_count(static_cast<unsigned>(n))));
  }
  // three leaves: one vertex with three children (lambda) or a cherry below the root (3 lambda^2)
  CHECK(r.coeff(3).coeff(1) * Rational(6) == Rational(1));
  CHECK(r.coeff(3).coeff(2) * Rational(6) == Rational(3));
}

TEST_CASE("symbolic fixed point specializes to the signed series") {
  const auto sym = rooted_gf_symbolic(9);
  const auto num = rooted_gf_signed(9);
  for (std::size_t n = 0; n <= 9; ++n) {
    Rational at_minus_one;
    const auto& c = sym.coeff(n);
    if (!c.is_zero()) {
      for (auto k = c.valuation(); k <= c.max_exponent(); ++k) {
        at_minus_one += k % 2 == 0 ? c.coeff(k) : -c.coeff(k);
      }
    }
    CHECK(at_minus_one == num.coeff(n));
  }
  const auto tree = make_tree_gf(9, TreeMode::symbolic);
  CHECK(std::holds_alternative<TruncatedSeries<LambdaPoly>>(tree.rooted));
  CHECK(std::get<TruncatedSeries<LambdaPoly>>(tree.rooted) == sym);
  CHECK(std::get<RSeries>(make_tree_gf(9, TreeMode::lambda_m1).rooted) == num);
}

TEST_CASE("signed counts match the recurrence and the series") {
  const auto ref = reference::rooted_tree_counts(12, -1);
  const auto r = rooted_gf_signed(12);
  const auto t = tree_gf(12);
  for (unsigned n = 1; n <= 12; ++n) {
    CAPTURE(n);
    CHECK(signed_rooted_count(n) == ref[n]);
    CHECK(r.coeff(n) * Rational(factorial(n)) == Rational(signed_rooted_count(n)));
    if (n >= 3) {
      CHECK(t.coeff(n) * Rational(factorial(n)) == Rational(signed_unrooted_count(n)));
      // rooting at the last leaf: unrooted(n) = rooted(n-1)
      CHECK(signed_unrooted_count(n) == signed_rooted_count(n - 1));
    }
  }
  CHECK(signed_rooted_count(2) == -1);
  CHECK(signed_rooted_count(3) == 2);
  CHECK(signed_unrooted_count(4) == 2);
  // T' = R - x
  CHECK(derivative(t) == (r - RSeries::variable(Var::x, 12)).truncated(11));
  CHECK_THROWS_AS(signed_unrooted_count(2), UsageError);
  CHECK_THROWS_AS(tree_gf(2), UsageError);
}

TEST_CASE("Y has the published coefficients") {
  const auto y = compute_Y(3);
  CHECK(y.at(0) == Rational(0));
  CHECK(y.at(1) == Rational(-1, 24));
  CHECK(y.at(2) == Rational(-1, 48));
  CHECK(y.at(3) == Rational(-161, 5760));
  const auto y5 = compute_Y(5);
  CHECK(y5.at(4) == Rational(-367, 5760));
  CHECK(y5.at(5) == Rational(-120257, 580608));
  CHECK_THROWS_AS(compute_Y(0), UsageError);
}

TEST_CASE("exp(Y) equals the tree integral") {
  for (int order : {1, 5, 10}) {
    CAPTURE(order);
    CHECK(exp_series(compute_Y(order).as_series()) == compute_expY(order));
  }
}

TEST_CASE("Y is stable under a larger x-cap") {
  for (int order : {2, 6, 9}) {
    CAPTURE(order);
    const auto cap = static_cast<std::size_t>(6 * order);
    CHECK(compute_Y(order).coefficients == compute_Y(order, cap + 2).coefficients);
  }
}

TEST_CASE("renormalized integral is exactly 1") {
  const auto report = renorm_check(8);
  CHECK(report.passed);
  CHECK(report.checks == 9);
  const auto integral = renormalized_integral(compute_Y(5).as_series(), 5);
  CHECK(integral == RSeries::one(Var::hbar, 5));
}

TEST_CASE("renormalized integral detects a wrong Y") {
  auto y = compute_Y(4).as_series();
  y.set_coeff(2, y.coeff(2) + Rational(1, 1000));
  const auto report = renorm_check_with(y, 4);
  CHECK_FALSE(report.passed);
  REQUIRE(report.failure.has_value());
  CHECK(report.failure->order == 2);
  CHECK_THROWS_AS(renormalized_integral(y, 6), RangeError);
}

TEST_CASE("Y coefficients are negative") {
  const auto report = negativity_scan(14);
  CHECK(report.passed);
  CHECK(report.checks == 14);
}
