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

#include "graphchi/trees.hpp"

#include <map>
#include <string>

#include "graphchi/errors.hpp"
#include "graphchi/genfunc.hpp"

namespace graphchi {

namespace {

template <CoefficientRing R>
TruncatedSeries<R> iterate_rooted(std::size_t x_cap, const R& lambda, std::size_t iterations) {
  if (x_cap < 1) throw UsageError("rooted_gf requires x_cap >= 1");
  const auto x = TruncatedSeries<R>::variable(Var::x, x_cap);
  const auto one = TruncatedSeries<R>::one(Var::x, x_cap);
  auto r = x;
  for (std::size_t i = 0; i < iterations; ++i) {
    r = x + scale(exp_series(r) - one - r, lambda);
  }
  return r;
}

}  // namespace

TruncatedSeries<LambdaPoly> rooted_gf_iterate(std::size_t x_cap, const LambdaPoly& lambda,
                                              std::size_t iterations) {
  return iterate_rooted(x_cap, lambda, iterations);
}

TruncatedSeries<Rational> rooted_gf_iterate(std::size_t x_cap, const Rational& lambda,
                                            std::size_t iterations) {
  return iterate_rooted(x_cap, lambda, iterations);
}

TruncatedSeries<LambdaPoly> rooted_gf_symbolic(std::size_t x_cap) {
  return rooted_gf_iterate(x_cap, LambdaPoly::monomial(Rational(1), 1), x_cap);
}

TruncatedSeries<Rational> rooted_gf_signed(std::size_t x_cap) {
  return rooted_gf_iterate(x_cap, Rational(-1), x_cap);
}

TreeGF make_tree_gf(std::size_t x_cap, TreeMode mode) {
  TreeGF out{mode, rooted_gf_signed(x_cap), tree_gf(x_cap)};
  if (mode == TreeMode::symbolic) out.rooted = rooted_gf_symbolic(x_cap);
  return out;
}

TruncatedSeries<Rational> tree_gf(std::size_t x_cap) {
  if (x_cap < 3) throw UsageError("tree_gf requires x_cap >= 3");
  const auto x = TruncatedSeries<Rational>::variable(Var::x, x_cap);
  const auto one_plus_x = TruncatedSeries<Rational>::one(Var::x, x_cap) + x;
  TruncatedSeries<Rational> x_sq(Var::x, x_cap);
  x_sq.set_coeff(2, Rational(1, 2));
  return one_plus_x * log_series(one_plus_x) - x - x_sq;
}

BigInt signed_rooted_count(unsigned n) {
  if (n < 1) throw UsageError("signed_rooted_count requires n >= 1");
  BigInt out = factorial(n - 1);
  return n % 2 == 1 ? out : BigInt(-out);
}

BigInt signed_unrooted_count(unsigned n) {
  if (n < 3) throw UsageError("signed_unrooted_count requires n >= 3");
  BigInt out = factorial(n - 2);
  return n % 2 == 0 ? out : BigInt(-out);
}

TruncatedSeries<Rational> compute_expY(int order, std::optional<std::size_t> x_cap) {
  if (order < 0) throw UsageError("series order must be >= 0");
  const std::size_t cap = std::max<std::size_t>(x_cap.value_or(default_x_cap(order)), 3);
  const auto integrand = exp_scaled(tree_gf(cap), HbarLaurent::monomial(Rational(-1), -1));
  return wick_sum(integrand, order);
}

SeriesReport compute_Y(int order, std::optional<std::size_t> x_cap) {
  if (order < 1) throw UsageError("compute_Y requires order >= 1");
  const std::size_t cap = x_cap.value_or(default_x_cap(order));
  return make_report("Y", log_series(compute_expY(order, cap)),
                     {{"order", std::to_string(order)},
                      {"x_cap", std::to_string(cap)},
                      {"route", "log(wick_sum(exp(-h^-1 T)))"}});
}

TruncatedSeries<Rational> renormalized_integral(const TruncatedSeries<Rational>& y, int order) {
  if (order < 1) throw UsageError("renormalized integral requires order >= 1");
  if (y.cap() < static_cast<std::size_t>(order)) {
    throw RangeError("Y known only through h^" + std::to_string(y.cap()));
  }
  const auto n_max = static_cast<HbarLaurent::Exponent>(order);
  const std::size_t x_cap = default_x_cap(order);

  // The full action -h^{-1}(e^x - 1 - x) contains -x^2/(2h). That part is the
  // Gaussian weight wick_sum applies, so only the cubic-and-higher potential
  // stays in the exponent.
  const auto potential_part = graph_integrand(x_cap, -1);

  // Counterterms x/2 + Y(-h e^{-x}) = x/2 + sum_n y_n (-h)^n sum_j (-n x)^j / j!.
  // A term h^n x^j reaches h^{n + j/2} after the Wick sum, so the x^j
  // coefficient is only needed through h^{N - floor(j/2)}.
  std::vector<HbarLaurent> counter(x_cap + 1);
  for (std::size_t j = 0; j <= x_cap; ++j) {
    const auto cap = n_max - static_cast<HbarLaurent::Exponent>(j / 2);
    std::vector<Rational> coeffs(static_cast<std::size_t>(order) + 1);
    for (int n = 1; n <= order; ++n) {
      // (-1)^n (-n)^j / j!
      BigInt power;
      mpz_pow_ui(power.get_mpz_t(), BigInt(n).get_mpz_t(), j);
      const bool negative = (n + j) % 2 == 1;
      coeffs[static_cast<std::size_t>(n)] =
          y.coeff(static_cast<std::size_t>(n)) * Rational(negative ? BigInt(-power) : power, factorial(j));
    }
    if (j == 1) coeffs[0] = Rational(1, 2);
    counter[j] = HbarLaurent::from_coeffs(0, std::move(coeffs), cap);
  }
  // x^0 part has h-valuation >= 1: exponentiate it in h alone.
  TruncatedSeries<Rational> constant_part(Var::hbar, static_cast<std::size_t>(order));
  for (int n = 1; n <= order; ++n) {
    constant_part.set_coeff(static_cast<std::size_t>(n), counter[0].coeff(n));
  }
  const auto exp_constant = exp_series(constant_part);
  counter[0] = HbarLaurent{};
  const auto exp_counter = exp_series(TruncatedSeries<HbarLaurent>(Var::x, x_cap, std::move(counter)));

  const auto integrand = scale(potential_part * exp_counter,
                               HbarLaurent::from_coeffs(0, exp_constant.coeffs(), n_max));
  return wick_sum(integrand, order);
}

VerificationReport renorm_check_with(const TruncatedSeries<Rational>& y, int order) {
  VerificationReport report;
  report.name = "renorm";
  const auto integral = renormalized_integral(y, order);
  report.check(integral.coeff(0) == Rational(1), 0, "1", integral.coeff(0).to_string(),
               "constant term of the renormalized integral");
  for (int n = 1; n <= order; ++n) {
    const auto& c = integral.coeff(static_cast<std::size_t>(n));
    report.check(c.is_zero(), n, "0", c.to_string(),
                 "renormalized integral has a nonzero h^" + std::to_string(n) + " term");
  }
  return report;
}

VerificationReport renorm_check(int order) {
  return renorm_check_with(compute_Y(order).as_series(), order);
}

VerificationReport negativity_scan(int order) {
  if (order < 1) throw UsageError("negativity_scan requires order >= 1");
  VerificationReport report;
  report.name = "negativity";
  const auto y = compute_Y(order);
  for (int n = 1; n <= order; ++n) {
    report.check(y.at(n).sign() < 0, n, "< 0", y.at(n).to_string(),
                 "chi(Out(F_" + std::to_string(n + 1) + ")) is not negative");
  }
  return report;
}

}  // namespace graphchi
