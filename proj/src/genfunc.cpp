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

#include "graphchi/genfunc.hpp"

#include <map>
#include <string>

#include "graphchi/errors.hpp"

namespace graphchi {

PotentialSpec graph_potential(std::size_t x_cap) {
  TruncatedSeries<Rational> phi(Var::x, x_cap);
  for (std::size_t d = 3; d <= x_cap; ++d) phi.set_coeff(d, Rational(BigInt(1), factorial(d)));
  return PotentialSpec{"exp(x)-1-x-x^2/2", std::move(phi), 3};
}

BigInt double_factorial(unsigned m) {
  BigInt out = 1;
  for (unsigned odd = 1; odd < 2 * m; odd += 2) out *= odd;
  return out;
}

TruncatedSeries<LambdaPoly> fat_partition_gf(std::size_t x_cap, LambdaPoly::Exponent lambda_cap) {
  const auto phi = graph_potential(x_cap);
  auto out = exp_scaled(phi.series, LambdaPoly::monomial(Rational(1), 1, lambda_cap));
  if (lambda_cap == LambdaPoly::kUncapped) return out;
  for (std::size_t d = 0; d <= x_cap; ++d) out.set_coeff(d, out.coeff(d).truncated(lambda_cap));
  return out;
}

LambdaPoly p_m(unsigned m) {
  if (m == 0) throw UsageError("p_m requires m >= 1");
  const auto gf = fat_partition_gf(2 * static_cast<std::size_t>(m));
  return gf.coeff(2 * static_cast<std::size_t>(m)) * Rational(double_factorial(m));
}

void check_valuation_bound(const TruncatedSeries<HbarLaurent>& s) {
  for (std::size_t d = 0; d <= s.cap(); ++d) {
    const auto& c = s.coeff(d);
    if (c.is_zero()) continue;
    const auto floor_third = static_cast<HbarLaurent::Exponent>(d / 3);
    if (c.valuation() < -floor_third) {
      throw ConsistencyError("valuation bound violated at x^" + std::to_string(d) + ": h^" +
                             std::to_string(c.valuation()) + " < h^-" +
                             std::to_string(floor_third));
    }
  }
}

TruncatedSeries<Rational> wick_sum(const TruncatedSeries<HbarLaurent>& s, int order,
                                   WickSign sign) {
  if (order < 0) throw UsageError("wick_sum: negative order");
  if (s.var() != Var::x) throw UsageError("wick_sum: integrand must be a series in x");
  if (s.cap() < default_x_cap(order)) {
    throw RangeError("wick_sum: x-cap " + std::to_string(s.cap()) + " is below 6*order = " +
                     std::to_string(default_x_cap(order)));
  }
  check_valuation_bound(s);

  const auto n_max = static_cast<HbarLaurent::Exponent>(order);
  TruncatedSeries<Rational> out(Var::hbar, static_cast<std::size_t>(order));
  std::map<HbarLaurent::Exponent, Rational> negative;  // should all cancel
  BigInt dfact = 1;                                      // (2m-1)!!
  for (std::size_t d = 0; d <= s.cap(); d += 2) {
    const auto m = static_cast<HbarLaurent::Exponent>(d / 2);
    if (m > 0) dfact *= static_cast<unsigned long>(2 * m - 1);
    const auto& c = s.coeff(d);
    if (c.cap() < n_max - m) {
      throw RangeError("wick_sum: x^" + std::to_string(d) + " coefficient known only through h^" +
                       std::to_string(c.cap()) + ", need h^" + std::to_string(n_max - m));
    }
    if (c.is_zero() || c.valuation() + m > n_max) continue;
    Rational weight(dfact);
    if (sign == WickSign::alternating && m % 2 == 1) weight = -weight;
    for (auto e = c.valuation(); e + m <= n_max && e <= c.max_exponent(); ++e) {
      const Rational term = c.coeff(e) * weight;
      if (term.is_zero()) continue;
      const auto n = e + m;
      if (n < 0) {
        negative[n] += term;
      } else {
        out.set_coeff(static_cast<std::size_t>(n), out.coeff(static_cast<std::size_t>(n)) + term);
      }
    }
  }
  for (const auto& [n, value] : negative) {
    if (!value.is_zero()) {
      throw ConsistencyError("wick_sum: h^" + std::to_string(n) + " survives with coefficient " +
                             value.to_string());
    }
  }
  return out;
}

TruncatedSeries<HbarLaurent> graph_integrand(std::size_t x_cap, int sign) {
  const auto phi = graph_potential(x_cap);
  auto s = exp_scaled(phi.series, HbarLaurent::monomial(Rational(sign), -1));
  check_valuation_bound(s);
  return s;
}

namespace {

std::map<std::string, std::string> series_meta(int order, std::size_t x_cap, const char* route) {
  return {{"order", std::to_string(order)},
          {"x_cap", std::to_string(x_cap)},
          {"route", route}};
}

std::size_t resolve_x_cap(int order, std::optional<std::size_t> x_cap) {
  if (order < 0) throw UsageError("series order must be >= 0");
  const std::size_t cap = x_cap.value_or(default_x_cap(order));
  if (cap < default_x_cap(order)) {
    throw RangeError("x-cap " + std::to_string(cap) + " is below 6*order");
  }
  return cap;
}

}  // namespace

SeriesReport compute_F(int order, std::optional<std::size_t> x_cap) {
  const auto cap = resolve_x_cap(order, x_cap);
  return make_report("F", wick_sum(graph_integrand(cap, +1), order),
                     series_meta(order, cap, "wick_sum(exp(h^-1 phi))"));
}

SeriesReport compute_E(int order, std::optional<std::size_t> x_cap) {
  const auto cap = resolve_x_cap(order, x_cap);
  return make_report("E", wick_sum(graph_integrand(cap, +1), order, WickSign::alternating),
                     series_meta(order, cap, "alternating wick_sum(exp(h^-1 phi))"));
}

SeriesReport compute_X(int order, std::optional<std::size_t> x_cap) {
  const auto cap = resolve_x_cap(order, x_cap);
  const auto e = compute_E(order, cap);
  return make_report("X", log_series(e.as_series()), series_meta(order, cap, "log(E)"));
}

std::vector<Rational> bernoulli_numbers(unsigned n_max) {
  // (e^x - 1)/x = sum_k x^k/(k+1)!
  TruncatedSeries<Rational> g(Var::x, n_max);
  for (unsigned k = 0; k <= n_max; ++k) g.set_coeff(k, Rational(BigInt(1), factorial(k + 1)));
  const auto inv = inverse_series(g);
  std::vector<Rational> out;
  out.reserve(n_max + 1);
  for (unsigned n = 0; n <= n_max; ++n) out.push_back(inv.coeff(n) * Rational(factorial(n)));
  return out;
}

Rational bernoulli(unsigned n) { return bernoulli_numbers(n).back(); }

Rational chi_gc2(unsigned n) {
  if (n == 0) throw UsageError("chi_gc2 requires n >= 1");
  if (n % 2 == 0) return Rational{};
  return -bernoulli(n + 1) / Rational(static_cast<long>(n) * static_cast<long>(n + 1));
}

VerificationReport verify_gc2(int order) {
  if (order < 1) throw UsageError("verify_gc2 requires order >= 1");
  VerificationReport report;
  report.name = "gc2";
  const auto x = compute_X(order);
  const auto bern = bernoulli_numbers(static_cast<unsigned>(order) + 1);
  for (int n = 1; n <= order; ++n) {
    const Rational closed =
        n % 2 == 0 ? Rational{} : -bern[static_cast<std::size_t>(n) + 1] / Rational(long{n} * (n + 1));
    report.check(x.at(n) == closed, n, closed.to_string(), x.at(n).to_string(),
                 "[h^" + std::to_string(n) + "]X differs from -B_{n+1}/(n(n+1))");
  }
  // X(-h) = -X(h)
  for (int n = 1; n <= order; ++n) {
    const Rational reflected = n % 2 == 0 ? x.at(n) : -x.at(n);
    report.check(reflected == -x.at(n), n, (-x.at(n)).to_string(), reflected.to_string(),
                 "X(-h) != -X(h)");
  }
  return report;
}

}  // namespace graphchi
