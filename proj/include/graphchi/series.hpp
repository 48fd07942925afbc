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

#pragma once

#include <concepts>
#include <cstddef>
#include <optional>
#include <ostream>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "graphchi/errors.hpp"
#include "graphchi/laurent.hpp"
#include "graphchi/rational.hpp"

namespace graphchi {

/// Which formal variable a series is in: x marks half-edges (or leaves), lambda
/// marks vertices, h marks minus the Euler characteristic.
enum class Var { x, lambda, hbar };

inline std::string_view var_name(Var v) {
  switch (v) {
    case Var::x:
      return "x";
    case Var::lambda:
      return "l";
    case Var::hbar:
      return "h";
  }
  return "?";
}

/// Exact coefficient ring. R{} is zero and R{1} is one.
template <class R>
concept CoefficientRing = std::regular<R> && requires(R a, const R& b, const Rational& q) {
  R{1};
  { a + b } -> std::convertible_to<R>;
  { a - b } -> std::convertible_to<R>;
  { a * b } -> std::convertible_to<R>;
  { a * q } -> std::convertible_to<R>;
  { -a } -> std::convertible_to<R>;
  { is_zero(b) } -> std::convertible_to<bool>;
};

/// Power series in one variable known exactly through degree `cap()`.
/// Coefficients above the cap do not exist; reading one is a RangeError.
template <CoefficientRing R>
class TruncatedSeries {
 public:
  TruncatedSeries(Var var, std::size_t cap) : var_(var), coeffs_(cap + 1) {}
  TruncatedSeries(Var var, std::size_t cap, std::vector<R> coeffs)
      : var_(var), coeffs_(std::move(coeffs)) {
    coeffs_.resize(cap + 1);
  }

  static TruncatedSeries constant(Var var, std::size_t cap, R value) {
    TruncatedSeries out(var, cap);
    out.coeffs_[0] = std::move(value);
    return out;
  }
  static TruncatedSeries one(Var var, std::size_t cap) { return constant(var, cap, R{1}); }
  /// The series consisting of the bare variable.
  static TruncatedSeries variable(Var var, std::size_t cap) {
    TruncatedSeries out(var, cap);
    if (cap >= 1) out.coeffs_[1] = R{1};
    return out;
  }

  Var var() const { return var_; }
  std::size_t cap() const { return coeffs_.size() - 1; }
  const std::vector<R>& coeffs() const { return coeffs_; }

  const R& coeff(std::size_t degree) const {
    if (degree > cap()) {
      throw RangeError("coefficient of " + std::string(var_name(var_)) + "^" +
                       std::to_string(degree) + " requested above cap " +
                       std::to_string(cap()));
    }
    return coeffs_[degree];
  }
  const R& operator[](std::size_t degree) const { return coeff(degree); }

  void set_coeff(std::size_t degree, R value) {
    if (degree > cap()) {
      throw RangeError("cannot set degree " + std::to_string(degree) + " above cap " +
                       std::to_string(cap()));
    }
    coeffs_[degree] = std::move(value);
  }

  /// Lowers the cap. Raising it would invent coefficients, so that is a RangeError.
  TruncatedSeries truncated(std::size_t cap) const {
    if (cap > this->cap()) {
      throw RangeError("cannot extend a series from cap " + std::to_string(this->cap()) +
                       " to " + std::to_string(cap));
    }
    return TruncatedSeries(var_, cap, std::vector<R>(coeffs_.begin(), coeffs_.begin() + cap + 1));
  }

  /// Degree of the first nonzero coefficient, if any.
  std::optional<std::size_t> min_degree() const {
    for (std::size_t d = 0; d < coeffs_.size(); ++d) {
      if (!is_zero(coeffs_[d])) return d;
    }
    return std::nullopt;
  }

  friend bool operator==(const TruncatedSeries& a, const TruncatedSeries& b) {
    return a.var_ == b.var_ && a.coeffs_ == b.coeffs_;
  }

  friend std::ostream& operator<<(std::ostream& os, const TruncatedSeries& s) {
    bool first = true;
    for (std::size_t d = 0; d < s.coeffs_.size(); ++d) {
      if (is_zero(s.coeffs_[d])) continue;
      if (!first) os << " + ";
      first = false;
      os << "(" << s.coeffs_[d] << ")";
      if (d > 0) os << "*" << var_name(s.var_) << "^" << d;
    }
    if (first) os << "0";
    return os << " + O(" << var_name(s.var_) << "^" << s.cap() + 1 << ")";
  }

 private:
  Var var_;
  std::vector<R> coeffs_;
};

namespace detail {

inline void require_same_var(Var a, Var b, const char* op) {
  if (a != b) {
    throw UsageError(std::string(op) + ": variable mismatch (" + std::string(var_name(a)) +
                     " vs " + std::string(var_name(b)) + ")");
  }
}

template <CoefficientRing R>
bool is_one(const R& r) {
  return is_zero(r - R{1});
}

}  // namespace detail

template <CoefficientRing R>
TruncatedSeries<R> add(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  detail::require_same_var(a.var(), b.var(), "add");
  const std::size_t cap = std::min(a.cap(), b.cap());
  TruncatedSeries<R> out(a.var(), cap);
  for (std::size_t d = 0; d <= cap; ++d) out.set_coeff(d, a.coeff(d) + b.coeff(d));
  return out;
}

template <CoefficientRing R>
TruncatedSeries<R> sub(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  detail::require_same_var(a.var(), b.var(), "sub");
  const std::size_t cap = std::min(a.cap(), b.cap());
  TruncatedSeries<R> out(a.var(), cap);
  for (std::size_t d = 0; d <= cap; ++d) out.set_coeff(d, a.coeff(d) - b.coeff(d));
  return out;
}

/// Cauchy product truncated to the smaller cap.
template <CoefficientRing R>
TruncatedSeries<R> mul(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  detail::require_same_var(a.var(), b.var(), "mul");
  const std::size_t cap = std::min(a.cap(), b.cap());
  std::vector<R> out(cap + 1);
  for (std::size_t i = 0; i <= cap; ++i) {
    const R& ai = a.coeff(i);
    if (is_zero(ai)) continue;
    for (std::size_t j = 0; i + j <= cap; ++j) {
      const R& bj = b.coeff(j);
      if (is_zero(bj)) continue;
      out[i + j] += ai * bj;
    }
  }
  return TruncatedSeries<R>(a.var(), cap, std::move(out));
}

template <CoefficientRing R, class S>
  requires requires(const R& r, const S& s) { { r * s } -> std::convertible_to<R>; }
TruncatedSeries<R> scale(const TruncatedSeries<R>& a, const S& factor) {
  TruncatedSeries<R> out(a.var(), a.cap());
  for (std::size_t d = 0; d <= a.cap(); ++d) out.set_coeff(d, a.coeff(d) * factor);
  return out;
}

template <CoefficientRing R>
TruncatedSeries<R> operator+(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  return add(a, b);
}
template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  return sub(a, b);
}
template <CoefficientRing R>
TruncatedSeries<R> operator*(const TruncatedSeries<R>& a, const TruncatedSeries<R>& b) {
  return mul(a, b);
}
template <CoefficientRing R>
TruncatedSeries<R> operator-(const TruncatedSeries<R>& a) {
  return scale(a, Rational(-1));
}

/// sum_{j>=0} s^j / j!, evaluated by Horner's rule
///   1 + s(1 + s/2(1 + s/3(...)))
/// with exactly as many nested levels as can reach the cap.
template <CoefficientRing R>
TruncatedSeries<R> exp_series(const TruncatedSeries<R>& s) {
  if (!is_zero(s.coeff(0))) throw DomainError("exp_series: nonzero constant term");
  const auto one = TruncatedSeries<R>::one(s.var(), s.cap());
  const auto lowest = s.min_degree();
  if (!lowest) return one;
  TruncatedSeries<R> acc = one;
  for (std::size_t j = s.cap() / *lowest; j >= 1; --j) {
    acc = one + scale(mul(s, acc), Rational(1, static_cast<long>(j)));
  }
  return acc;
}

/// sum_{j>=1} (-1)^{j+1} (s-1)^j / j, by Horner's rule in u = s - 1.
template <CoefficientRing R>
TruncatedSeries<R> log_series(const TruncatedSeries<R>& s) {
  if (!detail::is_one(s.coeff(0))) throw DomainError("log_series: constant term is not 1");
  auto u = s;
  u.set_coeff(0, R{});
  const auto lowest = u.min_degree();
  if (!lowest) return TruncatedSeries<R>(s.var(), s.cap());
  auto term = [](std::size_t j) {
    return Rational(j % 2 == 1 ? 1 : -1, static_cast<long>(j));
  };
  const std::size_t top = s.cap() / *lowest;
  auto acc = TruncatedSeries<R>::constant(s.var(), s.cap(), R{term(top)});
  for (std::size_t j = top - 1; j >= 1; --j) {
    acc = TruncatedSeries<R>::constant(s.var(), s.cap(), R{term(j)}) + mul(u, acc);
  }
  return mul(u, acc);
}

/// outer(inner), truncated to inner's cap. The inner series needs a zero
/// constant term, and outer must be known far enough to reach that cap.
template <CoefficientRing R>
TruncatedSeries<R> compose(const TruncatedSeries<R>& outer, const TruncatedSeries<R>& inner) {
  if (!is_zero(inner.coeff(0))) throw DomainError("compose: inner series has a constant term");
  const std::size_t cap = inner.cap();
  const auto lowest = inner.min_degree();
  const auto constant = TruncatedSeries<R>::constant(inner.var(), cap, outer.coeff(0));
  if (!lowest) return constant;
  const std::size_t top = cap / *lowest;
  if (top > outer.cap()) {
    throw RangeError("compose: outer series known to degree " + std::to_string(outer.cap()) +
                     " but degree " + std::to_string(top) + " is needed");
  }
  auto acc = TruncatedSeries<R>::constant(inner.var(), cap, outer.coeff(top));
  for (std::size_t j = top; j-- > 0;) {
    acc = TruncatedSeries<R>::constant(inner.var(), cap, outer.coeff(j)) + mul(inner, acc);
  }
  return acc;
}

/// exp(c * phi) = sum_k c^k phi^k / k! for a rational series phi with zero
/// constant term and a ring element c. Powers of phi stay rational, so this is
/// far cheaper than exp_series(scale(phi, c)) when c is a monomial in h or lambda.
template <CoefficientRing R>
TruncatedSeries<R> exp_scaled(const TruncatedSeries<Rational>& phi, const R& c) {
  if (!phi.coeff(0).is_zero()) throw DomainError("exp_scaled: nonzero constant term");
  const std::size_t cap = phi.cap();
  std::vector<R> out(cap + 1);
  out[0] = R{1};
  const auto lowest = phi.min_degree();
  if (!lowest) return TruncatedSeries<R>(phi.var(), cap, std::move(out));
  auto power = TruncatedSeries<Rational>::one(phi.var(), cap);  // phi^k / k!
  R c_power{1};
  for (std::size_t k = 1; k * *lowest <= cap; ++k) {
    power = scale(mul(power, phi), Rational(1, static_cast<long>(k)));
    c_power = c_power * c;
    for (std::size_t d = k * *lowest; d <= cap; ++d) {
      if (!power.coeff(d).is_zero()) out[d] += c_power * power.coeff(d);
    }
  }
  return TruncatedSeries<R>(phi.var(), cap, std::move(out));
}

/// Formal derivative; the cap drops by one.
template <CoefficientRing R>
TruncatedSeries<R> derivative(const TruncatedSeries<R>& s) {
  if (s.cap() == 0) throw RangeError("derivative of a series with cap 0");
  TruncatedSeries<R> out(s.var(), s.cap() - 1);
  for (std::size_t d = 1; d <= s.cap(); ++d) {
    out.set_coeff(d - 1, s.coeff(d) * Rational(static_cast<long>(d)));
  }
  return out;
}

/// Multiplicative inverse of a rational series with nonzero constant term.
inline TruncatedSeries<Rational> inverse_series(const TruncatedSeries<Rational>& s) {
  const Rational& a0 = s.coeff(0);
  if (a0.is_zero()) throw DomainError("inverse_series: zero constant term");
  TruncatedSeries<Rational> out(s.var(), s.cap());
  out.set_coeff(0, Rational(1) / a0);
  for (std::size_t n = 1; n <= s.cap(); ++n) {
    Rational acc;
    for (std::size_t k = 1; k <= n; ++k) acc += s.coeff(k) * out.coeff(n - k);
    out.set_coeff(n, -acc / a0);
  }
  return out;
}

}  // namespace graphchi
