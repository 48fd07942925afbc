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

#include <algorithm>
#include <cstdint>
#include <limits>
#include <ostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "graphchi/errors.hpp"
#include "graphchi/rational.hpp"

namespace graphchi {

struct HbarTag {
  static constexpr bool kAllowNegative = true;
  static constexpr const char* kSymbol = "h";
};

struct LambdaTag {
  static constexpr bool kAllowNegative = false;
  static constexpr const char* kSymbol = "l";
};

/// A Laurent polynomial in one formal variable with exact rational coefficients,
/// known exactly up to and including the exponent `cap()`; everything above the
/// cap is unknown and never stored.
///
/// Caps propagate the way truncated power series demand. For a sum the cap is the
/// smaller of the two. For a product a*b the cap is
///   min(cap(a) + order(b), cap(b) + order(a)),
/// where order() is the valuation, or cap+1 for a truncated zero. Taking the plain
/// minimum of the caps would be wrong once valuations are negative: a factor
/// h^-k pulls unknown terms from above the cap down into the known range.
///
/// The default-constructed value is the exact (uncapped) zero, and integers and
/// rationals convert to exact constants, so `R{}` and `R{1}` are the ring's zero
/// and one.
template <class Tag>
class CappedLaurent {
 public:
  using Exponent = std::int64_t;
  static constexpr Exponent kUncapped = std::numeric_limits<Exponent>::max() / 4;

  CappedLaurent() = default;
  CappedLaurent(const Rational& constant, Exponent cap = kUncapped)  // NOLINT
      : cap_(std::min(cap, kUncapped)) {
    if (0 <= cap_ && !constant.is_zero()) coeffs_.push_back(constant);
  }
  CappedLaurent(int constant) : CappedLaurent(Rational(constant)) {}  // NOLINT

  static CappedLaurent monomial(const Rational& c, Exponent exponent,
                                Exponent cap = kUncapped) {
    return from_coeffs(exponent, {c}, cap);
  }

  static CappedLaurent from_coeffs(Exponent valuation, std::vector<Rational> coeffs,
                                   Exponent cap = kUncapped) {
    CappedLaurent out;
    out.valuation_ = valuation;
    out.coeffs_ = std::move(coeffs);
    out.cap_ = std::min(cap, kUncapped);
    out.normalize();
    return out;
  }

  bool is_zero() const { return coeffs_.empty(); }
  Exponent cap() const { return cap_; }
  bool is_exact() const { return cap_ == kUncapped; }

  /// Lowest exponent with a nonzero coefficient. DomainError on zero.
  Exponent valuation() const {
    if (is_zero()) throw DomainError("valuation of zero");
    return valuation_;
  }
  /// Lower bound on the exponent of the first (possibly unknown) nonzero term.
  Exponent order() const { return is_zero() ? saturating_add(cap_, 1) : valuation_; }
  Exponent max_exponent() const {
    if (is_zero()) throw DomainError("max_exponent of zero");
    return valuation_ + static_cast<Exponent>(coeffs_.size()) - 1;
  }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Rational coeff(Exponent exponent) const {
    if (exponent > cap_) {
      throw RangeError("coefficient of " + std::string(Tag::kSymbol) + "^" +
                       std::to_string(exponent) + " requested above cap " +
                       std::to_string(cap_));
    }
    if (is_zero() || exponent < valuation_) return Rational{};
    const auto idx = static_cast<std::size_t>(exponent - valuation_);
    return idx < coeffs_.size() ? coeffs_[idx] : Rational{};
  }

  CappedLaurent truncated(Exponent cap) const {
    CappedLaurent out = *this;
    out.cap_ = std::min(cap_, std::min(cap, kUncapped));
    out.normalize();
    return out;
  }

  CappedLaurent& operator+=(const CappedLaurent& rhs) { return accumulate(rhs, 1); }
  CappedLaurent& operator-=(const CappedLaurent& rhs) { return accumulate(rhs, -1); }

  CappedLaurent& operator*=(const Rational& scalar) {
    if (scalar.is_zero()) {
      coeffs_.clear();
      return *this;
    }
    for (auto& c : coeffs_) c *= scalar;
    return *this;
  }

  friend CappedLaurent operator*(const CappedLaurent& a, const CappedLaurent& b) {
    CappedLaurent out;
    out.cap_ = std::min(saturating_add(a.cap_, b.order()), saturating_add(b.cap_, a.order()));
    if (a.is_zero() || b.is_zero()) return out;
    out.valuation_ = a.valuation_ + b.valuation_;
    if (out.valuation_ > out.cap_) return out;
    const Exponent top = std::min(a.max_exponent() + b.max_exponent(), out.cap_);
    out.coeffs_.assign(static_cast<std::size_t>(top - out.valuation_ + 1), Rational{});
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      if (a.coeffs_[i].is_zero()) continue;
      const Exponent ea = a.valuation_ + static_cast<Exponent>(i);
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        const Exponent e = ea + b.valuation_ + static_cast<Exponent>(j);
        if (e > top) break;
        out.coeffs_[static_cast<std::size_t>(e - out.valuation_)] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    out.normalize();
    return out;
  }
  CappedLaurent& operator*=(const CappedLaurent& rhs) { return *this = *this * rhs; }

  friend CappedLaurent operator+(CappedLaurent a, const CappedLaurent& b) { return a += b; }
  friend CappedLaurent operator-(CappedLaurent a, const CappedLaurent& b) { return a -= b; }
  friend CappedLaurent operator*(CappedLaurent a, const Rational& s) { return a *= s; }
  friend CappedLaurent operator*(const Rational& s, CappedLaurent a) { return a *= s; }
  friend CappedLaurent operator-(CappedLaurent a) { return a *= Rational(-1); }

  /// Same known coefficients and same cap.
  friend bool operator==(const CappedLaurent& a, const CappedLaurent& b) {
    return a.cap_ == b.cap_ && a.coeffs_ == b.coeffs_ &&
           (a.is_zero() || a.valuation_ == b.valuation_);
  }

  std::string to_string() const {
    std::ostringstream os;
    if (is_zero()) {
      os << "0";
    } else {
      bool first = true;
      for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        if (coeffs_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        const Exponent e = valuation_ + static_cast<Exponent>(i);
        os << coeffs_[i];
        if (e != 0) os << "*" << Tag::kSymbol << "^" << e;
      }
    }
    if (!is_exact()) os << " + O(" << Tag::kSymbol << "^" << cap_ + 1 << ")";
    return os.str();
  }

  friend std::ostream& operator<<(std::ostream& os, const CappedLaurent& v) {
    return os << v.to_string();
  }

 private:
  static Exponent saturating_add(Exponent a, Exponent b) {
    if (a >= kUncapped || b >= kUncapped) return kUncapped;
    return std::min(a + b, kUncapped);
  }

  CappedLaurent& accumulate(const CappedLaurent& rhs, int sign) {
    const Exponent cap = std::min(cap_, rhs.cap_);
    if (rhs.is_zero()) {
      cap_ = cap;
      normalize();
      return *this;
    }
    if (is_zero()) {
      coeffs_ = rhs.coeffs_;
      valuation_ = rhs.valuation_;
      if (sign < 0) {
        for (auto& c : coeffs_) c = -c;
      }
      cap_ = cap;
      normalize();
      return *this;
    }
    const Exponent lo = std::min(valuation_, rhs.valuation_);
    const Exponent hi = std::max(max_exponent(), rhs.max_exponent());
    if (lo < valuation_) {
      coeffs_.insert(coeffs_.begin(), static_cast<std::size_t>(valuation_ - lo), Rational{});
      valuation_ = lo;
    }
    coeffs_.resize(static_cast<std::size_t>(hi - lo + 1));
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      auto& slot = coeffs_[static_cast<std::size_t>(rhs.valuation_ - lo) + j];
      if (sign > 0) {
        slot += rhs.coeffs_[j];
      } else {
        slot -= rhs.coeffs_[j];
      }
    }
    cap_ = cap;
    normalize();
    return *this;
  }

  void normalize() {
    if (!coeffs_.empty() && valuation_ + static_cast<Exponent>(coeffs_.size()) - 1 > cap_) {
      const Exponent keep = cap_ - valuation_ + 1;
      coeffs_.resize(keep > 0 ? static_cast<std::size_t>(keep) : 0);
    }
    while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
    std::size_t lead = 0;
    while (lead < coeffs_.size() && coeffs_[lead].is_zero()) ++lead;
    if (lead == coeffs_.size()) {
      coeffs_.clear();
      valuation_ = 0;
      return;
    }
    if (lead > 0) {
      coeffs_.erase(coeffs_.begin(), coeffs_.begin() + static_cast<std::ptrdiff_t>(lead));
      valuation_ += static_cast<Exponent>(lead);
    }
    if constexpr (!Tag::kAllowNegative) {
      if (valuation_ < 0) throw DomainError("negative exponent in a polynomial ring");
    }
  }

  Exponent valuation_ = 0;
  std::vector<Rational> coeffs_;
  Exponent cap_ = kUncapped;
};

/// Laurent polynomials in the formal loop-order variable h (hbar).
using HbarLaurent = CappedLaurent<HbarTag>;
/// Polynomials in lambda, which marks vertex (or tree) counts.
using LambdaPoly = CappedLaurent<LambdaTag>;

inline bool is_zero(const Rational& r) { return r.is_zero(); }
template <class Tag>
bool is_zero(const CappedLaurent<Tag>& r) {
  return r.is_zero();
}

}  // namespace graphchi
