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

#include "graphchi/report.hpp"

#include <algorithm>
#include <array>

#include "graphchi/errors.hpp"

namespace graphchi {

namespace {
constexpr std::array<const char*, 5> kSeriesNames = {"F", "E", "X", "Y", "expY"};
}

bool is_registered_series_name(const std::string& name) {
  return std::find(kSeriesNames.begin(), kSeriesNames.end(), name) != kSeriesNames.end();
}

const Rational& SeriesReport::at(int n) const {
  if (n < 0 || n > order) {
    throw RangeError("series " + name + " has no coefficient h^" + std::to_string(n) +
                     " (order " + std::to_string(order) + ")");
  }
  return coefficients[static_cast<std::size_t>(n)];
}

TruncatedSeries<Rational> SeriesReport::as_series() const {
  return TruncatedSeries<Rational>(Var::hbar, static_cast<std::size_t>(order), coefficients);
}

SeriesReport make_report(const std::string& name, const TruncatedSeries<Rational>& series,
                         std::map<std::string, std::string> meta) {
  if (!is_registered_series_name(name)) throw UsageError("unknown series name '" + name + "'");
  if (series.var() != Var::hbar) throw UsageError("series report needs an h-series");
  SeriesReport out;
  out.name = name;
  out.order = static_cast<int>(series.cap());
  out.coefficients = series.coeffs();
  out.meta = std::move(meta);
  return out;
}

void VerificationReport::check(bool ok, long order, const std::string& expected,
                               const std::string& actual, const std::string& message) {
  ++checks;
  if (ok || failure) {
    passed = passed && ok;
    return;
  }
  passed = false;
  failure = VerificationFailure{order, expected, actual, message};
}

}  // namespace graphchi
