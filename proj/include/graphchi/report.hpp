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

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "graphchi/rational.hpp"
#include "graphchi/series.hpp"

namespace graphchi {

/// A computed h-series, coefficients indexed by h-power 0..order.
struct SeriesReport {
  std::string name;
  int order = 0;
  std::vector<Rational> coefficients;
  std::map<std::string, std::string> meta;

  const Rational& at(int n) const;
  TruncatedSeries<Rational> as_series() const;
};

/// Names a SeriesReport may carry.
bool is_registered_series_name(const std::string& name);

SeriesReport make_report(const std::string& name, const TruncatedSeries<Rational>& series,
                         std::map<std::string, std::string> meta = {});

/// First failing check of a verification run.
struct VerificationFailure {
  long order = 0;
  std::string expected;
  std::string actual;
  std::string message;
};

struct VerificationReport {
  std::string name;
  bool passed = true;
  std::size_t checks = 0;
  std::optional<VerificationFailure> failure;

  /// Records one check; only the first failure is kept.
  void check(bool ok, long order, const std::string& expected, const std::string& actual,
             const std::string& message);
};

}  // namespace graphchi
