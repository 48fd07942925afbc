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

#include <cstddef>
#include <optional>
#include <variant>

#include "graphchi/laurent.hpp"
#include "graphchi/rational.hpp"
#include "graphchi/report.hpp"
#include "graphchi/series.hpp"

namespace graphchi {

enum class TreeMode {
  symbolic,   // lambda kept as a formal variable
  lambda_m1,  // lambda = -1: each internal vertex signed by -1
};

/// Rooted and unrooted admissible-tree generating functions, x marking leaves.
struct TreeGF {
  TreeMode mode = TreeMode::lambda_m1;
  std::variant<TruncatedSeries<LambdaPoly>, TruncatedSeries<Rational>> rooted;
  TruncatedSeries<Rational> unrooted;
};

/// Iterates R <- x + lambda (e^R - 1 - R) from R = x. After d iterations the
/// coefficients through x^d are final.
TruncatedSeries<LambdaPoly> rooted_gf_iterate(std::size_t x_cap, const LambdaPoly& lambda,
                                              std::size_t iterations);
TruncatedSeries<Rational> rooted_gf_iterate(std::size_t x_cap, const Rational& lambda,
                                            std::size_t iterations);

/// R(lambda, x), iterated exactly x_cap times.
TruncatedSeries<LambdaPoly> rooted_gf_symbolic(std::size_t x_cap);
/// R(-1, x) = log(1 + x).
TruncatedSeries<Rational> rooted_gf_signed(std::size_t x_cap);

TreeGF make_tree_gf(std::size_t x_cap, TreeMode mode);

/// T(x) = -x - x^2/2 + (1+x) log(1+x): signed unrooted trees by leaf count.
TruncatedSeries<Rational> tree_gf(std::size_t x_cap);

/// (-1)^{n+1} (n-1)!: leaf-labeled rooted trees with n leaves, signed by (-1)^v.
BigInt signed_rooted_count(unsigned n);
/// (-1)^n (n-2)!: leaf-labeled trees with n >= 3 leaves, signed by (-1)^v.
BigInt signed_unrooted_count(unsigned n);

/// Wick sum of exp(-h^{-1} T(x)): graphs with a marked forest, weighted by
/// (-1)^{e(F)}/|Aut(G,F)|, connected or not.
TruncatedSeries<Rational> compute_expY(int order,
                                       std::optional<std::size_t> x_cap = std::nullopt);

/// log of compute_expY; [h^n] is chi(Out(F_{n+1})).
SeriesReport compute_Y(int order, std::optional<std::size_t> x_cap = std::nullopt);

/// Wick sum of exp(-h^{-1}(e^x-1-x-x^2/2) + x/2 + Y(-h e^{-x})) through h^order,
/// using the given Y (an h-series of cap >= order). Should be exactly 1.
TruncatedSeries<Rational> renormalized_integral(const TruncatedSeries<Rational>& y, int order);

/// renormalized_integral with the computed Y, checked against 1.
VerificationReport renorm_check(int order);
VerificationReport renorm_check_with(const TruncatedSeries<Rational>& y, int order);

/// Checks [h^n]Y < 0 for 1 <= n <= order.
VerificationReport negativity_scan(int order);

}  // namespace graphchi
