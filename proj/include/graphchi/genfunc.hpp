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
#include <string>
#include <vector>

#include "graphchi/laurent.hpp"
#include "graphchi/rational.hpp"
#include "graphchi/report.hpp"
#include "graphchi/series.hpp"

namespace graphchi {

/// A vertex potential: phi(x) with phi_d = 0 below min_degree.
struct PotentialSpec {
  std::string name;
  TruncatedSeries<Rational> series;
  std::size_t min_degree = 0;
};

/// e^x - 1 - x - x^2/2: one corolla of each valence >= 3.
PotentialSpec graph_potential(std::size_t x_cap);

/// x-cap sufficient for h-order N. A graph at h^{m-k} has k <= 2m/3, so
/// m <= 3N half-edge pairs, i.e. x-degree <= 6N.
inline std::size_t default_x_cap(int order) { return 6 * static_cast<std::size_t>(order); }

/// (2m-1)!!, the number of perfect matchings on 2m points. (-1)!! = 1.
BigInt double_factorial(unsigned m);

/// exp(lambda (e^x - 1 - x - x^2/2)). n! [lambda^k x^n] counts partitions of an
/// n-set into k blocks of size >= 3.
TruncatedSeries<LambdaPoly> fat_partition_gf(std::size_t x_cap,
                                             LambdaPoly::Exponent lambda_cap = LambdaPoly::kUncapped);

/// (2m-1)!! [x^{2m}] fat_partition_gf: sum_k |LG(m,k)|/(2m)! lambda^k.
LambdaPoly p_m(unsigned m);

enum class WickSign {
  plain,        // x^{2m} -> (2m-1)!! h^m
  alternating,  // x^{2m} -> (2m-1)!! (-h)^m
};

/// Throws ConsistencyError unless every x^d coefficient has h-valuation >= -floor(d/3).
void check_valuation_bound(const TruncatedSeries<HbarLaurent>& s);

/// Gaussian expectation: sends x^{2m} to (2m-1)!! h^m and odd powers to zero,
/// then collects through h^order.
///
/// Requires x-cap >= 6*order and the valuation bound above. Each x^{2m}
/// coefficient must be known through h^{order-m}, otherwise RangeError.
TruncatedSeries<Rational> wick_sum(const TruncatedSeries<HbarLaurent>& s, int order,
                                   WickSign sign = WickSign::plain);

/// exp(sign * h^{-1} phi(x)) for the graph potential phi, exact in h.
TruncatedSeries<HbarLaurent> graph_integrand(std::size_t x_cap, int sign);

/// Sum over all admissible graphs of h^{-chi(G)}/|Aut G|.
SeriesReport compute_F(int order, std::optional<std::size_t> x_cap = std::nullopt);
/// Same sum signed by (-1)^{e(G)}.
SeriesReport compute_E(int order, std::optional<std::size_t> x_cap = std::nullopt);
/// log E; [h^n] is the Euler characteristic of GC_2 in rank n+1.
SeriesReport compute_X(int order, std::optional<std::size_t> x_cap = std::nullopt);

/// B_0..B_{n_max} from x/(e^x - 1), by series inversion.
std::vector<Rational> bernoulli_numbers(unsigned n_max);
Rational bernoulli(unsigned n);

/// -B_{n+1}/(n(n+1)) for odd n, 0 for even n. Requires n >= 1.
Rational chi_gc2(unsigned n);

/// Compares compute_X(order) against chi_gc2 and checks X(-h) = -X(h).
VerificationReport verify_gc2(int order);

}  // namespace graphchi
