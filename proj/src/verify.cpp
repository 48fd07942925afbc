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

#include "graphchi/verify.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <functional>
#include <sstream>

#include "graphchi/errors.hpp"
#include "graphchi/genfunc.hpp"
#include "graphchi/trees.hpp"

namespace graphchi {

namespace {

constexpr std::array<const char*, 5> kSuites = {"all", "gc2", "trees", "oracle", "renorm"};

class Runner {
 public:
  void run(const std::string& name, const std::function<void(VerificationReport&)>& body) {
    const auto start = std::chrono::steady_clock::now();
    VerificationReport report;
    report.name = name;
    try {
      body(report);
    } catch (const std::exception& e) {
      report.check(false, 0, "no error", e.what(), "check threw");
    }
    const std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - start;
    checks_.push_back(TimedCheck{std::move(report), elapsed.count()});
  }
  std::vector<TimedCheck> take() { return std::move(checks_); }

 private:
  std::vector<TimedCheck> checks_;
};

void absorb(VerificationReport& into, const VerificationReport& from) {
  into.checks += from.checks;
  if (from.passed) return;
  into.passed = false;
  if (!into.failure) into.failure = from.failure;
}

template <class A, class B>
void expect_equal(VerificationReport& r, long order, const A& expected, const B& actual,
                  const std::string& message) {
  std::ostringstream e, a;
  e << expected;
  a << actual;
  r.check(expected == actual, order, e.str(), a.str(), message);
}

void gc2_suite(Runner& run, const VerifyConfig& cfg) {
  const int order = cfg.order.value_or(25);
  run.run("gc2.closed_form", [&](VerificationReport& r) { absorb(r, verify_gc2(order)); });
  run.run("gc2.exp_formula", [&](VerificationReport& r) {
    const auto x = compute_X(order).as_series();
    const auto e = compute_E(order).as_series();
    expect_equal(r, order, e, exp_series(x), "exp(X) != E");
  });
}

void trees_suite(Runner& run, const VerifyConfig& cfg) {
  const int order = cfg.order.value_or(10);
  const std::size_t x_cap = 30;
  run.run("trees.rooted_is_log", [&](VerificationReport& r) {
    const auto rooted = rooted_gf_signed(x_cap);
    const auto one_plus_x = TruncatedSeries<Rational>::one(Var::x, x_cap) +
                            TruncatedSeries<Rational>::variable(Var::x, x_cap);
    expect_equal(r, 0, log_series(one_plus_x), rooted, "R(-1,x) != log(1+x)");
    expect_equal(r, 0, one_plus_x, exp_series(rooted), "exp(R(-1,x)) != 1+x");
  });
  run.run("trees.fixed_point", [&](VerificationReport& r) {
    const std::size_t cap = 10;
    const auto lambda = LambdaPoly::monomial(Rational(1), 1);
    const auto rooted = rooted_gf_symbolic(cap);
    const auto x = TruncatedSeries<LambdaPoly>::variable(Var::x, cap);
    const auto one = TruncatedSeries<LambdaPoly>::one(Var::x, cap);
    expect_equal(r, 0, rooted, x + scale(exp_series(rooted) - one - rooted, lambda),
                 "R != x + lambda(e^R - 1 - R)");
  });
  run.run("trees.signed_counts", [&](VerificationReport& r) {
    const auto rooted = rooted_gf_signed(x_cap);
    const auto unrooted = tree_gf(x_cap);
    for (unsigned n = 1; n <= x_cap; ++n) {
      expect_equal(r, n, Rational(signed_rooted_count(n)), rooted.coeff(n) * Rational(factorial(n)),
                   "n! [x^n] R(-1,x)");
      if (n >= 3) {
        expect_equal(r, n, Rational(signed_unrooted_count(n)),
                     unrooted.coeff(n) * Rational(factorial(n)), "n! [x^n] T(x)");
      }
    }
  });
  run.run("trees.census", [&](VerificationReport& r) {
    for (int n = 1; n <= cfg.max_leaves; ++n) {
      expect_equal(r, n, signed_rooted_count(static_cast<unsigned>(n)), tree_census(n, true, cfg.caps),
                   "rooted tree census");
      if (n >= 3) {
        expect_equal(r, n, signed_unrooted_count(static_cast<unsigned>(n)),
                     tree_census(n, false, cfg.caps), "unrooted tree census");
      }
    }
  });
  run.run("trees.exp_formula", [&](VerificationReport& r) {
    const auto y = compute_Y(order).as_series();
    expect_equal(r, order, compute_expY(order), exp_series(y), "exp(Y) != expY");
  });
  run.run("trees.negativity", [&](VerificationReport& r) { absorb(r, negativity_scan(order)); });
}

void oracle_suite(Runner& run, const VerifyConfig& cfg) {
  const auto& caps = cfg.caps;
  run.run("oracle.census_vs_p_m", [&](VerificationReport& r) {
    for (int m = 1; m <= cfg.max_edges; ++m) {
      const auto p = p_m(static_cast<unsigned>(m));
      const auto rows = count_labeled_graphs(m, caps);
      LambdaPoly from_census;
      for (const auto& row : rows) from_census += LambdaPoly::monomial(row.weight(), row.k);
      expect_equal(r, m, p, from_census, "|LG(m,k)|/(2m)! vs [lambda^k] p_m");
    }
  });
  run.run("oracle.orbit_stabilizer", [&](VerificationReport& r) {
    for (int m = 1; m <= std::min(cfg.max_edges, caps.iso_max_edges); ++m) {
      for (const auto& row : iso_census(m, caps)) {
        Rational sum;
        std::int64_t orbits = 0;
        for (const auto& c : *row.iso_classes) {
          sum += Rational(BigInt(1), c.aut_order);
          orbits += c.orbit_size;
        }
        expect_equal(r, m, row.weight(), sum, "sum 1/|Aut| vs labeled/(2m)!");
        expect_equal(r, m, row.labeled_count, orbits, "orbit sizes vs labeled count");
      }
    }
  });
  run.run("oracle.exp_formula", [&](VerificationReport& r) {
    // Bivariate weights: x marks edges, lambda marks vertices.
    const int top = std::min(cfg.max_edges, 4);
    const auto cap = static_cast<std::size_t>(top);
    TruncatedSeries<LambdaPoly> all(Var::x, cap), conn(Var::x, cap);
    for (int m = 0; m <= top; ++m) {
      LambdaPoly a, c;
      for (const auto& row : count_labeled_graphs(m, caps)) {
        a += LambdaPoly::monomial(row.weight(), row.k);
        c += LambdaPoly::monomial(Rational(BigInt(row.connected_count), factorial(2 * m)), row.k);
      }
      all.set_coeff(static_cast<std::size_t>(m), a);
      conn.set_coeff(static_cast<std::size_t>(m), c);
    }
    expect_equal(r, top, all, exp_series(conn), "all graphs != exp(connected graphs)");
  });
  run.run("oracle.signed_census_vs_E", [&](VerificationReport& r) {
    const int n_max = cfg.max_edges / 3;
    if (n_max < 1) return;
    const auto e = compute_E(n_max);
    std::vector<Rational> sums(static_cast<std::size_t>(n_max) + 1);
    for (int m = 0; m <= 3 * n_max; ++m) {
      for (const auto& row : count_labeled_graphs(m, caps)) {
        const int n = row.m - row.k;
        if (n <= n_max) {
          sums[static_cast<std::size_t>(n)] += Rational(BigInt(row.signed_count), factorial(2 * m));
        }
      }
    }
    for (int n = 0; n <= n_max; ++n) {
      expect_equal(r, n, e.at(n), sums[static_cast<std::size_t>(n)], "signed census vs [h^n]E");
    }
  });
  run.run("oracle.pair_sum_vs_Y", [&](VerificationReport& r) {
    const int n_max = std::min(cfg.max_rank - 1, caps.pair_max_rank);
    if (n_max < 1) return;
    const auto y = compute_Y(n_max);
    for (int n = 1; n <= n_max; ++n) {
      expect_equal(r, n, y.at(n), pair_sum(n, caps), "pair_sum vs [h^n]Y");
    }
  });
}

void renorm_suite(Runner& run, const VerifyConfig& cfg) {
  const int order = cfg.order.value_or(6);
  run.run("renorm.identity", [&](VerificationReport& r) { absorb(r, renorm_check(order)); });
}

}  // namespace

bool is_verification_suite(const std::string& suite) {
  return std::find(kSuites.begin(), kSuites.end(), suite) != kSuites.end();
}

std::vector<TimedCheck> run_verification(const std::string& suite, const VerifyConfig& config) {
  if (!is_verification_suite(suite)) throw UsageError("unknown verification suite '" + suite + "'");
  Runner run;
  const bool all = suite == "all";
  if (all || suite == "gc2") gc2_suite(run, config);
  if (all || suite == "trees") trees_suite(run, config);
  if (all || suite == "oracle") oracle_suite(run, config);
  if (all || suite == "renorm") renorm_suite(run, config);
  return run.take();
}

}  // namespace graphchi
