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

#include <optional>
#include <string>
#include <vector>

#include "graphchi/oracle.hpp"
#include "graphchi/report.hpp"

namespace graphchi {

struct VerifyConfig {
  std::optional<int> order;  // per-suite default when unset
  int max_edges = 4;         // oracle census and p_m comparison
  int max_rank = 2;          // pair_sum up to rank-1, i.e. Out(F_rank)
  int max_leaves = 7;        // tree census
  OracleCaps caps;
};

struct TimedCheck {
  VerificationReport report;
  double seconds = 0;
};

/// Suites: "gc2", "trees", "oracle", "renorm", or "all".
/// Throws UsageError on an unknown suite name.
std::vector<TimedCheck> run_verification(const std::string& suite, const VerifyConfig& config);

bool is_verification_suite(const std::string& suite);

}  // namespace graphchi
