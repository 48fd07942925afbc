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

#include <string>
#include <vector>

#include "json.hpp"

#include "graphchi/oracle.hpp"
#include "graphchi/report.hpp"

namespace graphchi {

/// Header m,k,labeled_count,connected_count,signed_count; one line per row.
std::string census_to_csv(const std::vector<CensusRow>& rows);

/// {"edges": m, "rows": [...]} with counts as decimal strings, weights and
/// per-class 1/|Aut| as "p/q".
nlohmann::json census_to_json(int m, const std::vector<CensusRow>& rows);
std::vector<CensusRow> census_from_json(const nlohmann::json& doc);

/// {"name", "order", "coefficients": [{"n", "value": "p/q"}]}.
nlohmann::json series_to_json(const SeriesReport& report, bool with_decimal = false);
SeriesReport series_from_json(const nlohmann::json& doc);

nlohmann::json verification_to_json(const VerificationReport& report);

}  // namespace graphchi
