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

#include "graphchi/io.hpp"

#include <sstream>

#include "graphchi/errors.hpp"

namespace graphchi {

using nlohmann::json;

std::string census_to_csv(const std::vector<CensusRow>& rows) {
  std::ostringstream os;
  os << "m,k,labeled_count,connected_count,signed_count\n";
  for (const auto& r : rows) {
    os << r.m << ',' << r.k << ',' << r.labeled_count << ',' << r.connected_count << ','
       << r.signed_count << '\n';
  }
  return os.str();
}

json census_to_json(int m, const std::vector<CensusRow>& rows) {
  json out;
  out["edges"] = m;
  out["rows"] = json::array();
  for (const auto& r : rows) {
    json row{{"m", r.m},
             {"k", r.k},
             {"labeled_count", std::to_string(r.labeled_count)},
             {"connected_count", std::to_string(r.connected_count)},
             {"signed_count", std::to_string(r.signed_count)},
             {"weight", r.weight().to_fraction_string()}};
    if (r.iso_classes) {
      row["iso_classes"] = json::array();
      for (const auto& c : *r.iso_classes) {
        row["iso_classes"].push_back({{"canonical", c.canonical},
                                      {"orbit_size", std::to_string(c.orbit_size)},
                                      {"aut", c.aut_order.get_str()},
                                      {"weight", Rational(BigInt(1), c.aut_order).to_fraction_string()}});
      }
    }
    out["rows"].push_back(std::move(row));
  }
  return out;
}

std::vector<CensusRow> census_from_json(const json& doc) {
  std::vector<CensusRow> rows;
  try {
    for (const auto& r : doc.at("rows")) {
      CensusRow row;
      row.m = r.at("m").get<int>();
      row.k = r.at("k").get<int>();
      row.labeled_count = std::stoll(r.at("labeled_count").get<std::string>());
      row.connected_count = std::stoll(r.at("connected_count").get<std::string>());
      row.signed_count = std::stoll(r.at("signed_count").get<std::string>());
      if (r.contains("iso_classes")) {
        std::vector<IsoClass> classes;
        for (const auto& c : r.at("iso_classes")) {
          classes.push_back(IsoClass{c.at("canonical").get<std::string>(),
                                     std::stoll(c.at("orbit_size").get<std::string>()),
                                     BigInt(c.at("aut").get<std::string>())});
        }
        row.iso_classes = std::move(classes);
      }
      rows.push_back(std::move(row));
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed census JSON: ") + e.what());
  }
  return rows;
}

json series_to_json(const SeriesReport& report, bool with_decimal) {
  json coeffs = json::array();
  for (int n = 0; n <= report.order; ++n) {
    json entry{{"n", n}, {"value", report.at(n).to_fraction_string()}};
    if (with_decimal) entry["approx"] = report.at(n).to_decimal_string();
    coeffs.push_back(std::move(entry));
  }
  return json{{"name", report.name}, {"order", report.order}, {"coefficients", std::move(coeffs)}};
}

SeriesReport series_from_json(const json& doc) {
  SeriesReport out;
  try {
    out.name = doc.at("name").get<std::string>();
    out.order = doc.at("order").get<int>();
    out.coefficients.resize(static_cast<std::size_t>(out.order) + 1);
    for (const auto& c : doc.at("coefficients")) {
      const int n = c.at("n").get<int>();
      if (n < 0 || n > out.order) throw UsageError("coefficient index out of range");
      out.coefficients[static_cast<std::size_t>(n)] = Rational::parse(c.at("value").get<std::string>());
    }
  } catch (const json::exception& e) {
    throw UsageError(std::string("malformed series JSON: ") + e.what());
  }
  if (!is_registered_series_name(out.name)) throw UsageError("unknown series name '" + out.name + "'");
  return out;
}

json verification_to_json(const VerificationReport& report) {
  json out{{"name", report.name}, {"passed", report.passed}, {"checks", report.checks}};
  if (report.failure) {
    out["failure"] = {{"order", report.failure->order},
                      {"expected", report.failure->expected},
                      {"actual", report.failure->actual},
                      {"message", report.failure->message}};
  }
  return out;
}

}  // namespace graphchi
