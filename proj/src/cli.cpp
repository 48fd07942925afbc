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

#include "graphchi/cli.hpp"

#include <algorithm>
#include <fstream>
#include <iomanip>
#include <optional>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"

#include "graphchi/errors.hpp"
#include "graphchi/genfunc.hpp"
#include "graphchi/io.hpp"
#include "graphchi/oracle.hpp"
#include "graphchi/trees.hpp"
#include "graphchi/verify.hpp"

namespace graphchi {

namespace {

using nlohmann::json;

// Limits that keep a run within seconds to minutes; --force lifts them.
constexpr int kSafeOrder = 30;
constexpr int kSafeRank = 31;
constexpr int kSafeCensusEdges = 5;
constexpr int kSafeVerifyRank = 3;

struct RunConfig {
  std::string command;
  std::string name;   // series name or verify suite
  std::optional<int> order;
  int max_edges = -1;
  int max_rank = -1;
  int max_leaves = 7;
  std::string format = "table";
  int threads = 1;
  std::string output_path;
  bool verify = false;
  bool force = false;
  bool decimal = false;
  bool iso = false;
};

void require_safe(bool ok, const RunConfig& cfg, const std::string& what) {
  if (!ok && !cfg.force) throw RangeError(what + " is above the safe limit; pass --force to run anyway");
}

// Fixed-width table; the first row is the header.
std::string render_table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> widths;
  for (const auto& row : rows) {
    widths.resize(std::max(widths.size(), row.size()));
    for (std::size_t c = 0; c < row.size(); ++c) widths[c] = std::max(widths[c], row[c].size());
  }
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) {
      if (c + 1 < row.size()) {
        os << std::left << std::setw(static_cast<int>(widths[c]) + 2) << row[c];
      } else {
        os << row[c];
      }
    }
    os << '\n';
  }
  return os.str();
}

std::string render_csv(const std::vector<std::vector<std::string>>& rows) {
  std::ostringstream os;
  for (const auto& row : rows) {
    for (std::size_t c = 0; c < row.size(); ++c) os << (c ? "," : "") << row[c];
    os << '\n';
  }
  return os.str();
}

std::string render_rows(const RunConfig& cfg, const std::vector<std::vector<std::string>>& rows) {
  return cfg.format == "csv" ? render_csv(rows) : render_table(rows);
}

SeriesReport series_by_name(const std::string& name, int order) {
  if (name == "F") return compute_F(order);
  if (name == "E") return compute_E(order);
  if (name == "X") return compute_X(order);
  if (name == "Y") return compute_Y(order);
  throw UsageError("unknown series '" + name + "' (expected F, E, X or Y)");
}

std::string cmd_series(const RunConfig& cfg) {
  const int order = cfg.order.value_or(5);
  if (order < 0) throw UsageError("--order must be >= 0");
  require_safe(order <= kSafeOrder, cfg, "--order " + std::to_string(order));
  if (cfg.name == "Y" && order < 1) throw UsageError("series Y needs --order >= 1");
  const auto report = series_by_name(cfg.name, order);
  if (cfg.format == "json") return series_to_json(report, cfg.decimal).dump(2) + "\n";
  std::vector<std::vector<std::string>> rows{{"n", "value"}};
  if (cfg.decimal) rows[0].push_back("approx");
  for (int n = 0; n <= order; ++n) {
    rows.push_back({std::to_string(n), report.at(n).to_string()});
    if (cfg.decimal) rows.back().push_back("~" + report.at(n).to_decimal_string());
  }
  return render_rows(cfg, rows);
}

std::string rank_table(const RunConfig& cfg, const std::string& table, const std::string& column,
                       const std::vector<std::pair<int, Rational>>& values,
                       std::optional<bool> verified) {
  if (cfg.format == "json") {
    json rows = json::array();
    for (const auto& [rank, value] : values) {
      json row{{"rank", rank}, {column, value.to_fraction_string()}};
      if (cfg.decimal) row["approx"] = value.to_decimal_string();
      rows.push_back(std::move(row));
    }
    json doc{{"table", table}, {"rows", std::move(rows)}};
    if (verified) doc["verified"] = *verified;
    return doc.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows{{"rank", column}};
  if (cfg.decimal) rows[0].push_back("approx");
  for (const auto& [rank, value] : values) {
    rows.push_back({std::to_string(rank), value.to_string()});
    if (cfg.decimal) rows.back().push_back("~" + value.to_decimal_string());
  }
  return render_rows(cfg, rows);
}

int resolve_rank(const RunConfig& cfg) {
  const int rank = cfg.max_rank < 0 ? 10 : cfg.max_rank;
  if (rank < 2) throw UsageError("--max-rank must be >= 2");
  require_safe(rank <= kSafeRank, cfg, "--max-rank " + std::to_string(rank));
  return rank;
}

std::string cmd_gc2(const RunConfig& cfg, int& exit_code, std::ostream& err) {
  const int rank = resolve_rank(cfg);
  std::vector<std::pair<int, Rational>> values;
  for (int r = 2; r <= rank; ++r) values.emplace_back(r, chi_gc2(static_cast<unsigned>(r - 1)));
  std::optional<bool> verified;
  if (cfg.verify) {
    const auto report = verify_gc2(rank - 1);
    verified = report.passed;
    if (!report.passed) {
      exit_code = kExitVerificationFailed;
      err << verification_to_json(report).dump() << '\n';
    }
  }
  return rank_table(cfg, "gc2", "chi", values, verified);
}

std::string cmd_outfn(const RunConfig& cfg) {
  const int rank = resolve_rank(cfg);
  const auto y = compute_Y(rank - 1);
  std::vector<std::pair<int, Rational>> values;
  for (int r = 2; r <= rank; ++r) values.emplace_back(r, y.at(r - 1));
  return rank_table(cfg, "outfn", "chi", values, std::nullopt);
}

std::string cmd_verify(const RunConfig& cfg, int& exit_code, std::ostream& err) {
  VerifyConfig vc;
  vc.order = cfg.order;
  if (cfg.order) {
    if (*cfg.order < 1) throw UsageError("--order must be >= 1");
    require_safe(*cfg.order <= kSafeOrder, cfg, "--order " + std::to_string(*cfg.order));
  }
  vc.max_edges = cfg.max_edges < 0 ? 4 : cfg.max_edges;
  vc.max_rank = cfg.max_rank < 0 ? 2 : cfg.max_rank;
  vc.max_leaves = cfg.max_leaves;
  require_safe(vc.max_edges <= kSafeCensusEdges, cfg, "--max-edges " + std::to_string(vc.max_edges));
  require_safe(vc.max_rank <= kSafeVerifyRank, cfg, "--max-rank " + std::to_string(vc.max_rank));
  require_safe(vc.max_leaves <= OracleCaps{}.tree_max_leaves, cfg,
               "--max-leaves " + std::to_string(vc.max_leaves));
  vc.caps.threads = cfg.threads;
  if (cfg.force) {
    vc.caps.matching_max = 20;
    vc.caps.iso_max_edges = std::max(vc.caps.iso_max_edges, vc.max_edges);
    vc.caps.pair_max_rank = std::max(vc.caps.pair_max_rank, vc.max_rank - 1);
    vc.caps.tree_max_leaves = std::max(vc.caps.tree_max_leaves, vc.max_leaves);
  }
  const auto checks = run_verification(cfg.name, vc);
  const bool passed = std::all_of(checks.begin(), checks.end(),
                                  [](const TimedCheck& c) { return c.report.passed; });
  if (!passed) exit_code = kExitVerificationFailed;

  if (cfg.format == "json") {
    json doc{{"suite", cfg.name}, {"passed", passed}, {"checks", json::array()}};
    for (const auto& c : checks) {
      auto entry = verification_to_json(c.report);
      entry["seconds"] = c.seconds;
      doc["checks"].push_back(std::move(entry));
    }
    return doc.dump(2) + "\n";
  }
  std::vector<std::vector<std::string>> rows{{"status", "check", "checks", "seconds"}};
  for (const auto& c : checks) {
    std::ostringstream secs;
    secs << std::fixed << std::setprecision(3) << c.seconds;
    rows.push_back({c.report.passed ? "PASS" : "FAIL", c.report.name, std::to_string(c.report.checks),
                    secs.str()});
    if (!c.report.passed) err << verification_to_json(c.report).dump() << '\n';
  }
  return render_rows(cfg, rows);
}

std::string cmd_census(const RunConfig& cfg) {
  if (cfg.max_edges < 0) throw UsageError("census needs --edges");
  const int m = cfg.max_edges;
  OracleCaps caps;
  caps.threads = cfg.threads;
  require_safe(m <= kSafeCensusEdges, cfg, "--edges " + std::to_string(m));
  if (cfg.iso) require_safe(m <= caps.iso_max_edges, cfg, "--edges " + std::to_string(m) + " with --iso");
  if (cfg.force) {
    caps.matching_max = std::max(caps.matching_max, 2 * m);
    caps.iso_max_edges = std::max(caps.iso_max_edges, m);
  }
  const auto rows = cfg.iso ? iso_census(m, caps) : count_labeled_graphs(m, caps);
  if (cfg.format == "json") return census_to_json(m, rows).dump(2) + "\n";
  if (cfg.format == "csv") return census_to_csv(rows);
  std::vector<std::vector<std::string>> table{
      {"m", "k", "labeled", "connected", "signed", "weight"}};
  for (const auto& r : rows) {
    table.push_back({std::to_string(r.m), std::to_string(r.k), std::to_string(r.labeled_count),
                     std::to_string(r.connected_count), std::to_string(r.signed_count),
                     r.weight().to_string()});
    if (!r.iso_classes) continue;
    for (const auto& c : *r.iso_classes) {
      table.push_back({"", "", std::to_string(c.orbit_size), "", "|Aut|=" + c.aut_order.get_str(),
                       c.canonical});
    }
  }
  return render_table(table);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact Euler characteristics of Out(F_n) and the graph complex GC_2"};
  app.require_subcommand(1);
  RunConfig cfg;

  auto add_format = [&](CLI::App* sub, std::vector<std::string> allowed) {
    sub->add_option("--format", cfg.format, "Output format")->check(CLI::IsMember(allowed));
    sub->add_option("--output", cfg.output_path, "Write output to this file");
    sub->add_flag("--force", cfg.force, "Lift the safety limits");
    sub->add_flag("--decimal", cfg.decimal, "Add an approximate decimal column");
  };

  auto* series = app.add_subcommand("series", "Print a generating series through h^order");
  series->add_option("name", cfg.name, "F, E, X or Y")->required();
  series->add_option("--order", cfg.order, "Highest power of h");
  add_format(series, {"table", "json", "csv"});

  auto* gc2 = app.add_subcommand("gc2", "Euler characteristics of GC_2 by rank");
  gc2->add_option("--max-rank", cfg.max_rank, "Largest rank");
  gc2->add_flag("--verify", cfg.verify, "Cross-check the closed form against log E");
  add_format(gc2, {"table", "json", "csv"});

  auto* outfn = app.add_subcommand("outfn", "Euler characteristics of Out(F_n) by rank");
  outfn->add_option("--max-rank", cfg.max_rank, "Largest rank");
  add_format(outfn, {"table", "json", "csv"});

  auto* verify = app.add_subcommand("verify", "Run verification suites");
  verify->add_option("suite", cfg.name, "all, gc2, trees, oracle or renorm")->required();
  verify->add_option("--order", cfg.order, "Series order for the suite");
  verify->add_option("--max-edges", cfg.max_edges, "Largest edge count in the graph census");
  verify->add_option("--max-rank", cfg.max_rank, "Check pair sums for Out(F_n), n <= rank");
  verify->add_option("--max-leaves", cfg.max_leaves, "Largest tree in the tree census");
  verify->add_option("--threads", cfg.threads, "Enumeration threads")->check(CLI::PositiveNumber);
  add_format(verify, {"table", "json", "csv"});

  auto* census = app.add_subcommand("census", "Labeled admissible graph census");
  census->add_option("--edges,--max-edges", cfg.max_edges, "Number of edges m")->required();
  census->add_flag("--iso", cfg.iso, "Group into isomorphism classes with |Aut|");
  census->add_option("--threads", cfg.threads, "Enumeration threads")->check(CLI::PositiveNumber);
  add_format(census, {"table", "json", "csv"});

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::CallForAllHelp& e) {
    out << app.help("", CLI::AppFormatMode::All);
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  int exit_code = kExitOk;
  std::string text;
  try {
    if (*series) {
      text = cmd_series(cfg);
    } else if (*gc2) {
      text = cmd_gc2(cfg, exit_code, err);
    } else if (*outfn) {
      text = cmd_outfn(cfg);
    } else if (*verify) {
      if (!is_verification_suite(cfg.name)) throw UsageError("unknown suite '" + cfg.name + "'");
      text = cmd_verify(cfg, exit_code, err);
    } else if (*census) {
      text = cmd_census(cfg);
    }
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const RangeError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << json{{"error", e.what()}}.dump() << '\n';
    return kExitVerificationFailed;
  }

  if (cfg.output_path.empty()) {
    out << text;
  } else {
    std::ofstream file(cfg.output_path, std::ios::binary);
    if (!file) {
      err << "error: cannot open " << cfg.output_path << '\n';
      return kExitUsage;
    }
    file << text;
  }
  return exit_code;
}

}  // namespace graphchi
