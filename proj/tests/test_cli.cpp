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

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "doctest.h"
#include "json.hpp"

#include "graphchi/cli.hpp"
#include "graphchi/io.hpp"

using namespace graphchi;
using nlohmann::json;

namespace {

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run(std::vector<std::string> args) {
  std::ostringstream out, err;
  const int code = run_cli(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("series subcommand") {
  const auto r = run({"series", "Y", "--order", "3", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["name"] == "Y");
  CHECK(doc["order"] == 3);
  CHECK(doc["coefficients"][1]["value"] == "-1/24");
  CHECK(doc["coefficients"][2]["value"] == "-1/48");
  CHECK(doc["coefficients"][3]["value"] == "-161/5760");
  const auto back = series_from_json(doc);
  CHECK(back.at(3) == Rational(-161, 5760));

  const auto table = run({"series", "X", "--order", "3"});
  CHECK(table.out == "n  value\n0  0\n1  -1/12\n2  0\n3  1/360\n");
  const auto csv = run({"series", "F", "--order", "2", "--format", "csv"});
  CHECK(csv.out == "n,value\n0,1\n1,1/3\n2,41/36\n");
  const auto dec = run({"series", "F", "--order", "1", "--decimal"});
  CHECK(dec.out.find("~3.33333333333e-1") != std::string::npos);
}

TEST_CASE("rank tables") {
  const auto gc2 = run({"gc2", "--max-rank", "4", "--verify", "--format", "csv"});
  CHECK(gc2.code == kExitOk);
  CHECK(gc2.out == "rank,chi\n2,-1/12\n3,0\n4,1/360\n");
  const auto outfn = run({"outfn", "--max-rank", "4", "--format", "json"});
  const auto doc = json::parse(outfn.out);
  CHECK(doc["rows"][0]["rank"] == 2);
  CHECK(doc["rows"][0]["chi"] == "-1/24");
  CHECK(doc["rows"][1]["chi"] == "-1/48");
  CHECK(doc["rows"][2]["chi"] == "-161/5760");
  CHECK(run({"gc2", "--max-rank", "1"}).code == kExitUsage);
}

TEST_CASE("census subcommand") {
  const auto r = run({"census", "--edges", "2", "--format", "csv"});
  CHECK(r.code == kExitOk);
  CHECK(r.out == "m,k,labeled_count,connected_count,signed_count\n2,1,3,3,3\n");
  const auto empty = run({"census", "--edges", "1", "--format", "csv"});
  CHECK(empty.out == "m,k,labeled_count,connected_count,signed_count\n");
  const auto iso = json::parse(run({"census", "--edges", "3", "--iso", "--format", "json"}).out);
  std::vector<std::string> auts;
  for (const auto& c : iso["rows"][1]["iso_classes"]) auts.push_back(c["aut"]);
  std::sort(auts.begin(), auts.end());
  CHECK(auts == std::vector<std::string>{"12", "8"});
}

TEST_CASE("output is identical across thread counts") {
  const auto one = run({"census", "--edges", "4", "--threads", "1", "--format", "json"});
  const auto four = run({"census", "--edges", "4", "--threads", "4", "--format", "json"});
  CHECK(one.code == kExitOk);
  CHECK(one.out == four.out);
}

TEST_CASE("verify subcommand") {
  const auto r = run({"verify", "renorm", "--order", "4", "--format", "json"});
  CHECK(r.code == kExitOk);
  const auto doc = json::parse(r.out);
  CHECK(doc["passed"] == true);
  CHECK(doc["checks"][0]["name"] == "renorm.identity");
  CHECK(doc["checks"][0].contains("seconds"));
  const auto t = run({"verify", "gc2", "--order", "6"});
  CHECK(t.code == kExitOk);
  CHECK(t.out.rfind("status", 0) == 0);
  CHECK(t.out.find("FAIL") == std::string::npos);
}

TEST_CASE("output file") {
  const std::string path = "graphchi_cli_test_output.json";
  const auto r = run({"series", "F", "--order", "2", "--format", "json", "--output", path});
  CHECK(r.code == kExitOk);
  CHECK(r.out.empty());
  std::ifstream in(path);
  const auto doc = json::parse(in);
  CHECK(doc["coefficients"][2]["value"] == "41/36");
  std::remove(path.c_str());
}

TEST_CASE("usage errors exit with 2") {
  CHECK(run({}).code == kExitUsage);
  CHECK(run({"series", "Q"}).code == kExitUsage);
  CHECK(run({"series", "F", "--order", "-1"}).code == kExitUsage);
  CHECK(run({"series", "F", "--order", "31"}).code == kExitUsage);
  CHECK(run({"series", "F", "--format", "xml"}).code == kExitUsage);
  CHECK(run({"verify", "everything"}).code == kExitUsage);
  CHECK(run({"verify", "oracle", "--max-edges", "6"}).code == kExitUsage);
  CHECK(run({"census", "--edges", "6"}).code == kExitUsage);
  CHECK(run({"census", "--edges", "5", "--iso"}).code == kExitUsage);
  CHECK(run({"census", "--edges", "2", "--threads", "0"}).code == kExitUsage);
  CHECK(run({"bogus"}).code == kExitUsage);
  CHECK_FALSE(run({"series", "Q"}).err.empty());
  CHECK(run({"--help"}).code == kExitOk);
}

TEST_CASE("force lifts the safety limits") {
  const auto r = run({"series", "F", "--order", "31", "--force", "--format", "json"});
  CHECK(r.code == kExitOk);
  CHECK(json::parse(r.out)["order"] == 31);
}
