// Copyright 2026 The circulant Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//    http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <fstream>
#include <nlohmann/json.hpp>
#include <sstream>

#include "circulant/cli.hpp"

namespace circulant::cli {
namespace {

using json = nlohmann::json;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
  std::vector<json> lines;  // parsed stdout, one object per line
};

Outcome run(const std::vector<std::string>& args, bool parse = true) {
  std::ostringstream out, err;
  Outcome r;
  r.code = dispatch(args, out, err);
  r.out = out.str();
  r.err = err.str();
  if (parse) {
    std::istringstream in(r.out);
    std::string line;
    while (std::getline(in, line)) r.lines.push_back(json::parse(line));
  }
  return r;
}

TEST(Cli, Diameter) {
  const Outcome r = run({"diameter", "--n", "21", "--gens", "1,2,8"});
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_EQ(r.lines.size(), 1U);
  EXPECT_EQ(r.lines[0]["diameter"], 2);
  EXPECT_EQ(r.lines[0]["degree"], 6);

  EXPECT_EQ(run({"diameter", "--n", "21", "--gens", "1,2,8", "--expect", "2"}).code, kExitOk);
  EXPECT_EQ(run({"diameter", "--n", "21", "--gens", "1,2,8", "--expect", "3"}).code, kExitFailure);
}

TEST(Cli, DisconnectedIsAFailure) {
  const Outcome r = run({"diameter", "--n", "12", "--gens", "3"});
  EXPECT_EQ(r.code, kExitFailure);
  ASSERT_EQ(r.lines.size(), 1U);
  EXPECT_FALSE(r.lines[0]["connected"].get<bool>());
  EXPECT_EQ(r.lines[0]["reachable"], 4);
  EXPECT_TRUE(r.lines[0]["diameter"].is_null());
}

TEST(Cli, UsageErrors) {
  EXPECT_EQ(run({}, false).code, kExitUsage);
  EXPECT_EQ(run({"frobnicate"}, false).code, kExitUsage);
  EXPECT_EQ(run({"diameter", "--n", "21"}, false).code, kExitUsage);
  EXPECT_EQ(run({"diameter", "--n", "21", "--gens", "x"}, false).code, kExitUsage);
  EXPECT_EQ(run({"search", "--d", "4", "--k", "2", "--range", "30"}, false).code, kExitUsage);
  EXPECT_EQ(run({"search", "--d", "4", "--k", "2", "--range", "1:30", "--mode", "heuristic"}, false).code,
            kExitUsage);
  EXPECT_EQ(run({"construct", "--family", "nope", "--q", "7"}, false).code, kExitUsage);
  EXPECT_EQ(run({"bounds"}, false).code, kExitUsage);
  EXPECT_EQ(run({"--format", "xml", "bounds", "--rmax", "2"}, false).code, kExitUsage);
  const Outcome help = run({"--help"}, false);
  EXPECT_EQ(help.code, kExitOk);
  EXPECT_NE(help.out.find("verify-records"), std::string::npos);
}

TEST(Cli, ConstructWithBfs) {
  const Outcome r = run({"construct", "--family", "directed-k2-w6", "--q", "7", "--emit-graph", "--bfs"});
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_EQ(r.lines.size(), 2U);
  EXPECT_EQ(r.lines[0]["order"], 210);
  EXPECT_EQ(r.lines[0]["degree"], 27);
  EXPECT_EQ(r.lines[0]["predicted_order"], 210);
  EXPECT_EQ(r.lines[0]["bfs_diameter"], 2);
  EXPECT_TRUE(r.lines[0]["valid"].get<bool>());
  EXPECT_EQ(r.lines[1]["n"], 210);
  EXPECT_EQ(r.lines[1]["generators"].size(), 27U);
}

TEST(Cli, ListFamilies) {
  const Outcome r = run({"construct", "--list-families"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_EQ(r.lines.size(), 12U);
}

TEST(Cli, WideOrdersAreStrings) {
  const Outcome r = run({"construct", "--family", "directed-k9-w42", "--q", "1093"});
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_EQ(r.lines.size(), 1U);
  // Fits in 64 bits or not, the value must round-trip exactly.
  const json& order = r.lines[0]["order"];
  EXPECT_TRUE(order.is_string() || order.is_number_integer());
}

TEST(Cli, WorkCapEnvironment) {
  const std::vector<std::string> args = {"construct", "--family", "undirected-k3-w57", "--q", "17", "--bfs"};
  ::setenv("CIRCULANT_WORK_CAP", "1000", 1);
  const Outcome capped = run(args);
  EXPECT_EQ(capped.code, kExitOk);
  ASSERT_FALSE(capped.lines.empty());
  EXPECT_TRUE(capped.lines[0]["bfs_diameter"].is_null());
  EXPECT_EQ(capped.lines[0]["bfs_skipped"], "work cap");

  // The flag wins over the environment.
  const Outcome flagged = run({"--work-cap", "100000000", "diameter", "--n", "1000", "--gens", "1"});
  EXPECT_EQ(flagged.code, kExitOk);

  ::setenv("CIRCULANT_WORK_CAP", "lots", 1);
  EXPECT_EQ(run({"diameter", "--n", "21", "--gens", "1,2,8"}, false).code, kExitUsage);
  ::unsetenv("CIRCULANT_WORK_CAP");
  const Outcome r = run({"diameter", "--n", "1000", "--gens", "1"});
  EXPECT_EQ(r.lines[0]["diameter"], 500);
}

TEST(Cli, StitchFromLinesAndFiles) {
  const std::string a = R"({"n":21,"directed":false,"generators":[1,2,8,13,19,20]})";
  const std::string b = R"({"n":55,"directed":false,"generators":[1,5,21,34,50,54]})";
  const Outcome r = run({"stitch", "--a", a, "--b", b, "--k1", "2", "--k2", "3"});
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_EQ(r.lines.size(), 2U);
  EXPECT_EQ(r.lines[0]["n"], 1155);
  EXPECT_EQ(r.lines[1]["degree"], 12);
  EXPECT_EQ(r.lines[1]["verified_diameter"], 5);

  const std::string path = ::testing::TempDir() + "circulant_a.json";
  std::ofstream(path) << a << '\n';
  const Outcome f = run({"stitch", "--a", "@" + path, "--b", b, "--k1", "2", "--k2", "3"});
  EXPECT_EQ(f.code, kExitOk);
  EXPECT_EQ(f.lines[0], r.lines[0]);
  EXPECT_EQ(run({"stitch", "--a", "@/nonexistent/x", "--b", b, "--k1", "2", "--k2", "3"}, false).code,
            kExitUsage);
}

TEST(Cli, SearchEmitsProgressThenResult) {
  const Outcome r = run({"search", "--d", "4", "--k", "2", "--range", "1:30", "--jobs", "2"});
  EXPECT_EQ(r.code, kExitOk);
  ASSERT_FALSE(r.lines.empty());
  for (std::size_t i = 0; i + 1 < r.lines.size(); ++i) EXPECT_EQ(r.lines[i]["event"], "progress");
  const json& last = r.lines.back();
  EXPECT_EQ(last["event"], "result");
  EXPECT_EQ(last["n_best"], 13);
  EXPECT_TRUE(last["definitive"].get<bool>());

  const std::vector<std::string> h = {"search", "--d",    "6",    "--k",      "2",     "--range",
                                      "15:21",  "--mode", "heuristic", "--seed", "9", "--budget", "100000"};
  EXPECT_EQ(run(h).out, run(h).out);
}

TEST(Cli, VerifyRecords) {
  const Outcome r = run({"verify-records"});
  EXPECT_EQ(r.code, kExitOk);
  const json& summary = r.lines.back();
  EXPECT_TRUE(summary["summary"].get<bool>());
  EXPECT_EQ(summary["failed"], 0);
  EXPECT_TRUE(summary["cross_table_ok"].get<bool>());

  const Outcome small = run({"verify-records", "--max-n", "100"});
  EXPECT_GT(small.lines.back()["skipped"].get<int>(), summary["skipped"].get<int>());
}

TEST(Cli, Sumset) {
  const Outcome r = run({"sumset", "--n", "10", "--set", "0,1,2,3", "--k", "3"});
  EXPECT_EQ(r.code, kExitOk);
  EXPECT_TRUE(r.lines[0]["covers"].get<bool>());
  const Outcome m = run({"sumset", "--n", "7", "--k", "2", "--minimum"});
  EXPECT_EQ(m.lines[0]["ss"], 4);
  EXPECT_EQ(run({"sumset", "--n", "7", "--k", "2"}, false).code, kExitUsage);
}

TEST(Cli, BoundsTableAndTsv) {
  const Outcome t = run({"bounds", "--table"});
  EXPECT_EQ(t.code, kExitOk);
  EXPECT_EQ(t.lines.size(), 32U);
  for (const json& j : t.lines) EXPECT_TRUE(j["match"].get<bool>()) << j.dump();

  const Outcome tsv = run({"--format", "tsv", "bounds", "--ceiling", "10"}, false);
  EXPECT_EQ(tsv.code, kExitOk);
  std::istringstream in(tsv.out);
  std::string header, row;
  std::getline(in, header);
  std::getline(in, row);
  EXPECT_EQ(header, "k\tl\tl_value\tr");
  EXPECT_EQ(row.substr(0, row.find('\t')), "10");
  EXPECT_NE(row.find("11/10319560704"), std::string::npos);
}

TEST(Cli, Decompose) {
  const Outcome r = run({"decompose", "--u", "1", "--d", "2", "--s", "5", "--m", "1", "--x", "3", "--y", "4"});
  EXPECT_EQ(r.code, kExitOk);
  const json& j = r.lines[0];
  const std::int64_t h = j["h"], ell = j["ell"], rr = j["r"], v = j["v"];
  EXPECT_EQ((h + ell * 1) % rr, 3);
  EXPECT_EQ((h + ell * v) % 5, 4);
  EXPECT_LT(h, j["h_bound"].get<std::int64_t>());
  EXPECT_EQ(run({"decompose", "--u", "0", "--d", "2", "--s", "5", "--m", "1", "--x", "3", "--y", "4"}, false).code,
            kExitUsage);
}

}  // namespace
}  // namespace circulant::cli
