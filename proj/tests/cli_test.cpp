// Copyright 2026 The comaxdim Authors.
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

#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"
#include "json.hpp"

using namespace comaxdim;
using nlohmann::json;

namespace {

const std::filesystem::path kData = COMAXDIM_TEST_DATA_DIR;

struct Result {
  int code;
  std::string out;
  std::string err;
};

Result run_cli(std::vector<std::string> args) {
  args.insert(args.begin(), "comaxdim");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out;
  std::ostringstream err;
  const int code = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::filesystem::path temp_file(const std::string& name) {
  return std::filesystem::temp_directory_path() / ("comaxdim_cli_test_" + name);
}

json read_json(const std::filesystem::path& p) {
  std::ifstream in(p);
  return json::parse(in);
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST(Cli, AnalyzeThreeFields) {
  const auto path = temp_file("z2cubed.json");
  const auto r = run_cli({"analyze", "--ring", "Z2 x Z2 x Z2", "--json", path.string()});
  EXPECT_EQ(r.code, cli::kOk) << r.out << r.err;
  const auto doc = read_json(path);
  EXPECT_EQ(doc["schema"], 1);
  EXPECT_EQ(doc["sdim"]["value"], 2);
  EXPECT_EQ(doc["sdim"]["method"], "srg_cover");
  EXPECT_EQ(doc["counts"]["vertices"], 6);
  EXPECT_EQ(doc["counts"]["edges"], 6);
  EXPECT_EQ(doc["passed"], true);
  EXPECT_TRUE(doc.contains("timings_ms"));
}

TEST(Cli, AnalyzeWorkedExampleWithOracle) {
  const auto path = temp_file("z4z4z8.json");
  const auto r = run_cli({"analyze", "--ring", "Z4 x Z4 x Z8", "--oracle", "--json", path.string()});
  const auto doc = read_json(path);
  EXPECT_EQ(doc["sdim"]["value"], 19);
  EXPECT_EQ(doc["oracle"]["value"], 19);
  EXPECT_EQ(doc["srg"]["beta"], 4);
  // The literal closed-neighbourhood claim fails on same-class pairs.
  EXPECT_EQ(r.code, cli::kCheckFailed);
  std::vector<std::string> failing;
  for (const auto& c : doc["checks"]) {
    if (c["status"] == "fail") failing.push_back(c["id"]);
  }
  EXPECT_EQ(failing, (std::vector<std::string>{"structure.class-closed-neighborhoods"}));
}

TEST(Cli, JsonIsDeterministicWithoutTimings) {
  const auto a = temp_file("det_a.json");
  const auto b = temp_file("det_b.json");
  run_cli({"analyze", "--ring", "F x F x F x F", "--oracle", "--no-timings", "--json", a.string()});
  run_cli({"analyze", "--ring", "F x F x F x F", "--oracle", "--no-timings", "--json", b.string()});
  EXPECT_EQ(slurp(a), slurp(b));
  EXPECT_FALSE(read_json(a).contains("timings_ms"));
}

TEST(Cli, ErrorExitCodes) {
  EXPECT_EQ(run_cli({"analyze", "--ring", "Z4"}).code, cli::kEmptyGraph);
  EXPECT_EQ(run_cli({"analyze", "--ring", "Z6 x F"}).code, cli::kParseError);
  EXPECT_EQ(run_cli({"analyze", "--ring", "Z4 x Z4 x Z8", "--enum-cap", "10"}).code, cli::kCapExceeded);
  EXPECT_EQ(run_cli({"analyze", "--ring", "Z4 x Z4 x Z8", "--oracle", "--brute-cap", "5"}).code, cli::kCapExceeded);
  EXPECT_EQ(run_cli({"analyze", "--ring", "F x F", "--cap", "1"}).code, cli::kCapExceeded);
  EXPECT_EQ(run_cli({"analyze"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"frobnicate"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"graph", "--in", (kData / "split.json").string()}).code, cli::kDisconnected);
  EXPECT_EQ(run_cli({"graph", "--in", (kData / "missing.g6").string()}).code, cli::kIoError);
  const auto r = run_cli({"analyze", "--ring", "Z4"});
  EXPECT_NE(r.err.find("error:"), std::string::npos);
}

TEST(Cli, HelpExitsCleanly) { EXPECT_EQ(run_cli({"--help"}).code, cli::kOk); }

TEST(Cli, ExportFormats) {
  const auto r = run_cli({"analyze", "--ring", "F x F", "--export", "graph6", "--what", "gamma"});
  EXPECT_NE(r.out.find("A_\n"), std::string::npos);
  const auto path = temp_file("srg.dot");
  run_cli({"analyze", "--ring", "F x F x F", "--export", "dot", "--what", "srg", "--export-out", path.string()});
  const auto dot = slurp(path);
  EXPECT_EQ(dot.rfind("graph {", 0), 0U);
  EXPECT_NE(dot.find("n0 -- n1;"), std::string::npos);
  EXPECT_EQ(run_cli({"analyze", "--ring", "F x F", "--export", "png"}).code, cli::kUsage);
}

TEST(Cli, SweepReduced) {
  const auto path = temp_file("sweep.json");
  const auto r = run_cli({"sweep", "--family", "reduced:2..6", "--json", path.string()});
  EXPECT_EQ(r.code, cli::kOk) << r.err;
  const auto doc = read_json(path);
  std::vector<int> sdims;
  for (const auto& row : doc["rings"]) sdims.push_back(row["computed_sdim"]);
  EXPECT_EQ(sdims, (std::vector<int>{1, 2, 8, 22, 52}));
}

TEST(Cli, SweepMixedFileMatchesFormula) {
  const auto path = temp_file("mixed.json");
  const auto r =
      run_cli({"sweep", "--family", "file:" + (kData / "mixed.txt").string(), "--oracle", "--json", path.string()});
  const auto doc = read_json(path);
  ASSERT_EQ(doc["rings"].size(), 4U);
  for (const auto& row : doc["rings"]) {
    EXPECT_EQ(row["computed_sdim"], row["predicted_sdim"]);
    EXPECT_EQ(row["oracle_sdim"], row["computed_sdim"]);
  }
  EXPECT_EQ(r.code, cli::kCheckFailed);
}

TEST(Cli, SweepEmptyFamilyIsUsageError) {
  EXPECT_EQ(run_cli({"sweep", "--family", "file:" + (kData / "empty.txt").string()}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"sweep", "--family", "specs:"}).code, cli::kUsage);
  EXPECT_EQ(run_cli({"sweep", "--family", "bogus"}).code, cli::kParseError);
}

TEST(Cli, GraphCommand) {
  const auto path = temp_file("k5.json");
  EXPECT_EQ(run_cli({"graph", "--in", (kData / "K5.g6").string(), "--oracle", "--json", path.string()}).code, cli::kOk);
  EXPECT_EQ(read_json(path)["sdim"]["value"], 4);
  run_cli({"graph", "--in", (kData / "P3.json").string(), "--json", path.string()});
  EXPECT_EQ(read_json(path)["sdim"]["value"], 1);
  run_cli({"graph", "--in", (kData / "C4.g6").string(), "--oracle", "--json", path.string()});
  EXPECT_EQ(read_json(path)["sdim"]["value"], 2);
  EXPECT_EQ(read_json(path)["oracle"]["value"], 2);
}

TEST(ParseFamily, Kinds) {
  EXPECT_EQ(cli::parse_family("reduced:2..4").size(), 3U);
  EXPECT_EQ(cli::parse_family("reduced:3").size(), 1U);
  EXPECT_EQ(cli::parse_family("nonreduced:Z4xZ4; C2 x C3").size(), 2U);
  EXPECT_THROW(cli::parse_family("nonreduced:Z4xF"), Error);
  EXPECT_THROW(cli::parse_family("mixed:Z4xZ4"), Error);
  EXPECT_THROW(cli::parse_family("reduced:4..2"), Error);
  EXPECT_EQ(cli::parse_family("file:" + (kData / "reduced.txt").string()).size(), 3U);
}

TEST(ExitCodes, Mapping) {
  EXPECT_EQ(cli::exit_code_for(ErrorKind::kParse), cli::kParseError);
  EXPECT_EQ(cli::exit_code_for(ErrorKind::kEmptyGraph), cli::kEmptyGraph);
  EXPECT_EQ(cli::exit_code_for(ErrorKind::kCapExceeded), cli::kCapExceeded);
  EXPECT_EQ(cli::exit_code_for(ErrorKind::kDisconnected), cli::kDisconnected);
  EXPECT_EQ(cli::exit_code_for(ErrorKind::kIo), cli::kIoError);
}
