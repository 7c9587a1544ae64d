// Copyright 2026 The m3cover Authors.
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

#include "commands.h"

#include <unistd.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "gtest/gtest.h"
#include "json.hpp"
#include "m3cover/formats.h"
#include "m3cover/generators.h"
#include "test_support.h"

namespace m3cover::cli {
namespace {

using Json = nlohmann::json;

std::vector<Json> Records(const std::string& text) {
  std::vector<Json> out;
  std::istringstream lines(text);
  std::string line;
  while (std::getline(lines, line)) out.push_back(Json::parse(line));
  return out;
}

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = std::filesystem::temp_directory_path() /
           ("m3cover_cli_test_" + std::to_string(::getpid()));
    std::filesystem::create_directories(dir_);
  }
  void TearDown() override { std::filesystem::remove_all(dir_); }

  std::string Write(const std::string& name, const std::string& content) {
    const std::string path = (dir_ / name).string();
    std::ofstream(path) << content;
    return path;
  }

  std::filesystem::path dir_;
  std::ostringstream out_, err_;
};

TEST_F(CliTest, GenByFraction) {
  GenArgs args;
  args.family = {.family = "cc2", .p = 4, .q = 5};
  ASSERT_EQ(RunGen(args, out_, err_), kExitOk) << err_.str();
  const Json r = Records(out_.str()).at(0);
  EXPECT_EQ(r["inputs"]["a"], 2);
  EXPECT_EQ(r["inputs"]["b"], 0);
  EXPECT_EQ(r["result"]["edges"], 30);
  EXPECT_EQ(r["result"]["predicted_m3"]["display"], "24/30 = 4/5");
}

TEST_F(CliTest, GenCc4WritesFile) {
  GenArgs args;
  args.family = {.family = "cc4", .p = 9, .q = 10};
  args.out = (dir_ / "g.g6").string();
  ASSERT_EQ(RunGen(args, out_, err_), kExitOk);
  const Json r = Records(out_.str()).at(0);
  EXPECT_EQ(r["inputs"]["a"], 4);
  EXPECT_EQ(r["result"]["edges"], 120);
  std::ifstream in(args.out);
  std::string line;
  std::getline(in, line);
  absl::StatusOr<Graph> g = DecodeGraph6(line);
  ASSERT_TRUE(g.ok());
  EXPECT_EQ(g->edge_count(), 120);
}

TEST_F(CliTest, GenMultipoleFormat) {
  GenArgs args;
  args.family = {.family = "cc2", .a = 1, .b = 1};
  args.format = "multipole";
  ASSERT_EQ(RunGen(args, out_, err_), kExitOk);
  const std::string text = Records(out_.str()).at(0)["result"]["encoding"];
  EXPECT_EQ(text.rfind("multipole G_1_1\n", 0), 0u);
}

TEST_F(CliTest, GenErrors) {
  GenArgs args;
  args.family = {.family = "cc2", .p = 5, .q = 5};
  EXPECT_EQ(RunGen(args, out_, err_), kExitUsage);
  args.family = {.family = "cc2", .a = 1, .b = 0, .order = "AX"};
  EXPECT_EQ(RunGen(args, out_, err_), kExitUsage);
  args.family = {.family = "cc3", .a = 1};
  EXPECT_EQ(RunGen(args, out_, err_), kExitUsage);
  args.family = {.family = "cc2", .p = 4, .q = 5, .a = 1};
  EXPECT_EQ(RunGen(args, out_, err_), kExitUsage);
  EXPECT_TRUE(out_.str().empty());
}

TEST_F(CliTest, M3PetersenFromGraph6) {
  M3Args args;
  args.input = Write("petersen.g6", *EncodeGraph6(Petersen()) + "\n");
  ASSERT_EQ(RunM3(args, out_, err_), kExitOk) << err_.str();
  const Json r = Records(out_.str()).at(0);
  EXPECT_EQ(r["result"]["m3"], "12/15");
  EXPECT_EQ(r["result"]["brute"]["witness"]["uncovered"].size(), 3u);
}

TEST_F(CliTest, M3FromMultipoleText) {
  M3Args args;
  args.input = Write("k4.txt", EmitMultipoleText(K4()));
  args.no_witness = true;
  ASSERT_EQ(RunM3(args, out_, err_), kExitOk) << err_.str();
  const Json r = Records(out_.str()).at(0);
  EXPECT_EQ(r["result"]["m3_display"], "6/6 = 1/1");
  EXPECT_FALSE(r["result"]["brute"].contains("witness"));
}

TEST_F(CliTest, M3FamilyCrossCheck) {
  M3Args args;
  args.family = {.family = "cc4", .a = 1, .b = 0};
  args.cross_check = true;
  ASSERT_EQ(RunM3(args, out_, err_), kExitOk) << err_.str();
  const Json r = Records(out_.str()).at(0);
  EXPECT_EQ(r["result"]["dp"]["m3"], "27/30");
  EXPECT_EQ(r["result"]["brute"]["m3"], "27/30");
  EXPECT_EQ(r["result"]["agree"], true);
}

TEST_F(CliTest, M3RejectsNonCubicInput) {
  M3Args args;
  args.input = Write("path.txt",
                     "multipole p\nvertices 3\nlink 0 1\nlink 1 2\nend\n");
  EXPECT_EQ(RunM3(args, out_, err_), kExitUsage);
  EXPECT_NE(err_.str().find("invalid"), std::string::npos);
  args.input = Write("bad.g6", "C~~\n");
  EXPECT_EQ(RunM3(args, out_, err_), kExitUsage);
  args.input = (dir_ / "missing").string();
  EXPECT_EQ(RunM3(args, out_, err_), kExitUsage);
  args.input = Write("k4.g6", "C~\n");
  args.method = "dp";
  EXPECT_EQ(RunM3(args, out_, err_), kExitUsage);
  args.method = "fast";
  EXPECT_EQ(RunM3(args, out_, err_), kExitUsage);
  EXPECT_TRUE(out_.str().empty());
}

TEST_F(CliTest, VerifySingleCheck) {
  VerifyArgs args;
  args.check = "fraction2";
  args.params = "a=2,b=0";
  ASSERT_EQ(RunVerify(args, out_, err_), kExitOk) << err_.str();
  const Json r = Records(out_.str()).at(0);
  EXPECT_EQ(r["check"], "fraction2");
  EXPECT_EQ(r["verdict"], "pass");
}

TEST_F(CliTest, VerifyFailureAndUsage) {
  VerifyArgs args;
  args.check = "theorem-cc2";
  args.params = "p=1,q=2";
  EXPECT_EQ(RunVerify(args, out_, err_), kExitCheckFailed);
  args = {.check = "nope"};
  EXPECT_EQ(RunVerify(args, out_, err_), kExitUsage);
  args = {.check = "fraction2", .params = "z=1"};
  EXPECT_EQ(RunVerify(args, out_, err_), kExitUsage);
  args = {.check = "fraction2", .params = "a=x"};
  EXPECT_EQ(RunVerify(args, out_, err_), kExitUsage);
  args = {};
  EXPECT_EQ(RunVerify(args, out_, err_), kExitUsage);
}

TEST_F(CliTest, AnalyzePetersenAndK4) {
  AnalyzeArgs args;
  args.input = Write("p.g6", *EncodeGraph6(Petersen()));
  ASSERT_EQ(RunAnalyze(args, out_, err_), kExitOk);
  Json r = Records(out_.str()).at(0)["result"];
  EXPECT_EQ(r["girth"], 5);
  EXPECT_EQ(r["cyclic_connectivity"]["value"], 5);
  EXPECT_EQ(r["cyclic_connectivity"]["oracle_agrees"], true);
  EXPECT_EQ(r["colorable"], false);
  EXPECT_EQ(r["bridgeless"], true);

  out_.str("");
  args.input = Write("k4.g6", "C~");
  args.girth = true;
  args.colorable = true;
  ASSERT_EQ(RunAnalyze(args, out_, err_), kExitOk);
  r = Records(out_.str()).at(0)["result"];
  EXPECT_EQ(r["girth"], 3);
  EXPECT_EQ(r["colorable"], true);
  EXPECT_FALSE(r.contains("bridgeless"));
  EXPECT_FALSE(r.contains("cyclic_connectivity"));
}

TEST_F(CliTest, AnalyzeFamilyMember) {
  AnalyzeArgs args;
  args.input = Write(
      "g4.txt", EmitMultipoleText(*BuildFamily({.k = 4, .a = 1, .b = 0})));
  args.cyclic_connectivity = true;
  ASSERT_EQ(RunAnalyze(args, out_, err_), kExitOk) << err_.str();
  const Json r = Records(out_.str()).at(0)["result"];
  EXPECT_EQ(r["cyclic_connectivity"]["value"], 4);
  EXPECT_EQ(r["cyclic_connectivity"]["oracle_value"], 4);
}

TEST_F(CliTest, IngestSnarkList) {
  IngestArgs args;
  args.input = Write(
      "snarks.g6", *EncodeGraph6(Petersen()) + "\n" +
                       *EncodeGraph6(testing::BlanusaSnark()) + "\n" +
                       *EncodeGraph6(Prism(3)) + "\nnot graph6!\n\n" +
                       *EncodeGraph6(Graph(4, {{0, 1}, {1, 2}, {2, 3}})) +
                       "\n");
  args.report = (dir_ / "report.jsonl").string();
  ASSERT_EQ(RunIngest(args, out_, err_), kExitOk) << err_.str();
  EXPECT_TRUE(out_.str().empty());
  std::ifstream in(args.report);
  const std::vector<Json> rows = Records(
      std::string(std::istreambuf_iterator<char>(in), {}));
  ASSERT_EQ(rows.size(), 6u);
  EXPECT_EQ(rows[0]["m3"], "12/15");
  EXPECT_EQ(rows[0]["flags"], Json::array({"uncovered>=3"}));
  EXPECT_EQ(rows[1]["line"], 2);
  EXPECT_NE(rows[1]["uncovered"], 0);
  EXPECT_EQ(rows[2]["m3_display"], "9/9 = 1/1");
  EXPECT_EQ(rows[2]["flags"], Json::array({"not-a-snark"}));
  EXPECT_EQ(rows[3]["flags"], Json::array({"malformed"}));
  EXPECT_EQ(rows[4]["line"], 6);
  EXPECT_EQ(rows[4]["flags"], Json::array({"malformed"}));
  EXPECT_EQ(rows[5]["summary"]["rows"], 5);
  EXPECT_EQ(rows[5]["summary"]["snarks"], 2);
  EXPECT_EQ(rows[5]["summary"]["malformed"], 2);
}

TEST_F(CliTest, IngestCapAndEmptyFile) {
  IngestArgs args;
  args.input = Write("one.g6", *EncodeGraph6(Petersen()) + "\n");
  args.cap = 3;
  ASSERT_EQ(RunIngest(args, out_, err_), kExitOk);
  std::vector<Json> rows = Records(out_.str());
  ASSERT_EQ(rows.size(), 2u);
  EXPECT_EQ(rows[0]["flags"], Json::array({"cap-exceeded"}));

  out_.str("");
  args = {.input = Write("empty.g6", "")};
  ASSERT_EQ(RunIngest(args, out_, err_), kExitOk);
  rows = Records(out_.str());
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0]["summary"]["rows"], 0);

  args = {.input = (dir_ / "missing.g6").string()};
  EXPECT_EQ(RunIngest(args, out_, err_), kExitUsage);
}

TEST_F(CliTest, DeterministicModuloTiming) {
  auto run = [&] {
    std::ostringstream out, err;
    M3Args args;
    args.family = {.family = "cc2", .a = 2, .b = 1, .order = "ABA"};
    EXPECT_EQ(RunM3(args, out, err), kExitOk);
    Json r = Json::parse(out.str());
    r.erase("elapsed_ms");
    return r.dump();
  };
  EXPECT_EQ(run(), run());
}

}  // namespace
}  // namespace m3cover::cli
