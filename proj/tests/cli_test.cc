// Copyright 2026 The Authors.
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

#include <gtest/gtest.h>

#include <sys/wait.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "json.hpp"

namespace {

namespace fs = std::filesystem;

struct CliRun {
  int code = -1;
  std::string out;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("matalloc_cli_" + std::string(::testing::UnitTest::GetInstance()
                                              ->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  CliRun Exec(const std::string& args, const std::string& env = "") const {
    const std::string out = Path("stdout.txt");
    std::string cmd = env + " " + MATALLOC_CLI + std::string(" ") + args + " > " + out +
                      " 2> " + Path("stderr.txt");
    int status = std::system(cmd.c_str());
    CliRun r;
    r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    std::ifstream in(out);
    std::stringstream buf;
    buf << in.rdbuf();
    r.out = buf.str();
    return r;
  }

  fs::path dir_;
};

TEST_F(CliTest, GapCoverSucceedsAtOne) {
  ASSERT_EQ(Exec("gen --flavor gap --m 2 --out " + Path("gap2.json")).code, 0);
  CliRun r = Exec("solve-cover --in " + Path("gap2.json") + " --b 1 --eps 0.1");
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "cover");
  EXPECT_TRUE(doc.contains("matroid_side"));
}

TEST_F(CliTest, GapCoverAtTwoEmitsCertificate) {
  ASSERT_EQ(Exec("gen --flavor gap --m 2 --out " + Path("gap2.json")).code, 0);
  CliRun r = Exec("solve-cover --in " + Path("gap2.json") + " --b 2 --eps 0.1");
  EXPECT_EQ(r.code, 2);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_EQ(doc["status"], "infeasible");
  ASSERT_FALSE(doc["failures"].empty());
  EXPECT_TRUE(doc["failures"][0]["valid"].get<bool>());
}

TEST_F(CliTest, GeneratedGapPassesVerify) {
  ASSERT_EQ(Exec("gen --flavor gap --m 3 --out " + Path("g.json")).code, 0);
  CliRun r = Exec("verify --in " + Path("g.json"));
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["axioms"], "pass");
}

TEST_F(CliTest, EmptyCorpusGivesEmptyTable) {
  fs::create_directories(Path("corpus"));
  CliRun r = Exec("bench --in " + Path("corpus"));
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc["rows"].empty());
}

TEST_F(CliTest, RestrictedTwoValueCorpusStaysWithinAlpha) {
  fs::create_directories(Path("corpus"));
  for (int i = 1; i <= 100; ++i) {
    std::string name = Path("corpus/i" + std::to_string(1000 + i) + ".json");
    std::string args = "gen --flavor two-value-santa --m " + std::to_string(2 + i % 3) +
                       " --items " + std::to_string(3 + i % 4) + " --seed " +
                       std::to_string(i) + " --out " + name;
    ASSERT_EQ(Exec(args).code, 0);
  }
  CliRun r = Exec("bench --in " + Path("corpus") + " --eps 0.1");
  ASSERT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 100u);
  for (const auto& row : doc["rows"]) {
    EXPECT_EQ(row["status"], "ok") << row["file"];
    EXPECT_TRUE(row["within_alpha"].get<bool>()) << row["file"];
  }
  EXPECT_NE(doc["summary"]["worst_ratio"], "inf");
}

TEST_F(CliTest, OversizedInstanceIsSkipped) {
  fs::create_directories(Path("corpus"));
  ASSERT_EQ(Exec("gen --flavor restricted-santa --m 3 --items 4 --out " + Path("corpus/a.json")).code, 0);
  ASSERT_EQ(Exec("gen --flavor restricted-santa --m 6 --items 40 --out " + Path("corpus/b.json")).code, 0);
  CliRun r = Exec("bench --in " + Path("corpus"));
  EXPECT_EQ(r.code, 0);
  auto doc = nlohmann::json::parse(r.out);
  ASSERT_EQ(doc["rows"].size(), 2u);
  EXPECT_EQ(doc["rows"][0]["status"], "ok");
  EXPECT_EQ(doc["rows"][1]["status"], "skipped (cap)");
}

TEST_F(CliTest, CapsEnvironmentVariableIsHonored) {
  fs::create_directories(Path("corpus"));
  ASSERT_EQ(Exec("gen --flavor restricted-santa --m 3 --items 4 --out " + Path("corpus/a.json")).code, 0);
  CliRun r = Exec("bench --in " + Path("corpus"), "MATROID_ALLOC_CAPS=enum=5");
  EXPECT_EQ(r.code, 0);
  EXPECT_EQ(nlohmann::json::parse(r.out)["rows"][0]["status"], "skipped (cap)");
  EXPECT_EQ(Exec("bench --in " + Path("corpus"), "MATROID_ALLOC_CAPS=bogus=1").code, 1);
}

TEST_F(CliTest, OutputsAreDeterministic) {
  ASSERT_EQ(Exec("gen --flavor santa-matroid --m 3 --items 3 --seed 5 --out " + Path("s.json")).code, 0);
  ASSERT_EQ(Exec("solve --in " + Path("s.json") + " --out " + Path("a.json")).code, 0);
  ASSERT_EQ(Exec("solve --in " + Path("s.json") + " --out " + Path("b.json")).code, 0);
  std::ifstream a(Path("a.json")), b(Path("b.json"));
  std::stringstream sa, sb;
  sa << a.rdbuf();
  sb << b.rdbuf();
  EXPECT_FALSE(sa.str().empty());
  EXPECT_EQ(sa.str(), sb.str());
}

TEST_F(CliTest, UsageErrorsExitOne) {
  ASSERT_EQ(Exec("gen --flavor gap --m 2 --out " + Path("gap2.json")).code, 0);
  EXPECT_EQ(Exec("solve-cover --in " + Path("gap2.json") + " --eps 0.5").code, 1);
  EXPECT_EQ(Exec("solve-cover --in " + Path("missing.json")).code, 1);
  EXPECT_EQ(Exec("").code, 1);
  EXPECT_EQ(Exec("gen --flavor nonsense").code, 1);
}

TEST_F(CliTest, ReduceAndRoundRoundTrip) {
  ASSERT_EQ(Exec("gen --flavor two-value-santa-matroid --m 3 --items 3 --out " + Path("t.json")).code, 0);
  CliRun core = Exec("reduce --in " + Path("t.json") + " --kind core --guess 1 --alpha 4");
  EXPECT_EQ(core.code, 0);
  EXPECT_EQ(nlohmann::json::parse(core.out)["status"], "ok");

  std::ofstream(Path("i.json")) << R"({"type":"santa","players":2,"items":[
      {"values":[1,1]},{"values":[1,1]},{"values":[1,1]}]})";
  std::ofstream(Path("x.json")) << R"({"x":[[{"num":1,"den":2},{"num":1,"den":2}],
      [{"num":1,"den":2},{"num":1,"den":2}],[1,0]]})";
  CliRun r = Exec("round --in " + Path("i.json") + " --x " + Path("x.json"));
  ASSERT_EQ(r.code, 0) << r.out;
  auto doc = nlohmann::json::parse(r.out);
  EXPECT_TRUE(doc.contains("allocation"));
}

TEST_F(CliTest, HelpDocumentsFlagsAndEnvironment) {
  CliRun r = Exec("solve --help");
  EXPECT_EQ(r.code, 0);
  for (const char* flag : {"--in", "--out", "--b", "--eps", "--alpha", "--seed",
                           "--cap-ground", "--cap-enum", "--format", "MATROID_ALLOC_CAPS"}) {
    EXPECT_NE(r.out.find(flag), std::string::npos) << flag;
  }
}

}  // namespace
