// Copyright 2026 The Narrate Authors.
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

#include "narrate/alm/parser.h"
#include "narrate/common/text.h"
#include "support/fixtures.h"

namespace narrate {
namespace {

namespace fs = std::filesystem;

struct Outcome {
  int code = -1;
  std::string out;
  std::string err;
};

class CliTest : public ::testing::Test {
 protected:
  void SetUp() override {
    dir_ = fs::temp_directory_path() /
           ("narrate_cli_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
    fs::remove_all(dir_);
    fs::create_directories(dir_);
  }
  void TearDown() override { fs::remove_all(dir_); }

  std::string Path(const std::string& name) const { return (dir_ / name).string(); }

  std::string Write(const std::string& name, const std::string& text) const {
    WriteFile(Path(name), text);
    return Path(name);
  }

  Outcome Run(const std::string& args) const {
    const std::string cmd = std::string(NARRATE_CLI_PATH) + " " + args + " >" + Path("stdout") +
                            " 2>" + Path("stderr");
    const int status = std::system(cmd.c_str());
    Outcome o;
    o.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
    o.out = ReadFile(Path("stdout"));
    o.err = ReadFile(Path("stderr"));
    return o;
  }

  fs::path dir_;
};

TEST_F(CliTest, NarrativeTextToModel) {
  const std::string in = Write("js.txt", "John traveled to the hallway.\n"
                                         "Sandra journeyed to the hallway.\n");
  const Outcome o = Run("run --input " + in + " --emit-model " + Path("model.txt"));
  ASSERT_EQ(o.code, 0) << o.err;
  const std::string model = ReadFile(Path("model.txt"));
  EXPECT_NE(model.find("loc_in(John,hallway,2)."), std::string::npos);
  EXPECT_NE(model.find("happened(e1,0)."), std::string::npos);
}

TEST_F(CliTest, DrsToProgramText) {
  const std::string in = Write("js.drs", testing::kJsDrs);
  const Outcome o = Run("run --from drs --name js_discourse --input " + in + " --emit-alm " +
                        Path("js.alm"));
  ASSERT_EQ(o.code, 0) << o.err;
  auto emitted = alm::ParseProgram(ReadFile(Path("js.alm")));
  ASSERT_TRUE(emitted.ok());
  EXPECT_EQ(*emitted.value, *alm::ParseProgram(testing::kJsGeneratedProgram).value);
}

TEST_F(CliTest, ProgramInputUsesInstanceNames) {
  const std::string in = Write("js.alm", testing::kJsProgram);
  const Outcome o = Run("run --from alm --input " + in);
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_NE(o.out.find("loc_in(sandra,hallway,2)."), std::string::npos);
}

TEST_F(CliTest, BabiInputAnswersQuestions) {
  const std::string in = Write("story.txt", testing::kFootballStory);
  const Outcome o = Run("run --input " + in + " --emit-drs " + Path("story.drs"));
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.out, "7\tgarden\n");
  EXPECT_NE(ReadFile(Path("story.drs")).find(", \"football\")."), std::string::npos);
}

TEST_F(CliTest, UnknownVerbExitsThree) {
  const std::string in = Write("bad.txt", "John teleported to the hallway.\n");
  const Outcome o = Run("run --input " + in);
  EXPECT_EQ(o.code, 3);
  EXPECT_NE(o.err.find("teleported"), std::string::npos);
  EXPECT_NE(o.err.find("reader"), std::string::npos);
}

TEST_F(CliTest, MalformedInputExitsOne) {
  const std::string in = Write("bad.drs", "entity(r1).\n");
  EXPECT_EQ(Run("run --from drs --input " + in).code, 1);
  const std::string alm = Write("bad.alm", "system description\n");
  EXPECT_EQ(Run("run --from alm --input " + alm).code, 1);
}

TEST_F(CliTest, StrictExecutabilityExitsTwo) {
  const std::string in = Write("twice.txt", "John went to the hallway.\n"
                                            "John went to the hallway.\n");
  EXPECT_EQ(Run("run --input " + in).code, 0);
  const Outcome strict = Run("run --strict-exec --input " + in);
  EXPECT_EQ(strict.code, 2);
  EXPECT_NE(strict.err.find("project"), std::string::npos);
}

TEST_F(CliTest, GenerateThenEvaluate) {
  const std::string data = Path("data");
  for (int task : {1, 7}) {
    const Outcome g = Run("gen --task " + std::to_string(task) +
                          " --count 40 --seed 5 --out " + data);
    ASSERT_EQ(g.code, 0) << g.err;
  }
  EXPECT_TRUE(fs::exists(fs::path(data) / "qa1_test.txt"));
  const Outcome e = Run("eval --data " + data + " --tasks 1,7 --report " + Path("report.txt"));
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_NE(e.out.find("100.0"), std::string::npos);
  EXPECT_EQ(ReadFile(Path("report.txt")), e.out);
  const auto lines = Split(ReadFile(Path("report.txt.jsonl")), '\n');
  EXPECT_EQ(lines[0], R"({"id":1,"scored":40,"correct":40,"errors":0,"accuracy":100.0})");
}

TEST_F(CliTest, EvaluateWithoutSynonymsFailsLoudly) {
  const std::string data = Path("data");
  ASSERT_EQ(Run("gen --task 1 --count 40 --seed 5 --synonym-swap 0.5 --out " + data).code, 0);
  std::string base;
  for (const auto& line : Split(ReadFile(DATA_LEXICON), '\n')) base += line + "\n";
  const std::string lex = Write("base.tsv", base);
  const Outcome e = Run("eval --data " + data + " --tasks 1 --lexicon " + lex);
  EXPECT_EQ(e.code, 3);
  EXPECT_NE(e.err.find("unknown verb"), std::string::npos);
}

TEST_F(CliTest, MissingTaskDataExitsOne) {
  fs::create_directories(Path("empty"));
  EXPECT_EQ(Run("eval --data " + Path("empty") + " --tasks 3").code, 1);
}

}  // namespace
}  // namespace narrate
