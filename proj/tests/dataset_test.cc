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

#include <map>
#include <regex>
#include <set>

#include "narrate/babi/story.h"
#include "narrate/common/text.h"
#include "narrate/harness/dataset.h"
#include "narrate/kb/lexicon.h"

namespace narrate::harness {
namespace {

std::vector<babi::Story> Make(int task, int n, uint64_t seed, double swap = 0.0) {
  return GenerateDataset({task, n, seed, swap}, kb::BuiltinLexicon());
}

int CountQuestions(const std::vector<babi::Story>& stories) {
  int n = 0;
  for (const auto& s : stories) n += static_cast<int>(s.questions.size());
  return n;
}

TEST(DatasetTest, DeterministicInTheSeed) {
  for (int task : SupportedTasks()) {
    EXPECT_EQ(babi::RenderBabi(Make(task, 50, 3)), babi::RenderBabi(Make(task, 50, 3)));
    EXPECT_NE(babi::RenderBabi(Make(task, 50, 3)), babi::RenderBabi(Make(task, 50, 4)));
  }
}

TEST(DatasetTest, ExactQuestionCount) {
  for (int task : SupportedTasks()) EXPECT_EQ(CountQuestions(Make(task, 37, 1)), 37);
  EXPECT_TRUE(Make(1, 0, 1).empty());
}

TEST(DatasetTest, RendersAsParseableTaskFile) {
  for (int task : SupportedTasks()) {
    const auto stories = Make(task, 30, 9);
    EXPECT_EQ(babi::ParseBabi(babi::RenderBabi(stories)), stories);
  }
  EXPECT_EQ(DatasetFileName(7), "qa7_test.txt");
}

TEST(DatasetTest, UnsupportedTaskAndBadSwapAreInputErrors) {
  EXPECT_THROW(Make(4, 10, 1), Error);
  EXPECT_THROW(Make(1, 10, 1, 1.5), Error);
  try {
    GenerateDataset({1, 10, 1, 0.5}, kb::BuiltinLexicon(false));
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
    EXPECT_NE(std::string(e.what()).find("missing from the lexicon"), std::string::npos);
  }
}

// Replays a task-2 story by hand: the object sits with whoever last picked
// it up, and that person is wherever they last went.
std::string CarrierDestination(const babi::Story& s, const std::string& object) {
  static const std::regex kMove(R"((\w+) (?:moved|went|journeyed|travelled)(?: back)? to the (\w+)\.)");
  static const std::regex kGet(R"((\w+) (?:got|grabbed|took|picked up) the (\w+)(?: there)?\.)");
  static const std::regex kDrop(R"((\w+) (?:dropped|discarded|left|put down) the (\w+)(?: there)?\.)");
  std::map<std::string, std::string> at;
  std::string carrier, place;
  std::smatch m;
  for (int i = 0; i < s.questions.back().position; ++i) {
    const std::string& text = s.sentences[i].text;
    if (std::regex_match(text, m, kMove)) {
      at[m[1]] = m[2];
      if (m[1] == carrier) place = m[2];
    } else if (std::regex_match(text, m, kGet) && m[2] == object) {
      carrier = m[1];
      place = at[carrier];
    } else if (std::regex_match(text, m, kDrop) && m[2] == object) {
      carrier.clear();
    }
  }
  return place;
}

TEST(DatasetTest, TaskTwoGoldIsTheCarriersLastDestination) {
  const auto stories = Make(2, 1, 7);
  ASSERT_EQ(CountQuestions(stories), 1);
  const auto& q = stories.back().questions.back();
  std::smatch m;
  ASSERT_TRUE(std::regex_match(q.text, m, std::regex(R"(Where is the (\w+)\?)"))) << q.text;
  EXPECT_EQ(q.answer, CarrierDestination(stories.back(), m[1]));
}

TEST(DatasetTest, GoldAnswerShapes) {
  static const std::set<std::string> kCounts = {"none", "one", "two", "three", "four", "five"};
  for (const auto& s : Make(6, 100, 2)) {
    for (const auto& q : s.questions) EXPECT_TRUE(q.answer == "yes" || q.answer == "no");
  }
  for (const auto& s : Make(7, 100, 2)) {
    for (const auto& q : s.questions) EXPECT_TRUE(kCounts.count(q.answer)) << q.answer;
  }
  for (const auto& s : Make(5, 100, 2)) {
    for (const auto& q : s.questions) EXPECT_FALSE(q.answer.empty());
  }
}

TEST(DatasetTest, SupportsPointAtEarlierSentences) {
  for (int task : SupportedTasks()) {
    for (const auto& s : Make(task, 40, 5)) {
      for (const auto& q : s.questions) {
        EXPECT_FALSE(q.supports.empty());
        for (int line : q.supports) EXPECT_LT(line, q.line);
      }
    }
  }
}

TEST(DatasetTest, SynonymSwapReplacesAboutHalf) {
  std::set<std::string> bases, synonyms;
  for (const auto& [b, s] : SynonymSwaps()) {
    bases.insert(b);
    synonyms.insert(s);
  }
  EXPECT_EQ(synonyms.size(), 13u);
  const kb::Lexicon lex = kb::BuiltinLexicon();
  int base = 0, swapped = 0;
  for (int task : SupportedTasks()) {
    for (const auto& story : Make(task, 200, 11, 0.5)) {
      for (const auto& sentence : story.sentences) {
        const auto words = SplitWhitespace(sentence.text);
        const std::string one = words.size() > 1 ? words[1] : "";
        const std::string two = words.size() > 2 ? one + " " + words[2] : "";
        if (bases.count(two) || bases.count(one)) ++base;
        if (synonyms.count(one)) ++swapped;
      }
    }
  }
  const double share = static_cast<double>(swapped) / (base + swapped);
  EXPECT_GT(share, 0.4);
  EXPECT_LT(share, 0.6);
  int none = 0;
  for (const auto& story : Make(1, 200, 11, 0.0)) {
    for (const auto& sentence : story.sentences) {
      none += synonyms.count(SplitWhitespace(sentence.text)[1]) > 0;
    }
  }
  EXPECT_EQ(none, 0);
}

}  // namespace
}  // namespace narrate::harness
