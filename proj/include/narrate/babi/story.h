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

#ifndef NARRATE_BABI_STORY_H_
#define NARRATE_BABI_STORY_H_

#include <string>
#include <string_view>
#include <vector>

namespace narrate::babi {

struct Sentence {
  int line = 0;
  std::string text;

  friend bool operator==(const Sentence&, const Sentence&) = default;
};

struct Question {
  int line = 0;
  std::string text;
  std::string answer;
  std::vector<int> supports;
  int position = 0;  // number of story sentences before the question

  friend bool operator==(const Question&, const Question&) = default;
};

struct Story {
  std::vector<Sentence> sentences;
  std::vector<Question> questions;

  friend bool operator==(const Story&, const Story&) = default;
};

// Task-file format: "N sentence" and "N question?<TAB>answer<TAB>ids".
// A line number that does not increase starts a new story. Throws
// Error(kInput) with the line number.
std::vector<Story> ParseBabi(std::string_view source);

// Inverse of ParseBabi.
std::string RenderBabi(const std::vector<Story>& stories);

}  // namespace narrate::babi

#endif  // NARRATE_BABI_STORY_H_
