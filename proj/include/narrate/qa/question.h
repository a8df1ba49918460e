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

#ifndef NARRATE_QA_QUESTION_H_
#define NARRATE_QA_QUESTION_H_

#include <string>
#include <string_view>

namespace narrate::qa {

enum class QuestionType {
  kWhereAgent,         // Where is X?
  kWhereObject,        // Where is the O?
  kWhereObjectBefore,  // Where was the O before the P?
  kWhoGave,            // Who gave the O [to R]?
  kWhatGiven,          // What did G give [to R]?
  kWhoReceived,        // Who received the O? / Who did G give the O to?
  kYesNoLocation,      // Is X in the P?
  kCountCarrying,      // How many objects is X carrying?
  kListCarrying,       // What is X carrying?
};

const char* QuestionTypeName(QuestionType type);

// Slots are surface words without articles; unused slots stay empty.
struct QuestionKind {
  QuestionType type = QuestionType::kWhereAgent;
  std::string entity;     // agent asked about
  std::string object;
  std::string place;
  std::string giver;
  std::string recipient;

  friend bool operator==(const QuestionKind&, const QuestionKind&) = default;
};

// Throws Error(kUnsupported) "unsupported question: ..." when no pattern
// matches.
QuestionKind ClassifyQuestion(std::string_view question);

// Lowercase, articles and terminal punctuation removed: "the football?" ->
// "football".
std::string Normalize(std::string_view surface);

}  // namespace narrate::qa

#endif  // NARRATE_QA_QUESTION_H_
