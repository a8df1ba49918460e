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

#include "narrate/qa/question.h"

#include <regex>
#include <vector>

#include "narrate/common/diagnostic.h"
#include "narrate/common/text.h"

namespace narrate::qa {
namespace {

struct Rule {
  std::regex pattern;
  QuestionType type;
  // Slot names for the capture groups, in order.
  std::vector<std::string QuestionKind::*> slots;
};

const std::vector<Rule>& Rules() {
  using Q = QuestionKind;
  using T = QuestionType;
  const auto icase = std::regex::icase | std::regex::ECMAScript;
  static const auto* rules = new std::vector<Rule>{
      {std::regex(R"(where was the (\w+) before the (\w+))", icase), T::kWhereObjectBefore,
       {&Q::object, &Q::place}},
      {std::regex(R"(where is the (\w+))", icase), T::kWhereObject, {&Q::object}},
      {std::regex(R"(where is (\w+))", icase), T::kWhereAgent, {&Q::entity}},
      {std::regex(R"(who gave the (\w+) to (?:the )?(\w+))", icase), T::kWhoGave,
       {&Q::object, &Q::recipient}},
      {std::regex(R"(who gave the (\w+))", icase), T::kWhoGave, {&Q::object}},
      {std::regex(R"(who did (\w+) give the (\w+) to)", icase), T::kWhoReceived,
       {&Q::giver, &Q::object}},
      {std::regex(R"(who received the (\w+))", icase), T::kWhoReceived, {&Q::object}},
      {std::regex(R"(what did (\w+) give to (?:the )?(\w+))", icase), T::kWhatGiven,
       {&Q::giver, &Q::recipient}},
      {std::regex(R"(what did (\w+) give)", icase), T::kWhatGiven, {&Q::giver}},
      {std::regex(R"(is (\w+) in the (\w+))", icase), T::kYesNoLocation,
       {&Q::entity, &Q::place}},
      {std::regex(R"(how many objects is (\w+) (?:carrying|holding))", icase), T::kCountCarrying,
       {&Q::entity}},
      {std::regex(R"(what is (\w+) (?:carrying|holding))", icase), T::kListCarrying, {&Q::entity}},
  };
  return *rules;
}

}  // namespace

const char* QuestionTypeName(QuestionType type) {
  switch (type) {
    case QuestionType::kWhereAgent: return "where-agent";
    case QuestionType::kWhereObject: return "where-object";
    case QuestionType::kWhereObjectBefore: return "where-object-before";
    case QuestionType::kWhoGave: return "who-gave";
    case QuestionType::kWhatGiven: return "what-given";
    case QuestionType::kWhoReceived: return "who-received";
    case QuestionType::kYesNoLocation: return "yes-no-location";
    case QuestionType::kCountCarrying: return "count-carrying";
    case QuestionType::kListCarrying: return "list-carrying";
  }
  return "unknown";
}

QuestionKind ClassifyQuestion(std::string_view question) {
  std::string text(Trim(question));
  while (!text.empty() && (text.back() == '?' || text.back() == ' ')) text.pop_back();
  for (const auto& rule : Rules()) {
    std::smatch m;
    if (!std::regex_match(text, m, rule.pattern)) continue;
    QuestionKind kind;
    kind.type = rule.type;
    for (size_t i = 0; i < rule.slots.size(); ++i) kind.*(rule.slots[i]) = m[i + 1].str();
    return kind;
  }
  throw Error(ErrorKind::kUnsupported, "unsupported question: " + std::string(Trim(question)));
}

std::string Normalize(std::string_view surface) {
  std::string s(Trim(surface));
  while (!s.empty() && std::string_view(".?!,").find(s.back()) != std::string_view::npos) {
    s.pop_back();
  }
  std::vector<std::string> kept;
  for (const auto& w : SplitWhitespace(s)) {
    std::string lower = ToLower(w);
    if (lower != "the" && lower != "a" && lower != "an") kept.push_back(lower);
  }
  return Join(kept, " ");
}

}  // namespace narrate::qa
