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

#include "narrate/babi/reader.h"

#include <set>

#include "narrate/common/diagnostic.h"
#include "narrate/common/text.h"

namespace narrate::babi {
namespace {

const std::set<std::string>& DroppedWords() {
  static const auto* words = new std::set<std::string>{"the", "a", "an", "back", "again", "there"};
  return *words;
}

const std::set<std::string>& Prepositions() {
  static const auto* words = new std::set<std::string>{"to", "in", "into", "from", "at", "on", "onto"};
  return *words;
}

}  // namespace

std::string EntityTable::Ref(const std::string& name) {
  auto it = refs_.find(name);
  if (it != refs_.end()) return it->second;
  std::string ref = "r" + std::to_string(refs_.size() + 1);
  refs_.emplace(name, ref);
  return ref;
}

drs::EventRecord SentenceToEvent(std::string_view sentence, const kb::Lexicon& lexicon,
                                 EntityTable* entities) {
  std::string text(Trim(sentence));
  while (!text.empty() && (text.back() == '.' || text.back() == '!')) text.pop_back();
  std::vector<std::string> tokens;
  for (auto& t : SplitWhitespace(text)) {
    if (!DroppedWords().count(ToLower(t))) tokens.push_back(std::move(t));
  }
  auto unparseable = [&]() -> Error {
    return Error(ErrorKind::kInput, "cannot read sentence '" + std::string(Trim(sentence)) + "'");
  };
  if (tokens.size() < 2) throw unparseable();

  // The verb is the first lemma after a nonempty subject, longest match first.
  const kb::Frame* frame = nullptr;
  size_t verb_start = 0, verb_end = 0;
  for (size_t i = 1; i < tokens.size() && !frame; ++i) {
    for (size_t n = std::min<size_t>(lexicon.max_words(), tokens.size() - i); n >= 1; --n) {
      std::vector<std::string> words;
      for (size_t k = i; k < i + n; ++k) words.push_back(ToLower(tokens[k]));
      if (const kb::Frame* f = lexicon.Find(Join(words, " "))) {
        frame = f;
        verb_start = i;
        verb_end = i + n;
        break;
      }
    }
  }
  if (!frame) throw Error(ErrorKind::kUnsupported, "unknown verb '" + ToLower(tokens[1]) + "'");

  // Slots in sentence order: subject, object, then prepositional phrases.
  std::vector<std::pair<std::string, std::string>> slots;
  std::vector<std::string> subject(tokens.begin(), tokens.begin() + verb_start);
  slots.emplace_back("subj", Join(subject, " "));
  std::string slot = "obj";
  std::vector<std::string> phrase;
  auto flush = [&] {
    if (!phrase.empty()) slots.emplace_back(slot, Join(phrase, " "));
    phrase.clear();
  };
  for (size_t i = verb_end; i < tokens.size(); ++i) {
    std::string lower = ToLower(tokens[i]);
    if (Prepositions().count(lower)) {
      flush();
      slot = lower;
    } else {
      phrase.push_back(tokens[i]);
    }
  }
  if (phrase.empty() && slot != "obj") throw unparseable();
  flush();

  drs::EventRecord event;
  event.class_id = frame->class_id;
  for (const auto& [s, name] : slots) {
    const std::string* role = frame->RoleFor(s);
    if (!role) throw unparseable();
    for (const auto& [r, ref] : event.args) {
      if (r == *role) throw unparseable();
    }
    event.args.emplace_back(*role, entities->Ref(name));
  }
  return event;
}

void DrsBuilder::Add(std::string_view sentence) {
  drs::EventRecord e = SentenceToEvent(sentence, lexicon_, &entities_);
  e.time = static_cast<int>(drs_.events.size());
  for (const auto& [name, ref] : entities_.refs()) drs_.entities.emplace(ref, name);
  drs_.events.emplace("e" + std::to_string(drs_.events.size() + 1), std::move(e));
}

drs::Drs BuildDrs(const std::vector<std::string>& sentences, const kb::Lexicon& lexicon) {
  DrsBuilder builder(lexicon);
  for (const auto& s : sentences) builder.Add(s);
  return builder.drs();
}

}  // namespace narrate::babi
