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

#ifndef NARRATE_KB_LEXICON_H_
#define NARRATE_KB_LEXICON_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "narrate/common/diagnostic.h"
#include "narrate/kb/library.h"

namespace narrate::kb {

// A verb sense: class id and the thematic role of each grammatical slot.
// Slots are "subj", "obj" or a preposition such as "to".
struct Frame {
  std::string lemma;
  std::string class_id;
  std::vector<std::pair<std::string, std::string>> slots;

  // Role for `slot`, or nullptr.
  const std::string* RoleFor(std::string_view slot) const;
  friend bool operator==(const Frame&, const Frame&) = default;
};

class Lexicon {
 public:
  // Adds or replaces the entry for frame.lemma.
  void Add(Frame frame);

  // `lemma` is lowercase and may span several words ("picked up").
  const Frame* Find(std::string_view lemma) const;

  // Longest lemma, in words.
  int max_words() const { return max_words_; }
  const std::map<std::string, Frame>& entries() const { return entries_; }
  bool empty() const { return entries_.empty(); }

 private:
  std::map<std::string, Frame> entries_;
  int max_words_ = 0;
};

// Parses "lemma<TAB>class<TAB>slot=Role slot=Role" lines. Blank lines and
// lines starting with '#' are skipped. Throws Error(kInput).
Lexicon ParseLexicon(std::string_view text, const std::string& origin);

// Adds every entry of `text` to `lexicon`.
void ExtendLexicon(Lexicon* lexicon, std::string_view text, const std::string& origin);

// The shipped verbs; `with_synonyms` adds the bAbI+ synonym entries.
Lexicon BuiltinLexicon(bool with_synonyms = true);

// Entries whose class has no library module, or whose roles the class module
// does not declare as vn_ attributes.
Diagnostics CheckLexicon(const Lexicon& lexicon, const Library& library);

}  // namespace narrate::kb

#endif  // NARRATE_KB_LEXICON_H_
