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

#include "narrate/kb/lexicon.h"

#include "narrate/common/text.h"
#include "narrate/kb/embedded.h"
#include "narrate/kb/roles.h"

namespace narrate::kb {

const std::string* Frame::RoleFor(std::string_view slot) const {
  for (const auto& [s, role] : slots) {
    if (s == slot) return &role;
  }
  return nullptr;
}

void Lexicon::Add(Frame frame) {
  max_words_ = std::max(max_words_, static_cast<int>(SplitWhitespace(frame.lemma).size()));
  std::string key = frame.lemma;
  entries_[key] = std::move(frame);
}

const Frame* Lexicon::Find(std::string_view lemma) const {
  auto it = entries_.find(std::string(lemma));
  return it == entries_.end() ? nullptr : &it->second;
}

void ExtendLexicon(Lexicon* lexicon, std::string_view text, const std::string& origin) {
  int line_no = 0;
  for (const auto& raw : Split(text, '\n')) {
    ++line_no;
    std::string_view line = Trim(raw);
    if (line.empty() || line.front() == '#') continue;
    auto where = [&] { return origin + ":" + std::to_string(line_no) + ": "; };
    auto cols = Split(line, '\t');
    if (cols.size() != 3) {
      throw Error(ErrorKind::kInput, where() + "expected lemma, class and frame separated by tabs");
    }
    Frame f;
    f.lemma = Join(SplitWhitespace(ToLower(cols[0])), " ");
    f.class_id = std::string(Trim(cols[1]));
    if (f.lemma.empty() || f.class_id.empty()) {
      throw Error(ErrorKind::kInput, where() + "empty lemma or class");
    }
    for (const auto& slot : SplitWhitespace(cols[2])) {
      auto eq = slot.find('=');
      if (eq == std::string::npos || eq == 0 || eq + 1 == slot.size()) {
        throw Error(ErrorKind::kInput, where() + "malformed slot '" + slot + "'");
      }
      f.slots.emplace_back(ToLower(slot.substr(0, eq)), slot.substr(eq + 1));
    }
    if (f.slots.empty()) throw Error(ErrorKind::kInput, where() + "frame has no slots");
    lexicon->Add(std::move(f));
  }
}

Lexicon ParseLexicon(std::string_view text, const std::string& origin) {
  Lexicon lex;
  ExtendLexicon(&lex, text, origin);
  return lex;
}

Lexicon BuiltinLexicon(bool with_synonyms) {
  Lexicon lex;
  for (const auto& f : EmbeddedFiles()) {
    if (f.path == "lexicon.tsv" || (with_synonyms && f.path == "lexicon_plus.tsv")) {
      ExtendLexicon(&lex, f.contents, std::string(f.path));
    }
  }
  return lex;
}

Diagnostics CheckLexicon(const Lexicon& lexicon, const Library& library) {
  Diagnostics diags;
  for (const auto& [lemma, frame] : lexicon.entries()) {
    auto path = library.ModuleForClass(frame.class_id);
    if (!path) {
      diags.push_back(MakeError("lemma '" + lemma + "': no module for " + frame.class_id));
      continue;
    }
    const alm::ModuleDecl* m = library.Find(*path);
    for (const auto& [slot, role] : frame.slots) {
      std::string attr = RoleAttribute(role);
      bool found = false;
      for (const auto& s : m->sorts) {
        for (const auto& a : s.attributes) found = found || a.name == attr;
      }
      if (!found) {
        diags.push_back(MakeError("lemma '" + lemma + "': " + path->ToString() +
                                  " has no attribute " + attr));
      }
    }
  }
  return diags;
}

}  // namespace narrate::kb
