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

#ifndef NARRATE_BABI_READER_H_
#define NARRATE_BABI_READER_H_

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "narrate/drs/drs.h"
#include "narrate/kb/lexicon.h"

namespace narrate::babi {

// Surface names to referent ids, numbered r1, r2, ... in mention order.
class EntityTable {
 public:
  // Returns the referent for `name`, registering it when new.
  std::string Ref(const std::string& name);
  const std::map<std::string, std::string>& refs() const { return refs_; }

 private:
  std::map<std::string, std::string> refs_;
};

// Reads one controlled-English sentence: subject, verb (possibly two words),
// optional object, and prepositional phrases. Articles and the words "back",
// "again" and "there" are dropped. The event time is left at 0. Throws
// Error(kUnsupported) "unknown verb 'x'" when no lexicon lemma follows the
// subject, and Error(kInput) for sentences the frame cannot cover.
drs::EventRecord SentenceToEvent(std::string_view sentence, const kb::Lexicon& lexicon,
                                 EntityTable* entities);

// Accumulates sentences into a DRS with events e1, e2, ... at times 0, 1, ...
class DrsBuilder {
 public:
  explicit DrsBuilder(const kb::Lexicon& lexicon) : lexicon_(lexicon) {}

  void Add(std::string_view sentence);
  const drs::Drs& drs() const { return drs_; }

 private:
  const kb::Lexicon& lexicon_;
  EntityTable entities_;
  drs::Drs drs_;
};

drs::Drs BuildDrs(const std::vector<std::string>& sentences, const kb::Lexicon& lexicon);

}  // namespace narrate::babi

#endif  // NARRATE_BABI_READER_H_
