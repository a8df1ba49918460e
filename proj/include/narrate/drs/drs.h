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

#ifndef NARRATE_DRS_DRS_H_
#define NARRATE_DRS_DRS_H_

#include <map>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "narrate/common/diagnostic.h"
#include "narrate/common/text.h"

namespace narrate::drs {

struct EventRecord {
  std::string class_id;  // e.g. "run-51.3.2-1"
  int time = 0;
  // (role, referent) in the order the facts appear.
  std::vector<std::pair<std::string, std::string>> args;

  friend bool operator==(const EventRecord&, const EventRecord&) = default;
};

struct Drs {
  std::map<std::string, std::string, NaturalLess> entities;  // referent -> name
  std::map<std::string, EventRecord, NaturalLess> events;    // event id -> record

  // Event ids ordered by time, then id.
  std::vector<std::string> EventsByTime() const;
  friend bool operator==(const Drs&, const Drs&) = default;
};

// Parses entity/1, property/2, event/1, eventType/2, eventTime/2 and
// eventArgument/3 facts in any order; several facts may share a line.
Parsed<Drs> ParseDrs(std::string_view source);

// Entities, then properties, then one block per event.
std::string SerializeDrs(const Drs& drs);

// Errors for shared time points and undeclared referents; a warning when
// the sorted times are not 0, 1, 2, ...
Diagnostics ValidateDrs(const Drs& drs);

}  // namespace narrate::drs

#endif  // NARRATE_DRS_DRS_H_
