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

#ifndef NARRATE_SEM_MODEL_H_
#define NARRATE_SEM_MODEL_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "narrate/sem/ground.h"
#include "narrate/sem/project.h"

namespace narrate::sem {

struct ModelAtom {
  std::string function;
  std::vector<std::string> args;
  int time = 0;

  // "loc_in(John,hallway,1)".
  std::string ToString() const;
  friend bool operator==(const ModelAtom&, const ModelAtom&) = default;
};

// Positive part of a trajectory with instance ids replaced by names:
// happened atoms by time, then fluent atoms by text and time.
struct Model {
  std::vector<ModelAtom> atoms;

  // One "atom." per line.
  std::string ToText() const;
  bool Contains(std::string_view atom_text) const;
};

// Instance id -> display name.
using NameMap = std::map<std::string, std::string>;

// Every instance named by itself.
NameMap IdentityNames(const SymbolTable& symbols);

// Event ids in happened atoms are kept as they are; every fluent argument
// must have a name or Error(kInput) "unnamed referent X" is thrown.
Model ExtractModel(const GroundProgram& program, const Trajectory& trajectory,
                   const NameMap& names);

// Function name plus argument slots, nullopt matching anything. A pattern
// with one slot more than an atom's arguments also constrains the time. The
// function "_" matches every fluent.
struct Pattern {
  std::string function;
  std::vector<std::optional<std::string>> args;
};

// Parses "loc_in(_,hallway,2)". Throws Error(kInput).
Pattern ParsePattern(std::string_view text);

std::vector<ModelAtom> Query(const Model& model, const Pattern& pattern);

}  // namespace narrate::sem

#endif  // NARRATE_SEM_MODEL_H_
