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

#ifndef NARRATE_GEN_GENERATE_H_
#define NARRATE_GEN_GENERATE_H_

#include <set>
#include <string>
#include <string_view>

#include "narrate/alm/ast.h"
#include "narrate/drs/drs.h"
#include "narrate/kb/library.h"
#include "narrate/kb/roles.h"

namespace narrate::gen {

struct GenConfig {
  const kb::Library* library = &kb::BuiltinLibrary();
  const kb::RoleSortTable* roles = &kb::RoleSortTable::Default();
  // Used for the system description and the narrative module; the theory
  // and structure get "_theory" and "_structure" appended.
  std::string name = "narrative";
};

// Builds the program for a narrative: one import per verb class, one sort
// per entity, the structure, projection directives and the history with
// event times compacted to 0, 1, 2, ... Throws Error(kUnsupported) listing
// classes without a library module, or naming a role the class lacks, and
// Error(kInput) for an invalid DRS.
alm::Program GenerateProgram(const drs::Drs& drs, const GenConfig& config = {});

// Sort identifier for an entity name: lowercase, spaces to '_', other
// non-identifier characters dropped, "s_" prefixed before a leading digit.
// Names in `taken` get the smallest free "_entN" suffix, N >= 2. Throws
// Error(kInput) when nothing is left of the name.
std::string EntitySortName(std::string_view name, const std::set<std::string>& taken);

}  // namespace narrate::gen

#endif  // NARRATE_GEN_GENERATE_H_
