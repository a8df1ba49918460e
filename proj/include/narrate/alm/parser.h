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

#ifndef NARRATE_ALM_PARSER_H_
#define NARRATE_ALM_PARSER_H_

#include <string_view>
#include <vector>

#include "narrate/alm/ast.h"
#include "narrate/common/diagnostic.h"

namespace narrate::alm {

// Parses a complete system description with optional directives and history.
// Never throws on malformed input: failures come back as diagnostics with a
// source location.
Parsed<Program> ParseProgram(std::string_view source);

// Parses a library file: a sequence of "theory" blocks with no structure.
Parsed<std::vector<Theory>> ParseTheoryFile(std::string_view source);

// Words with a fixed role in the grammar; they cannot name sorts, fluents or
// instances.
bool IsReservedWord(std::string_view word);

}  // namespace narrate::alm

#endif  // NARRATE_ALM_PARSER_H_
