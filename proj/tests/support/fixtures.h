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

#ifndef NARRATE_TESTS_SUPPORT_FIXTURES_H_
#define NARRATE_TESTS_SUPPORT_FIXTURES_H_

#include <string>
#include <vector>

namespace narrate::testing {

// John and Sandra walking into the hallway.
const std::vector<std::string>& JsSentences();

// Hand-written JS system description with its history, projection
// directives and three time points.
extern const char kJsProgram[];

// DRS of the JS narrative in fact format.
extern const char kJsDrs[];

// Program expected from the JS DRS, with the printed listing's three slips
// repaired: "sorts declarations", the import path "t_run_51_32", and the
// missing comma in "happened(e2 1)".
extern const char kJsGeneratedProgram[];

// Task 2 story: six sentences and one question.
extern const char kFootballStory[];

// The monkey walking to the tree and grabbing the banana.
const std::vector<std::string>& MonkeySentences();

}  // namespace narrate::testing

#endif  // NARRATE_TESTS_SUPPORT_FIXTURES_H_
