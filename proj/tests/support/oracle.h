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

#ifndef NARRATE_TESTS_SUPPORT_ORACLE_H_
#define NARRATE_TESTS_SUPPORT_ORACLE_H_

#include <set>
#include <string>
#include <vector>

namespace narrate::testing {

// Brute-force reference for temporal projection over the four shipped
// action classes. The effects and the location constraint are written out
// by hand here; nothing is shared with the grounder or the projector.

enum class Act { kMove, kGet, kDrop, kGive };

struct OracleEvent {
  Act act;
  std::string actor;
  std::string target;     // destination for kMove, the object otherwise
  std::string recipient;  // kGive only
};

struct OracleRun {
  bool ok = false;
  std::string error;
  // Literal texts such as "loc_in(a1,p1)" and "-holding(a1,o1)" per time.
  std::vector<std::set<std::string>> states;
};

// States 0..events.size(). Each successor is found by trying every subset X
// of the previous state's literals as the part that persists, keeping those
// with S' = Cn(E u X) consistent and S n S' = X, and then the candidates
// whose X is maximal. No candidate, or more than one, is an error.
OracleRun OracleProject(const std::vector<OracleEvent>& events);

// Every sequence of at most `max_len` events over agents a1, a2, places
// p1, p2 and object o1. Moves go to either place, gets and drops use o1,
// gives go to the other agent.
std::vector<std::vector<OracleEvent>> EnumerateSequences(int max_len);

// "a1 went to the p1." and so on.
std::string Sentence(const OracleEvent& event);

}  // namespace narrate::testing

#endif  // NARRATE_TESTS_SUPPORT_ORACLE_H_
