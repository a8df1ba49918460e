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

#ifndef NARRATE_SEM_PROJECT_H_
#define NARRATE_SEM_PROJECT_H_

#include <cstdint>
#include <utility>
#include <vector>

#include "narrate/alm/ast.h"
#include "narrate/common/diagnostic.h"
#include "narrate/sem/ground.h"

namespace narrate::sem {

// Three-valued state: per atom +1 (true), -1 (false) or 0 (unknown).
struct State {
  std::vector<int8_t> value;

  bool Holds(int literal) const {
    return value[AtomOf(literal)] == (IsNegative(literal) ? -1 : 1);
  }
  // Literals present in the state, ascending.
  std::vector<int> Literals() const;
  friend bool operator==(const State&, const State&) = default;
};

struct Trajectory {
  std::vector<State> states;                   // times 0 .. max_steps - 1
  std::vector<std::pair<int, int>> occurrences;  // (event instance id, time), by time
  Diagnostics diagnostics;                     // executability violations

  int size() const { return static_cast<int>(states.size()); }
};

struct ProjectOptions {
  // Executability violations become errors instead of warnings.
  bool strict_executability = false;
};

// Least superset of `literals` closed under the ground state constraints.
// Throws Error(kInconsistency) naming the first contradiction.
std::vector<int> Closure(const GroundProgram& program, const std::vector<int>& literals);

// Temporal projection from an unknown initial state. Throws
// Error(kInconsistency) on conflicting effects or contradictory closure, and
// Error(kInput) for events that are not actions of the program.
Trajectory Project(const GroundProgram& program, const std::vector<alm::Occurrence>& history,
                   int max_steps, const ProjectOptions& options = {});

// Uses the program's history and max steps (1 when absent).
Trajectory Project(const GroundProgram& ground, const alm::Program& program,
                   const ProjectOptions& options = {});

}  // namespace narrate::sem

#endif  // NARRATE_SEM_PROJECT_H_
