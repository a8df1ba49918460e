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

#ifndef NARRATE_SEM_GROUND_H_
#define NARRATE_SEM_GROUND_H_

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "narrate/alm/ast.h"
#include "narrate/sem/symbols.h"

namespace narrate::sem {

// Ground literals are ints: 2 * atom for the atom, 2 * atom + 1 for its
// negation.
inline int PositiveLiteral(int atom) { return 2 * atom; }
inline int NegativeLiteral(int atom) { return 2 * atom + 1; }
inline int AtomOf(int literal) { return literal >> 1; }
inline bool IsNegative(int literal) { return literal & 1; }
inline int Complement(int literal) { return literal ^ 1; }

struct GroundAtom {
  std::string function;
  std::vector<int> args;  // instance ids
};

struct GroundCausalLaw {
  int event;
  int head;
  std::vector<int> body;
};

struct GroundConstraint {
  int head;
  std::vector<int> body;
};

struct GroundExecutability {
  int event;
  std::vector<int> body;
};

struct GroundOptions {
  // Upper bound on ground atoms plus ground axioms.
  std::size_t max_size = 1000000;
};

// A program with every variable instantiated. Static conditions (instance
// tests, comparisons, attributes) are already evaluated; bodies keep only
// fluent literals.
class GroundProgram {
 public:
  SymbolTable symbols;
  std::vector<GroundAtom> atoms;
  std::vector<GroundCausalLaw> causal_laws;
  std::vector<GroundConstraint> constraints;
  std::vector<GroundExecutability> executability;

  // Returns the atom id, or nullopt when the arguments do not respect the
  // fluent's declared sorts.
  std::optional<int> FindAtom(const std::string& function, const std::vector<int>& args) const;
  int AddAtom(GroundAtom atom);

  std::string AtomText(int atom) const;
  std::string LiteralText(int literal) const;
  std::string Text(const GroundCausalLaw& law) const;
  std::string Text(const GroundConstraint& constraint) const;
  std::string Text(const GroundExecutability& condition) const;

 private:
  std::map<std::pair<std::string, std::vector<int>>, int> index_;
};

// Grounds a validated, import-free program. Throws Error(kInput) when the
// program does not validate, Error(kUnsupported) for attribute constraints
// that depend on fluents, and Error(kSizing) past options.max_size.
GroundProgram Ground(const alm::Program& program, const GroundOptions& options = {});

}  // namespace narrate::sem

#endif  // NARRATE_SEM_GROUND_H_
