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

#ifndef NARRATE_ALM_AST_H_
#define NARRATE_ALM_AST_H_

// Abstract syntax of the supported action-language fragment: a system
// description (theory + structure), projection directives, and a history.

#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "narrate/common/diagnostic.h"

namespace narrate::alm {

// Built-in sorts every program can refer to.
inline constexpr const char* kUniverse = "universe";
inline constexpr const char* kActions = "actions";
inline constexpr const char* kBooleans = "booleans";

struct Term {
  enum class Kind { kConstant, kVariable };

  Kind kind = Kind::kConstant;
  std::string name;

  static Term Constant(std::string name) { return {Kind::kConstant, std::move(name)}; }
  static Term Variable(std::string name) { return {Kind::kVariable, std::move(name)}; }
  bool is_variable() const { return kind == Kind::kVariable; }

  friend bool operator==(const Term&, const Term&) = default;
};

// f(t1,...,tn) or -f(t1,...,tn). The function is a fluent or an attribute;
// for attributes the first argument is the owning instance.
struct Literal {
  bool positive = true;
  std::string function;
  std::vector<Term> args;
  SourceLoc loc;

  friend bool operator==(const Literal&, const Literal&) = default;
};

struct InstanceTest {
  Term term;
  std::string sort;
  SourceLoc loc;

  friend bool operator==(const InstanceTest&, const InstanceTest&) = default;
};

// lhs = rhs or lhs != rhs.
struct Comparison {
  Term lhs;
  Term rhs;
  bool equal = true;
  SourceLoc loc;

  friend bool operator==(const Comparison&, const Comparison&) = default;
};

using Condition = std::variant<Literal, InstanceTest, Comparison>;

struct DynamicCausalLaw {
  std::string action_var;
  Literal head;
  std::vector<Condition> body;
  SourceLoc loc;

  friend bool operator==(const DynamicCausalLaw&, const DynamicCausalLaw&) = default;
};

struct StateConstraint {
  Literal head;
  std::vector<Condition> body;
  SourceLoc loc;

  friend bool operator==(const StateConstraint&, const StateConstraint&) = default;
};

struct Executability {
  std::string action_var;
  std::vector<Condition> body;
  SourceLoc loc;

  friend bool operator==(const Executability&, const Executability&) = default;
};

using Axiom = std::variant<DynamicCausalLaw, StateConstraint, Executability>;

struct AttributeDecl {
  std::string name;
  std::vector<std::string> arg_sorts;
  std::string result = kBooleans;
  SourceLoc loc;

  friend bool operator==(const AttributeDecl&, const AttributeDecl&) = default;
};

struct SortDecl {
  std::vector<std::string> names;
  std::vector<std::string> parents;
  std::vector<AttributeDecl> attributes;
  SourceLoc loc;

  friend bool operator==(const SortDecl&, const SortDecl&) = default;
};

// Basic boolean fluent.
struct FluentDecl {
  std::string name;
  std::vector<std::string> arg_sorts;
  SourceLoc loc;

  friend bool operator==(const FluentDecl&, const FluentDecl&) = default;
};

struct ModulePath {
  std::string theory;
  std::string module;

  std::string ToString() const { return theory + "." + module; }
  friend bool operator==(const ModulePath&, const ModulePath&) = default;
  friend auto operator<=>(const ModulePath&, const ModulePath&) = default;
};

// Axioms are kept per section so rendering preserves their order.
struct ModuleDecl {
  std::string name;
  std::vector<ModulePath> depends_on;
  std::vector<SortDecl> sorts;
  std::vector<FluentDecl> fluents;
  std::vector<DynamicCausalLaw> causal_laws;
  std::vector<StateConstraint> constraints;
  std::vector<Executability> executability;
  SourceLoc loc;

  std::vector<Axiom> axioms() const;
  friend bool operator==(const ModuleDecl&, const ModuleDecl&) = default;
};

struct Import {
  ModulePath path;
  std::string library;
  SourceLoc loc;

  friend bool operator==(const Import&, const Import&) = default;
};

struct Theory {
  std::string name;
  std::vector<Import> imports;
  std::vector<ModuleDecl> modules;
  SourceLoc loc;

  friend bool operator==(const Theory&, const Theory&) = default;
};

struct AttributeAssignment {
  std::string attribute;
  std::vector<std::string> args;
  bool value = true;
  SourceLoc loc;

  friend bool operator==(const AttributeAssignment&, const AttributeAssignment&) = default;
};

struct InstanceDecl {
  std::vector<std::string> names;
  std::string sort;
  std::vector<AttributeAssignment> assignments;
  SourceLoc loc;

  friend bool operator==(const InstanceDecl&, const InstanceDecl&) = default;
};

struct Structure {
  std::string name;
  std::vector<InstanceDecl> instances;
  SourceLoc loc;

  friend bool operator==(const Structure&, const Structure&) = default;
};

struct Occurrence {
  std::string event;
  int time = 0;
  SourceLoc loc;

  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

struct Program {
  std::string name;
  Theory theory;
  Structure structure;
  bool temporal_projection = false;
  std::optional<int> max_steps;
  std::vector<Occurrence> history;

  friend bool operator==(const Program&, const Program&) = default;
};

}  // namespace narrate::alm

#endif  // NARRATE_ALM_AST_H_
