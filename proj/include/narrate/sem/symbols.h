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

#ifndef NARRATE_SEM_SYMBOLS_H_
#define NARRATE_SEM_SYMBOLS_H_

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "narrate/alm/ast.h"
#include "narrate/alm/signature.h"

namespace narrate::sem {

// Instances of a flattened program with sort membership closed upward and a
// closed-world valuation of the static attributes. Instances are numbered in
// declaration order.
class SymbolTable {
 public:
  SymbolTable() = default;
  // Throws Error(kInput) for undeclared sorts or instances and for
  // contradictory assignments.
  explicit SymbolTable(const alm::Program& program);

  const alm::Signature& signature() const { return signature_; }

  int size() const { return static_cast<int>(names_.size()); }
  const std::string& Name(int id) const { return names_[id]; }
  std::optional<int> Find(const std::string& name) const;
  const std::string& DeclaredSort(int id) const { return declared_[id]; }
  bool IsInstanceOf(int id, const std::string& sort) const;
  // Ascending ids of the instances belonging to `sort`.
  const std::vector<int>& Members(const std::string& sort) const;
  const std::vector<int>& All() const { return all_; }
  bool IsEvent(int id) const;

  // `args` starts with the owning instance. Unassigned means false.
  bool AttributeHolds(const std::string& attribute, const std::vector<int>& args) const;
  const std::set<std::vector<int>>& AttributeFacts(const std::string& attribute) const;
  // Records a derived true value. Returns false when it was already known.
  // Throws Error(kInconsistency) if the structure assigns it false.
  bool AddAttributeFact(const std::string& attribute, const std::vector<int>& args);

 private:
  alm::Signature signature_;
  std::vector<std::string> names_;
  std::vector<std::string> declared_;
  std::map<std::string, int> ids_;
  std::vector<int> all_;
  std::map<std::string, std::vector<int>> members_;
  std::map<std::string, std::set<std::vector<int>>> true_facts_;
  std::map<std::string, std::set<std::vector<int>>> false_facts_;
};

}  // namespace narrate::sem

#endif  // NARRATE_SEM_SYMBOLS_H_
