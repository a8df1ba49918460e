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

#include "narrate/sem/symbols.h"

#include "narrate/common/diagnostic.h"

namespace narrate::sem {

SymbolTable::SymbolTable(const alm::Program& program) {
  for (const auto& m : program.theory.modules) signature_.AddModule(m);
  for (const auto& decl : program.structure.instances) {
    if (!signature_.HasSort(decl.sort)) {
      throw Error(ErrorKind::kInput, "undeclared sort " + decl.sort);
    }
    for (const auto& n : decl.names) {
      int id = size();
      if (!ids_.emplace(n, id).second) throw Error(ErrorKind::kInput, "duplicate instance " + n);
      names_.push_back(n);
      declared_.push_back(decl.sort);
      all_.push_back(id);
      for (const auto& s : signature_.Ancestors(decl.sort)) members_[s].push_back(id);
    }
  }
  for (const auto& decl : program.structure.instances) {
    for (const auto& a : decl.assignments) {
      for (const auto& n : decl.names) {
        std::vector<int> args{ids_.at(n)};
        for (const auto& arg : a.args) {
          auto id = Find(arg);
          if (!id) throw Error(ErrorKind::kInput, "undeclared instance " + arg);
          args.push_back(*id);
        }
        auto& mine = a.value ? true_facts_[a.attribute] : false_facts_[a.attribute];
        auto& other = a.value ? false_facts_[a.attribute] : true_facts_[a.attribute];
        if (other.count(args)) {
          throw Error(ErrorKind::kInput, "contradictory assignment of " + a.attribute + " for " + n);
        }
        mine.insert(args);
      }
    }
  }
}

std::optional<int> SymbolTable::Find(const std::string& name) const {
  auto it = ids_.find(name);
  if (it == ids_.end()) return std::nullopt;
  return it->second;
}

bool SymbolTable::IsInstanceOf(int id, const std::string& sort) const {
  return signature_.IsSubsort(declared_[id], sort);
}

const std::vector<int>& SymbolTable::Members(const std::string& sort) const {
  static const std::vector<int> kNone;
  if (sort == alm::kUniverse) return all_;
  auto it = members_.find(sort);
  return it == members_.end() ? kNone : it->second;
}

bool SymbolTable::IsEvent(int id) const { return IsInstanceOf(id, alm::kActions); }

bool SymbolTable::AttributeHolds(const std::string& attribute,
                                 const std::vector<int>& args) const {
  auto it = true_facts_.find(attribute);
  return it != true_facts_.end() && it->second.count(args) > 0;
}

const std::set<std::vector<int>>& SymbolTable::AttributeFacts(
    const std::string& attribute) const {
  static const std::set<std::vector<int>> kNone;
  auto it = true_facts_.find(attribute);
  return it == true_facts_.end() ? kNone : it->second;
}

bool SymbolTable::AddAttributeFact(const std::string& attribute, const std::vector<int>& args) {
  auto f = false_facts_.find(attribute);
  if (f != false_facts_.end() && f->second.count(args)) {
    throw Error(ErrorKind::kInconsistency,
                attribute + " is derived true for " + names_[args[0]] + " but assigned false");
  }
  return true_facts_[attribute].insert(args).second;
}

}  // namespace narrate::sem
