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

#ifndef NARRATE_ALM_SIGNATURE_H_
#define NARRATE_ALM_SIGNATURE_H_

#include <map>
#include <set>
#include <string>
#include <vector>

#include "narrate/alm/ast.h"
#include "narrate/common/diagnostic.h"

namespace narrate::alm {

struct AttributeInfo {
  std::vector<std::string> arg_sorts;
  std::string result;
  // Sorts declaring the attribute; one name may be shared across action
  // sorts as long as the argument sorts agree.
  std::set<std::string> owners;
};

// Declared vocabulary of a set of modules: the sort hierarchy, attributes,
// and fluents.
class Signature {
 public:
  // Only the built-in sorts universe, actions and booleans.
  Signature();

  // Adds every declaration of `module`. Conflicting redeclarations are
  // reported to `diags` when it is non-null and otherwise ignored.
  void AddModule(const ModuleDecl& module, Diagnostics* diags = nullptr);

  bool HasSort(const std::string& sort) const { return parents_.count(sort) > 0; }
  const std::vector<std::string>& Parents(const std::string& sort) const;
  // `sort` and everything reachable through parent links.
  std::set<std::string> Ancestors(const std::string& sort) const;
  bool IsSubsort(const std::string& sort, const std::string& ancestor) const;

  const std::map<std::string, std::vector<std::string>>& sorts() const { return parents_; }
  const std::map<std::string, AttributeInfo>& attributes() const { return attributes_; }
  const std::map<std::string, FluentDecl>& fluents() const { return fluents_; }

  const AttributeInfo* FindAttribute(const std::string& name) const;
  const FluentDecl* FindFluent(const std::string& name) const;

  // Sorts that lie on a parent-link cycle, in name order.
  std::vector<std::string> CyclicSorts() const;

 private:
  std::map<std::string, std::vector<std::string>> parents_;
  std::map<std::string, AttributeInfo> attributes_;
  std::map<std::string, FluentDecl> fluents_;
};

Signature SignatureOf(const std::vector<ModuleDecl>& modules);

}  // namespace narrate::alm

#endif  // NARRATE_ALM_SIGNATURE_H_
