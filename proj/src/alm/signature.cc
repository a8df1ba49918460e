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

#include "narrate/alm/signature.h"

namespace narrate::alm {

Signature::Signature() {
  parents_[kUniverse] = {};
  parents_[kActions] = {kUniverse};
  parents_[kBooleans] = {};
}

void Signature::AddModule(const ModuleDecl& module, Diagnostics* diags) {
  auto report = [&](std::string msg, SourceLoc loc) {
    if (diags) diags->push_back(MakeError(std::move(msg), loc));
  };
  for (const auto& decl : module.sorts) {
    for (const auto& name : decl.names) {
      auto [it, inserted] = parents_.try_emplace(name, decl.parents);
      if (!inserted && it->second != decl.parents) {
        report("conflicting declaration of sort " + name, decl.loc);
      }
      for (const auto& attr : decl.attributes) {
        auto [ait, fresh] = attributes_.try_emplace(attr.name);
        if (fresh) {
          ait->second.arg_sorts = attr.arg_sorts;
          ait->second.result = attr.result;
        } else if (ait->second.arg_sorts != attr.arg_sorts ||
                   ait->second.result != attr.result) {
          report("conflicting declaration of attribute " + attr.name, attr.loc);
          continue;
        }
        ait->second.owners.insert(name);
      }
    }
  }
  for (const auto& f : module.fluents) {
    auto [it, inserted] = fluents_.try_emplace(f.name, f);
    if (!inserted && it->second.arg_sorts != f.arg_sorts) {
      report("conflicting declaration of fluent " + f.name, f.loc);
    }
  }
}

const std::vector<std::string>& Signature::Parents(const std::string& sort) const {
  static const std::vector<std::string> kNone;
  auto it = parents_.find(sort);
  return it == parents_.end() ? kNone : it->second;
}

std::set<std::string> Signature::Ancestors(const std::string& sort) const {
  std::set<std::string> seen{sort};
  std::vector<std::string> stack{sort};
  while (!stack.empty()) {
    std::string s = std::move(stack.back());
    stack.pop_back();
    for (const auto& p : Parents(s)) {
      if (seen.insert(p).second) stack.push_back(p);
    }
  }
  return seen;
}

bool Signature::IsSubsort(const std::string& sort, const std::string& ancestor) const {
  return Ancestors(sort).count(ancestor) > 0;
}

const AttributeInfo* Signature::FindAttribute(const std::string& name) const {
  auto it = attributes_.find(name);
  return it == attributes_.end() ? nullptr : &it->second;
}

const FluentDecl* Signature::FindFluent(const std::string& name) const {
  auto it = fluents_.find(name);
  return it == fluents_.end() ? nullptr : &it->second;
}

std::vector<std::string> Signature::CyclicSorts() const {
  std::vector<std::string> out;
  for (const auto& [sort, parents] : parents_) {
    std::set<std::string> seen;
    std::vector<std::string> stack(parents.begin(), parents.end());
    bool cyclic = false;
    while (!stack.empty() && !cyclic) {
      std::string s = std::move(stack.back());
      stack.pop_back();
      if (s == sort) cyclic = true;
      if (!seen.insert(s).second) continue;
      for (const auto& p : Parents(s)) stack.push_back(p);
    }
    if (cyclic) out.push_back(sort);
  }
  return out;
}

Signature SignatureOf(const std::vector<ModuleDecl>& modules) {
  Signature sig;
  for (const auto& m : modules) sig.AddModule(m);
  return sig;
}

}  // namespace narrate::alm
