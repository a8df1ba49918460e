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

#include "narrate/alm/validate.h"

#include <map>
#include <set>

namespace narrate::alm {
namespace {

class Validator {
 public:
  Validator(const Program& p, const Signature& external) : p_(p), sig_(external) {}

  Diagnostics Run() {
    CheckTheory();
    CollectInstances();
    for (const auto& m : p_.theory.modules) CheckModuleAxioms(m);
    CheckStructure();
    CheckHistory();
    return std::move(diags_);
  }

 private:
  void Error(std::string msg, SourceLoc loc) { diags_.push_back(MakeError(std::move(msg), loc)); }

  void CheckTheory() {
    std::set<std::string> module_names;
    for (const auto& m : p_.theory.modules) {
      if (!module_names.insert(m.name).second) {
        Error("duplicate module " + m.name, m.loc);
      }
      sig_.AddModule(m, &diags_);
    }
    std::set<ModulePath> imported;
    for (const auto& imp : p_.theory.imports) imported.insert(imp.path);
    for (const auto& m : p_.theory.modules) {
      std::set<std::string> declared;
      for (const auto& s : m.sorts) {
        for (const auto& n : s.names) {
          if (!declared.insert(n).second) Error("duplicate declaration of " + n, s.loc);
        }
        std::set<std::string> attrs;
        for (const auto& a : s.attributes) {
          if (!attrs.insert(a.name).second) {
            Error("duplicate attribute " + a.name, a.loc);
          }
          for (const auto& arg : a.arg_sorts) RequireSort(arg, a.loc);
          if (a.arg_sorts.empty()) Error("attribute " + a.name + " has no arguments", a.loc);
          if (a.result != kBooleans) {
            Error("attribute " + a.name + " must have result sort booleans", a.loc);
          }
        }
        for (const auto& parent : s.parents) RequireSort(parent, s.loc);
      }
      for (const auto& f : m.fluents) {
        if (!declared.insert(f.name).second) Error("duplicate declaration of " + f.name, f.loc);
        if (f.arg_sorts.empty()) Error("fluent " + f.name + " has no arguments", f.loc);
        for (const auto& arg : f.arg_sorts) RequireSort(arg, f.loc);
      }
      for (const auto& dep : m.depends_on) {
        bool found = imported.count(dep) > 0 || module_names.count(dep.module) > 0;
        if (!found) Error("unresolved dependency " + dep.ToString(), m.loc);
      }
    }
    for (const auto& sort : sig_.CyclicSorts()) {
      Error("sort hierarchy cycle through " + sort, {});
    }
  }

  void RequireSort(const std::string& sort, SourceLoc loc) {
    if (!sig_.HasSort(sort)) Error("undeclared sort " + sort, loc);
  }

  void CollectInstances() {
    for (const auto& decl : p_.structure.instances) {
      for (const auto& n : decl.names) {
        if (!instance_sort_.try_emplace(n, decl.sort).second) {
          Error("duplicate instance " + n, decl.loc);
        }
      }
    }
  }

  void CheckLiteral(const Literal& lit, std::set<std::string>* vars, bool allow_attribute) {
    const FluentDecl* fluent = sig_.FindFluent(lit.function);
    const AttributeInfo* attr = sig_.FindAttribute(lit.function);
    if (fluent) {
      if (lit.args.size() != fluent->arg_sorts.size()) {
        Error("arity mismatch for " + lit.function, lit.loc);
      }
    } else if (attr) {
      if (!allow_attribute) {
        Error("attribute " + lit.function + " cannot be the head of a causal law", lit.loc);
      }
      if (lit.args.size() != attr->arg_sorts.size() + 1) {
        Error("arity mismatch for " + lit.function, lit.loc);
      }
    } else {
      Error("undeclared function " + lit.function, lit.loc);
    }
    for (const auto& t : lit.args) CheckTerm(t, vars, lit.loc);
  }

  void CheckTerm(const Term& t, std::set<std::string>* vars, SourceLoc loc) {
    if (t.is_variable()) {
      if (vars) vars->insert(t.name);
    } else if (!instance_sort_.count(t.name)) {
      Error("undeclared constant " + t.name, loc);
    }
  }

  std::set<std::string> CheckBody(const std::vector<Condition>& body) {
    std::set<std::string> vars;
    for (const auto& c : body) {
      if (const auto* lit = std::get_if<Literal>(&c)) {
        CheckLiteral(*lit, &vars, true);
      } else if (const auto* test = std::get_if<InstanceTest>(&c)) {
        CheckTerm(test->term, &vars, test->loc);
        RequireSort(test->sort, test->loc);
      } else {
        const auto& cmp = std::get<Comparison>(c);
        CheckTerm(cmp.lhs, &vars, cmp.loc);
        CheckTerm(cmp.rhs, &vars, cmp.loc);
      }
    }
    return vars;
  }

  void CheckHead(const Literal& head, std::set<std::string> bound, bool allow_attribute) {
    std::set<std::string> head_vars;
    CheckLiteral(head, &head_vars, allow_attribute);
    for (const auto& v : head_vars) {
      if (!bound.count(v)) Error("unbound variable in head: " + v, head.loc);
    }
  }

  void CheckModuleAxioms(const ModuleDecl& m) {
    for (const auto& law : m.causal_laws) {
      auto bound = CheckBody(law.body);
      bound.insert(law.action_var);
      CheckHead(law.head, bound, false);
    }
    for (const auto& sc : m.constraints) {
      CheckHead(sc.head, CheckBody(sc.body), true);
    }
    for (const auto& ex : m.executability) {
      CheckBody(ex.body);
      bool typed = false;
      for (const auto& c : ex.body) {
        const auto* test = std::get_if<InstanceTest>(&c);
        if (test && test->term.is_variable() && test->term.name == ex.action_var) typed = true;
      }
      if (!typed) {
        Error("executability condition needs instance(" + ex.action_var + ", sort)", ex.loc);
      }
    }
  }

  void CheckStructure() {
    std::map<std::pair<std::string, std::vector<std::string>>, bool> assigned;
    for (const auto& decl : p_.structure.instances) {
      RequireSort(decl.sort, decl.loc);
      if (decl.sort == kBooleans) Error("instances cannot belong to booleans", decl.loc);
      const auto ancestors = sig_.Ancestors(decl.sort);
      for (const auto& a : decl.assignments) {
        const AttributeInfo* info = sig_.FindAttribute(a.attribute);
        if (!info) {
          Error("undeclared attribute " + a.attribute, a.loc);
          continue;
        }
        bool owned = false;
        for (const auto& owner : info->owners) owned = owned || ancestors.count(owner) > 0;
        if (!owned) {
          Error("attribute " + a.attribute + " does not belong to sort " + decl.sort, a.loc);
        }
        if (a.args.size() != info->arg_sorts.size()) {
          Error("arity mismatch for " + a.attribute, a.loc);
          continue;
        }
        for (size_t i = 0; i < a.args.size(); ++i) {
          auto it = instance_sort_.find(a.args[i]);
          if (it == instance_sort_.end()) {
            Error("undeclared instance " + a.args[i], a.loc);
          } else if (!sig_.IsSubsort(it->second, info->arg_sorts[i])) {
            Error(a.args[i] + " is not an instance of " + info->arg_sorts[i], a.loc);
          }
        }
        for (const auto& inst : decl.names) {
          std::vector<std::string> key{inst};
          key.insert(key.end(), a.args.begin(), a.args.end());
          auto [it, fresh] = assigned.try_emplace({a.attribute, key}, a.value);
          if (!fresh && it->second != a.value) {
            Error("contradictory assignment of " + a.attribute + " for " + inst, a.loc);
          }
        }
      }
    }
  }

  void CheckHistory() {
    if (p_.temporal_projection) {
      if (!p_.max_steps) {
        Error("temporal projection requires max steps", {});
      } else if (*p_.max_steps < 1) {
        Error("max steps must be at least 1", {});
      }
    }
    for (const auto& occ : p_.history) {
      auto it = instance_sort_.find(occ.event);
      if (it == instance_sort_.end()) {
        Error("undeclared event " + occ.event, occ.loc);
      } else if (!sig_.IsSubsort(it->second, kActions)) {
        Error(occ.event + " is not an action", occ.loc);
      }
      if (occ.time < 0 || (p_.max_steps && occ.time >= *p_.max_steps)) {
        Error("time " + std::to_string(occ.time) + " of " + occ.event + " is out of range",
              occ.loc);
      }
    }
  }

  const Program& p_;
  Signature sig_;
  std::map<std::string, std::string> instance_sort_;
  Diagnostics diags_;
};

}  // namespace

Diagnostics Validate(const Program& program, const Signature& external) {
  return Validator(program, external).Run();
}

}  // namespace narrate::alm
