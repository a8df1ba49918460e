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

#include "narrate/gen/generate.h"

#include <algorithm>
#include <cctype>
#include <map>

#include "narrate/alm/parser.h"
#include "narrate/common/text.h"

namespace narrate::gen {

std::string EntitySortName(std::string_view name, const std::set<std::string>& taken) {
  std::string base;
  for (char c : Trim(name)) {
    unsigned char u = static_cast<unsigned char>(c);
    if (std::isspace(u)) {
      if (!base.empty() && base.back() != '_') base += '_';
    } else if (std::isalnum(u) || c == '_') {
      base += static_cast<char>(std::tolower(u));
    }
  }
  if (base.empty()) {
    throw Error(ErrorKind::kInput, "entity name '" + std::string(name) + "' has no identifier characters");
  }
  if (std::isdigit(static_cast<unsigned char>(base[0]))) base = "s_" + base;
  auto free = [&](const std::string& s) { return !taken.count(s) && !alm::IsReservedWord(s); };
  if (free(base)) return base;
  for (int n = 2;; ++n) {
    std::string candidate = base + "_ent" + std::to_string(n);
    if (free(candidate)) return candidate;
  }
}

alm::Program GenerateProgram(const drs::Drs& d, const GenConfig& cfg) {
  auto diags = drs::ValidateDrs(d);
  if (HasErrors(diags)) throw Error(ErrorKind::kInput, FormatDiagnostics(diags));
  const kb::Library& lib = *cfg.library;
  const std::vector<std::string> order = d.EventsByTime();

  std::vector<alm::ModulePath> paths;
  std::vector<std::string> missing;
  std::map<std::string, alm::ModulePath> path_of;
  for (const auto& id : order) {
    const auto& cls = d.events.at(id).class_id;
    if (path_of.count(cls) || std::find(missing.begin(), missing.end(), cls) != missing.end()) {
      continue;
    }
    if (auto p = lib.ModuleForClass(cls)) {
      path_of[cls] = *p;
      if (std::find(paths.begin(), paths.end(), *p) == paths.end()) paths.push_back(*p);
    } else {
      missing.push_back(cls);
    }
  }
  if (!missing.empty()) throw Error(ErrorKind::kUnsupported, "no module for " + Join(missing, ", "));

  alm::Program p;
  p.name = cfg.name;
  p.theory.name = cfg.name + "_theory";
  for (const auto& path : paths) p.theory.imports.push_back({path, kb::kVerbClassLibrary, {}});

  alm::ModuleDecl m;
  m.name = cfg.name;
  m.depends_on = paths;
  std::set<std::string> taken;
  const alm::Signature lib_sig = lib.MakeSignature();
  for (const auto& [s, parents] : lib_sig.sorts()) taken.insert(s);
  for (const auto& [a, info] : lib_sig.attributes()) taken.insert(a);
  for (const auto& [f, decl] : lib_sig.fluents()) taken.insert(f);
  for (const auto& [r, name] : d.entities) taken.insert(r);
  for (const auto& [e, rec] : d.events) taken.insert(e);

  std::map<std::string, std::vector<std::string>> roles_of;
  for (const auto& [id, e] : d.events) {
    for (const auto& [role, ref] : e.args) roles_of[ref].push_back(role);
  }
  std::map<std::string, std::string> sort_of;
  for (const auto& [r, name] : d.entities) {
    std::string sort = EntitySortName(name, taken);
    taken.insert(sort);
    sort_of[r] = sort;
    m.sorts.push_back({{sort}, {cfg.roles->ParentSortForRoles(roles_of[r])}, {}, {}});
  }
  p.theory.modules.push_back(std::move(m));

  p.structure.name = cfg.name + "_structure";
  for (const auto& [r, name] : d.entities) {
    p.structure.instances.push_back({{r}, sort_of[r], {}, {}});
  }
  for (size_t t = 0; t < order.size(); ++t) {
    const auto& id = order[t];
    const auto& e = d.events.at(id);
    const alm::ModulePath& path = path_of.at(e.class_id);
    const alm::ModuleDecl* wrapper = lib.Find(path);
    alm::InstanceDecl inst{{id}, kb::NormalizeClassId(e.class_id), {}, {}};
    for (const auto& [role, ref] : e.args) {
      std::string attr = kb::RoleAttribute(role);
      bool known = false;
      for (const auto& s : wrapper->sorts) {
        for (const auto& a : s.attributes) known = known || a.name == attr;
      }
      if (!known) {
        throw Error(ErrorKind::kUnsupported,
                    "class " + e.class_id + " has no role " + role + " (event " + id + ")");
      }
      inst.assignments.push_back({attr, {ref}, true, {}});
    }
    p.structure.instances.push_back(std::move(inst));
    p.history.push_back({id, static_cast<int>(t), {}});
  }
  p.temporal_projection = true;
  p.max_steps = static_cast<int>(order.size()) + 1;
  return p;
}

}  // namespace narrate::gen
