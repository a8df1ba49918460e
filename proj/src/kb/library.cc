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

#include "narrate/kb/library.h"

#include <algorithm>
#include <filesystem>
#include <functional>
#include <set>

#include "narrate/alm/parser.h"
#include "narrate/common/text.h"
#include "narrate/kb/embedded.h"

namespace narrate::kb {
namespace {

constexpr std::string_view kLibPrefix = "lib/";

bool DeclaresSort(const alm::ModuleDecl& m, const std::string& sort) {
  for (const auto& s : m.sorts) {
    if (std::find(s.names.begin(), s.names.end(), sort) != s.names.end()) return true;
  }
  return false;
}

}  // namespace

std::string NormalizeClassId(std::string_view class_id) {
  std::string out(class_id);
  std::replace(out.begin(), out.end(), '.', '_');
  std::replace(out.begin(), out.end(), '-', '_');
  return ToLower(out);
}

void Library::Put(const std::string& theory, alm::ModuleDecl module) {
  alm::ModulePath path{theory, module.name};
  if (StartsWith(module.name, "m_")) {
    std::string sort = module.name.substr(2);
    if (DeclaresSort(module, sort)) class_index_[sort] = path;
  }
  modules_[path] = std::move(module);
}

void Library::AddText(std::string_view source, const std::string& origin) {
  auto parsed = alm::ParseTheoryFile(source);
  if (!parsed.ok()) {
    throw Error(ErrorKind::kInput, origin + ": " + FormatDiagnostics(parsed.diagnostics));
  }
  for (auto& theory : *parsed.value) {
    if (!theory.imports.empty()) {
      throw Error(ErrorKind::kInput,
                  origin + ": library theories use depends on, not import");
    }
    for (auto& m : theory.modules) Put(theory.name, std::move(m));
  }
}

const alm::ModuleDecl* Library::Find(const alm::ModulePath& path) const {
  auto it = modules_.find(path);
  return it == modules_.end() ? nullptr : &it->second;
}

std::optional<alm::ModulePath> Library::ModuleForClass(std::string_view class_id) const {
  auto it = class_index_.find(NormalizeClassId(class_id));
  if (it == class_index_.end()) return std::nullopt;
  return it->second;
}

alm::Signature Library::MakeSignature() const {
  alm::Signature sig;
  for (const auto& [path, m] : modules_) sig.AddModule(m);
  return sig;
}

Diagnostics Library::Check() const {
  Diagnostics diags;
  alm::Signature sig;
  std::set<std::string> names;
  for (const auto& [path, m] : modules_) {
    if (!names.insert(m.name).second) {
      diags.push_back(MakeError("module name " + m.name + " used by two theories"));
    }
    sig.AddModule(m, &diags);
    for (const auto& dep : m.depends_on) {
      if (!Find(dep)) {
        diags.push_back(MakeError(path.ToString() + " depends on unknown " + dep.ToString()));
      }
    }
  }
  // Depth-first search for cycles; 1 = on stack, 2 = done.
  std::map<alm::ModulePath, int> mark;
  std::function<void(const alm::ModulePath&)> visit = [&](const alm::ModulePath& p) {
    mark[p] = 1;
    for (const auto& dep : modules_.at(p).depends_on) {
      if (!Find(dep)) continue;
      if (mark[dep] == 1) {
        diags.push_back(MakeError("dependency cycle through " + dep.ToString()));
      } else if (mark[dep] == 0) {
        visit(dep);
      }
    }
    mark[p] = 2;
  };
  for (const auto& [path, m] : modules_) {
    if (mark[path] == 0) visit(path);
  }
  for (const auto& sort : sig.CyclicSorts()) {
    diags.push_back(MakeError("sort hierarchy cycle through " + sort));
  }
  return diags;
}

const Library& BuiltinLibrary() {
  static const Library* lib = [] {
    auto* l = new Library;
    for (const auto& f : EmbeddedFiles()) {
      if (StartsWith(f.path, kLibPrefix) && f.path.ends_with(".alm")) {
        l->AddText(f.contents, std::string(f.path));
      }
    }
    return l;
  }();
  return *lib;
}

Library LoadLibrary(const std::string& dir) {
  namespace fs = std::filesystem;
  Library lib = BuiltinLibrary();
  std::error_code ec;
  if (!fs::is_directory(dir, ec)) throw Error(ErrorKind::kInput, "not a directory: " + dir);
  std::vector<std::string> files;
  for (const auto& entry : fs::recursive_directory_iterator(dir)) {
    if (entry.is_regular_file() && entry.path().extension() == ".alm") {
      files.push_back(entry.path().string());
    }
  }
  std::sort(files.begin(), files.end());
  for (const auto& f : files) lib.AddText(ReadFile(f), f);
  return lib;
}

alm::Program ResolveImports(const alm::Program& program, const Library& library) {
  alm::Program out = program;
  std::set<std::string> present;
  for (const auto& m : program.theory.modules) present.insert(m.name);

  std::vector<alm::ModuleDecl> inlined;
  std::set<alm::ModulePath> done;
  std::vector<alm::ModulePath> stack;
  std::function<void(const alm::ModulePath&)> visit = [&](const alm::ModulePath& p) {
    if (done.count(p) || present.count(p.module)) return;
    if (std::find(stack.begin(), stack.end(), p) != stack.end()) {
      throw Error(ErrorKind::kInput, "dependency cycle through " + p.ToString());
    }
    const alm::ModuleDecl* m = library.Find(p);
    if (!m) throw Error(ErrorKind::kInput, "unknown module " + p.ToString());
    stack.push_back(p);
    for (const auto& dep : m->depends_on) visit(dep);
    stack.pop_back();
    done.insert(p);
    inlined.push_back(*m);
  };
  for (const auto& imp : program.theory.imports) visit(imp.path);
  for (const auto& m : program.theory.modules) {
    for (const auto& dep : m.depends_on) visit(dep);
  }
  out.theory.imports.clear();
  inlined.insert(inlined.end(), out.theory.modules.begin(), out.theory.modules.end());
  out.theory.modules = std::move(inlined);
  return out;
}

}  // namespace narrate::kb
