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

#ifndef NARRATE_KB_LIBRARY_H_
#define NARRATE_KB_LIBRARY_H_

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "narrate/alm/ast.h"
#include "narrate/alm/signature.h"
#include "narrate/common/diagnostic.h"

namespace narrate::kb {

// Library name used in generated import statements.
inline constexpr const char* kVerbClassLibrary = "VN_class_library";

// Reusable knowledge modules keyed by (theory, module).
class Library {
 public:
  // Adds or replaces a module.
  void Put(const std::string& theory, alm::ModuleDecl module);

  // Adds every module of every theory in `source`, replacing modules with the
  // same path. Throws Error(kInput) when the text does not parse.
  void AddText(std::string_view source, const std::string& origin);

  const alm::ModuleDecl* Find(const alm::ModulePath& path) const;
  const std::map<alm::ModulePath, alm::ModuleDecl>& modules() const { return modules_; }

  // Module path for a verb class id such as "run-51.3.2-1". A module serves
  // a class when it is named m_<normalized id> and declares that sort.
  std::optional<alm::ModulePath> ModuleForClass(std::string_view class_id) const;
  const std::map<std::string, alm::ModulePath>& class_index() const { return class_index_; }

  // Declarations of every module in the library.
  alm::Signature MakeSignature() const;

  // Dependency problems: unknown depends-on targets, cycles, conflicting
  // declarations. Empty for a usable library.
  Diagnostics Check() const;

 private:
  std::map<alm::ModulePath, alm::ModuleDecl> modules_;
  std::map<std::string, alm::ModulePath> class_index_;
};

// "run-51.3.2-1" -> "run_51_3_2_1".
std::string NormalizeClassId(std::string_view class_id);

// The library compiled into the binary from data/lib.
const Library& BuiltinLibrary();

// Builtin library extended by every *.alm file under `dir` (recursively,
// in path order). Modules from `dir` replace builtin ones with the same path.
Library LoadLibrary(const std::string& dir);

// Inlines every imported module and its transitive dependencies once, in
// dependency order ahead of the program's own modules, and clears the import
// list. Dependencies already present in the theory by name are not inlined
// again, which makes the operation idempotent. Throws Error(kInput) naming an
// unknown module path or a dependency cycle.
alm::Program ResolveImports(const alm::Program& program, const Library& library);

}  // namespace narrate::kb

#endif  // NARRATE_KB_LIBRARY_H_
