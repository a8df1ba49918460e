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

#include "narrate/sem/model.h"

#include <algorithm>
#include <tuple>

#include "narrate/common/text.h"

namespace narrate::sem {

std::string ModelAtom::ToString() const {
  std::vector<std::string> parts = args;
  parts.push_back(std::to_string(time));
  return function + "(" + Join(parts, ",") + ")";
}

std::string Model::ToText() const {
  std::string out;
  for (const auto& a : atoms) out += a.ToString() + ".\n";
  return out;
}

bool Model::Contains(std::string_view atom_text) const {
  return std::any_of(atoms.begin(), atoms.end(),
                     [&](const ModelAtom& a) { return a.ToString() == atom_text; });
}

NameMap IdentityNames(const SymbolTable& symbols) {
  NameMap names;
  for (int id : symbols.All()) names[symbols.Name(id)] = symbols.Name(id);
  return names;
}

Model ExtractModel(const GroundProgram& g, const Trajectory& traj, const NameMap& names) {
  Model m;
  for (const auto& [event, time] : traj.occurrences) {
    m.atoms.push_back({"happened", {g.symbols.Name(event)}, time});
  }
  std::vector<ModelAtom> fluents;
  for (int t = 0; t < traj.size(); ++t) {
    const auto& value = traj.states[t].value;
    for (size_t a = 0; a < value.size(); ++a) {
      if (value[a] <= 0) continue;
      ModelAtom atom{g.atoms[a].function, {}, t};
      for (int id : g.atoms[a].args) {
        auto it = names.find(g.symbols.Name(id));
        if (it == names.end()) {
          throw Error(ErrorKind::kInput, "unnamed referent " + g.symbols.Name(id));
        }
        atom.args.push_back(it->second);
      }
      fluents.push_back(std::move(atom));
    }
  }
  std::sort(fluents.begin(), fluents.end(), [](const ModelAtom& x, const ModelAtom& y) {
    return std::tie(x.function, x.args, x.time) < std::tie(y.function, y.args, y.time);
  });
  m.atoms.insert(m.atoms.end(), fluents.begin(), fluents.end());
  return m;
}

Pattern ParsePattern(std::string_view text) {
  std::string_view s = Trim(text);
  if (!s.empty() && s.back() == '.') s.remove_suffix(1);
  auto open = s.find('(');
  if (open == std::string_view::npos || s.empty() || s.back() != ')' || open == 0) {
    throw Error(ErrorKind::kInput, "malformed pattern '" + std::string(text) + "'");
  }
  Pattern p;
  p.function = std::string(Trim(s.substr(0, open)));
  for (const auto& arg : Split(s.substr(open + 1, s.size() - open - 2), ',')) {
    std::string a(Trim(arg));
    if (a.empty()) throw Error(ErrorKind::kInput, "empty slot in pattern '" + std::string(text) + "'");
    p.args.push_back(a == "_" ? std::nullopt : std::optional<std::string>(a));
  }
  return p;
}

std::vector<ModelAtom> Query(const Model& model, const Pattern& pattern) {
  std::vector<ModelAtom> out;
  for (const auto& a : model.atoms) {
    if (pattern.function == "_" ? a.function == "happened" : a.function != pattern.function) {
      continue;
    }
    const size_t n = a.args.size();
    if (pattern.args.size() != n && pattern.args.size() != n + 1) continue;
    bool ok = true;
    for (size_t i = 0; i < n && ok; ++i) {
      ok = !pattern.args[i] || *pattern.args[i] == a.args[i];
    }
    if (ok && pattern.args.size() == n + 1 && pattern.args[n]) {
      ok = *pattern.args[n] == std::to_string(a.time);
    }
    if (ok) out.push_back(a);
  }
  return out;
}

}  // namespace narrate::sem
