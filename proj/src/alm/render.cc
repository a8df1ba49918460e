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

#include "narrate/alm/render.h"

#include <sstream>

#include "narrate/common/text.h"

namespace narrate::alm {
namespace {

std::string Body(const std::vector<Condition>& body) {
  std::vector<std::string> parts;
  parts.reserve(body.size());
  for (const auto& c : body) parts.push_back(RenderCondition(c));
  return Join(parts, ", ");
}

void RenderModule(const ModuleDecl& m, std::ostringstream& out) {
  out << "    module " << m.name << "\n";
  if (!m.depends_on.empty()) {
    std::vector<std::string> paths;
    for (const auto& p : m.depends_on) paths.push_back(p.ToString());
    out << "      depends on " << Join(paths, ", ") << "\n";
  }
  if (!m.sorts.empty()) {
    out << "      sort declarations\n";
    for (const auto& s : m.sorts) {
      out << "        " << Join(s.names, ", ") << " :: " << Join(s.parents, ", ") << "\n";
      if (s.attributes.empty()) continue;
      out << "          attributes\n";
      for (const auto& a : s.attributes) {
        out << "            " << a.name << " : " << Join(a.arg_sorts, " * ") << " -> "
            << a.result << "\n";
      }
    }
  }
  if (!m.fluents.empty()) {
    out << "      function declarations\n        fluents\n          basic\n";
    for (const auto& f : m.fluents) {
      out << "            " << f.name << " : " << Join(f.arg_sorts, " * ")
          << " -> booleans\n";
    }
  }
  if (m.causal_laws.empty() && m.constraints.empty() && m.executability.empty()) return;
  out << "      axioms\n";
  if (!m.causal_laws.empty()) {
    out << "        dynamic causal laws\n";
    for (const auto& a : m.causal_laws) out << "          " << RenderAxiom(a) << "\n";
  }
  if (!m.constraints.empty()) {
    out << "        state constraints\n";
    for (const auto& a : m.constraints) out << "          " << RenderAxiom(a) << "\n";
  }
  if (!m.executability.empty()) {
    out << "        executability conditions\n";
    for (const auto& a : m.executability) out << "          " << RenderAxiom(a) << "\n";
  }
}

void RenderTheoryInto(const Theory& t, std::ostringstream& out) {
  out << "  theory " << t.name << "\n";
  for (const auto& imp : t.imports) {
    out << "    import " << imp.path.ToString() << " from " << imp.library << "\n";
  }
  for (const auto& m : t.modules) RenderModule(m, out);
}

}  // namespace

std::string RenderTerm(const Term& term) { return term.name; }

std::string RenderLiteral(const Literal& literal) {
  std::vector<std::string> args;
  for (const auto& t : literal.args) args.push_back(RenderTerm(t));
  return (literal.positive ? "" : "-") + literal.function + "(" + Join(args, ",") + ")";
}

std::string RenderCondition(const Condition& condition) {
  if (const auto* lit = std::get_if<Literal>(&condition)) return RenderLiteral(*lit);
  if (const auto* test = std::get_if<InstanceTest>(&condition)) {
    return "instance(" + RenderTerm(test->term) + "," + test->sort + ")";
  }
  const auto& cmp = std::get<Comparison>(condition);
  return RenderTerm(cmp.lhs) + (cmp.equal ? " = " : " != ") + RenderTerm(cmp.rhs);
}

std::string RenderAxiom(const Axiom& axiom) {
  if (const auto* law = std::get_if<DynamicCausalLaw>(&axiom)) {
    return "occurs(" + law->action_var + ") causes " + RenderLiteral(law->head) + " if " +
           Body(law->body) + ".";
  }
  if (const auto* sc = std::get_if<StateConstraint>(&axiom)) {
    return RenderLiteral(sc->head) + " if " + Body(sc->body) + ".";
  }
  const auto& ex = std::get<Executability>(axiom);
  return "impossible occurs(" + ex.action_var + ") if " + Body(ex.body) + ".";
}

std::string RenderTheory(const Theory& theory) {
  std::ostringstream out;
  RenderTheoryInto(theory, out);
  return out.str();
}

std::string RenderProgram(const Program& p) {
  std::ostringstream out;
  out << "system description " << p.name << "\n";
  RenderTheoryInto(p.theory, out);
  out << "  structure " << p.structure.name << "\n";
  out << "    instances\n";
  for (const auto& inst : p.structure.instances) {
    out << "      " << Join(inst.names, ", ") << " in " << inst.sort << "\n";
    for (const auto& a : inst.assignments) {
      out << "        " << a.attribute << "(" << Join(a.args, ",")
          << ") = " << (a.value ? "true" : "false") << "\n";
    }
  }
  if (p.temporal_projection) out << "temporal projection\n";
  if (p.max_steps) out << "max steps " << *p.max_steps << "\n";
  if (!p.history.empty()) {
    out << "history\n";
    for (const auto& occ : p.history) {
      out << "  happened(" << occ.event << "," << occ.time << ").\n";
    }
  }
  return out.str();
}

std::vector<Axiom> ModuleDecl::axioms() const {
  std::vector<Axiom> out;
  out.insert(out.end(), causal_laws.begin(), causal_laws.end());
  out.insert(out.end(), constraints.begin(), constraints.end());
  out.insert(out.end(), executability.begin(), executability.end());
  return out;
}

}  // namespace narrate::alm
