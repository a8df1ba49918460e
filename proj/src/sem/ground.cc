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

#include "narrate/sem/ground.h"

#include <algorithm>
#include <functional>

#include "narrate/alm/validate.h"
#include "narrate/common/text.h"

namespace narrate::sem {

std::optional<int> GroundProgram::FindAtom(const std::string& function,
                                           const std::vector<int>& args) const {
  auto it = index_.find({function, args});
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

int GroundProgram::AddAtom(GroundAtom atom) {
  auto [it, fresh] = index_.try_emplace({atom.function, atom.args}, static_cast<int>(atoms.size()));
  if (fresh) atoms.push_back(std::move(atom));
  return it->second;
}

std::string GroundProgram::AtomText(int atom) const {
  const GroundAtom& a = atoms[atom];
  std::vector<std::string> args;
  for (int id : a.args) args.push_back(symbols.Name(id));
  return a.function + "(" + Join(args, ",") + ")";
}

std::string GroundProgram::LiteralText(int literal) const {
  return (IsNegative(literal) ? "-" : "") + AtomText(AtomOf(literal));
}

namespace {

std::string BodyText(const GroundProgram& g, const std::vector<int>& body) {
  if (body.empty()) return "";
  std::vector<std::string> parts;
  for (int l : body) parts.push_back(g.LiteralText(l));
  return " if " + Join(parts, ", ");
}

}  // namespace

std::string GroundProgram::Text(const GroundCausalLaw& law) const {
  return "occurs(" + symbols.Name(law.event) + ") causes " + LiteralText(law.head) +
         BodyText(*this, law.body);
}

std::string GroundProgram::Text(const GroundConstraint& c) const {
  return LiteralText(c.head) + BodyText(*this, c.body);
}

std::string GroundProgram::Text(const GroundExecutability& e) const {
  return "impossible occurs(" + symbols.Name(e.event) + ")" + BodyText(*this, e.body);
}

namespace {

struct TermRef {
  bool is_var = false;
  int value = 0;  // variable index or instance id
};

struct CompiledCondition {
  enum class Kind { kFluent, kAttribute, kInstance, kCompare };
  Kind kind = Kind::kFluent;
  bool positive = true;  // polarity, or equality for comparisons
  std::string name;      // function or sort
  std::vector<TermRef> args;
};

struct CompiledAxiom {
  std::vector<std::string> vars;
  std::vector<std::vector<char>> in_domain;
  std::vector<std::vector<int>> domain;
  std::optional<CompiledCondition> head;
  std::vector<CompiledCondition> body;
  int action_var = -1;
};

class Grounder {
 public:
  Grounder(const alm::Program& program, const GroundOptions& options)
      : program_(program), options_(options) {}

  GroundProgram Run() {
    auto diags = alm::Validate(program_);
    if (HasErrors(diags)) throw Error(ErrorKind::kInput, FormatDiagnostics(diags));
    g_.symbols = SymbolTable(program_);
    EnumerateAtoms();
    DeriveStaticAttributes();
    for (const auto& m : program_.theory.modules) {
      for (const auto& law : m.causal_laws) {
        auto ax = Compile(&law.head, law.body, law.action_var);
        Match(ax, [&](const std::vector<int>& b, std::vector<int> body) {
          auto head = HeadLiteral(ax, b);
          if (!head) return;
          g_.causal_laws.push_back({b[ax.action_var], *head, std::move(body)});
          Count();
        });
      }
      for (const auto& sc : m.constraints) {
        if (IsAttribute(sc.head.function)) continue;
        auto ax = Compile(&sc.head, sc.body, "");
        Match(ax, [&](const std::vector<int>& b, std::vector<int> body) {
          auto head = HeadLiteral(ax, b);
          if (!head) return;
          g_.constraints.push_back({*head, std::move(body)});
          Count();
        });
      }
      for (const auto& ex : m.executability) {
        auto ax = Compile(nullptr, ex.body, ex.action_var);
        Match(ax, [&](const std::vector<int>& b, std::vector<int> body) {
          g_.executability.push_back({b[ax.action_var], std::move(body)});
          Count();
        });
      }
    }
    return std::move(g_);
  }

 private:
  bool IsAttribute(const std::string& name) const {
    return g_.symbols.signature().FindAttribute(name) != nullptr;
  }

  void Count() {
    if (++size_ > options_.max_size) {
      throw Error(ErrorKind::kSizing, "grounding exceeds the cap of " +
                                          std::to_string(options_.max_size) +
                                          " atoms and axioms");
    }
  }

  void EnumerateAtoms() {
    const SymbolTable& st = g_.symbols;
    for (const auto& [name, decl] : st.signature().fluents()) {
      std::vector<int> args(decl.arg_sorts.size());
      std::function<void(size_t)> rec = [&](size_t i) {
        if (i == args.size()) {
          g_.AddAtom({name, args});
          Count();
          return;
        }
        for (int id : st.Members(decl.arg_sorts[i])) {
          args[i] = id;
          rec(i + 1);
        }
      };
      rec(0);
    }
  }

  // State constraints with attribute heads describe the structure, not the
  // state; their least fixpoint is computed once here.
  void DeriveStaticAttributes() {
    std::vector<CompiledAxiom> rules;
    for (const auto& m : program_.theory.modules) {
      for (const auto& sc : m.constraints) {
        if (!IsAttribute(sc.head.function)) continue;
        if (!sc.head.positive) {
          throw Error(ErrorKind::kUnsupported,
                      "negative attribute head " + sc.head.function + " is not supported");
        }
        for (const auto& c : sc.body) {
          const auto* lit = std::get_if<alm::Literal>(&c);
          if (lit && !IsAttribute(lit->function)) {
            throw Error(ErrorKind::kUnsupported, "attribute " + sc.head.function +
                                                     " cannot depend on fluent " +
                                                     lit->function);
          }
        }
        rules.push_back(Compile(&sc.head, sc.body, ""));
      }
    }
    for (bool changed = true; changed;) {
      changed = false;
      for (const auto& ax : rules) {
        std::vector<std::vector<int>> derived;
        Match(ax, [&](const std::vector<int>& b, std::vector<int>) {
          std::vector<int> args;
          for (const auto& t : ax.head->args) args.push_back(t.is_var ? b[t.value] : t.value);
          derived.push_back(std::move(args));
        });
        for (const auto& args : derived) {
          changed = g_.symbols.AddAttributeFact(ax.head->name, args) || changed;
        }
      }
    }
  }

  CompiledAxiom Compile(const alm::Literal* head, const std::vector<alm::Condition>& body,
                        const std::string& action_var) {
    const SymbolTable& st = g_.symbols;
    const alm::Signature& sig = st.signature();
    CompiledAxiom ax;
    std::vector<std::optional<std::vector<char>>> dom;
    auto restrict = [&](int var, const std::vector<int>& members) {
      std::vector<char> mask(st.size(), 0);
      for (int id : members) mask[id] = 1;
      if (!dom[var]) {
        dom[var] = std::move(mask);
      } else {
        for (int i = 0; i < st.size(); ++i) (*dom[var])[i] &= mask[i];
      }
    };
    auto term = [&](const alm::Term& t) {
      TermRef r;
      if (t.is_variable()) {
        auto it = std::find(ax.vars.begin(), ax.vars.end(), t.name);
        r.is_var = true;
        r.value = static_cast<int>(it - ax.vars.begin());
        if (it == ax.vars.end()) {
          ax.vars.push_back(t.name);
          dom.emplace_back();
        }
      } else {
        auto id = st.Find(t.name);
        if (!id) throw Error(ErrorKind::kInput, "undeclared constant " + t.name);
        r.value = *id;
      }
      return r;
    };
    auto literal = [&](const alm::Literal& lit) {
      CompiledCondition c;
      c.positive = lit.positive;
      c.name = lit.function;
      for (const auto& t : lit.args) c.args.push_back(term(t));
      if (const auto* f = sig.FindFluent(lit.function)) {
        c.kind = CompiledCondition::Kind::kFluent;
        for (size_t i = 0; i < c.args.size(); ++i) {
          if (c.args[i].is_var) restrict(c.args[i].value, st.Members(f->arg_sorts[i]));
        }
      } else {
        const auto* a = sig.FindAttribute(lit.function);
        c.kind = CompiledCondition::Kind::kAttribute;
        if (c.args[0].is_var) {
          std::vector<int> owners;
          for (const auto& o : a->owners) {
            const auto& m = st.Members(o);
            owners.insert(owners.end(), m.begin(), m.end());
          }
          restrict(c.args[0].value, owners);
        }
        for (size_t i = 1; i < c.args.size(); ++i) {
          if (c.args[i].is_var) restrict(c.args[i].value, st.Members(a->arg_sorts[i - 1]));
        }
      }
      return c;
    };
    if (head) ax.head = literal(*head);
    for (const auto& cond : body) {
      if (const auto* lit = std::get_if<alm::Literal>(&cond)) {
        ax.body.push_back(literal(*lit));
      } else if (const auto* test = std::get_if<alm::InstanceTest>(&cond)) {
        CompiledCondition c;
        c.kind = CompiledCondition::Kind::kInstance;
        c.name = test->sort;
        c.args.push_back(term(test->term));
        if (c.args[0].is_var) restrict(c.args[0].value, st.Members(test->sort));
        ax.body.push_back(std::move(c));
      } else {
        const auto& cmp = std::get<alm::Comparison>(cond);
        CompiledCondition c;
        c.kind = CompiledCondition::Kind::kCompare;
        c.positive = cmp.equal;
        c.args = {term(cmp.lhs), term(cmp.rhs)};
        ax.body.push_back(std::move(c));
      }
    }
    if (!action_var.empty()) {
      ax.action_var = term(alm::Term::Variable(action_var)).value;
      restrict(ax.action_var, st.Members(alm::kActions));
    }
    for (size_t v = 0; v < ax.vars.size(); ++v) {
      if (!dom[v]) dom[v] = std::vector<char>(st.size(), 1);
      ax.domain.emplace_back();
      for (int id = 0; id < st.size(); ++id) {
        if ((*dom[v])[id]) ax.domain.back().push_back(id);
      }
      ax.in_domain.push_back(std::move(*dom[v]));
    }
    return ax;
  }

  std::optional<int> HeadLiteral(const CompiledAxiom& ax, const std::vector<int>& b) const {
    std::vector<int> args;
    for (const auto& t : ax.head->args) args.push_back(t.is_var ? b[t.value] : t.value);
    auto atom = g_.FindAtom(ax.head->name, args);
    if (!atom) return std::nullopt;
    return ax.head->positive ? PositiveLiteral(*atom) : NegativeLiteral(*atom);
  }

  using Emit = std::function<void(const std::vector<int>&, std::vector<int>)>;

  void Match(const CompiledAxiom& ax, const Emit& emit) {
    std::vector<int> binding(ax.vars.size(), -1);
    std::vector<char> used(ax.body.size(), 0);
    std::vector<int> lits;
    Search(ax, binding, used, lits, emit);
  }

  int Value(const TermRef& t, const std::vector<int>& b) const {
    return t.is_var ? b[t.value] : t.value;
  }

  void Search(const CompiledAxiom& ax, std::vector<int>& b, std::vector<char>& used,
              std::vector<int>& lits, const Emit& emit) {
    if (++work_ > 50 * options_.max_size) {
      throw Error(ErrorKind::kSizing, "grounding search exceeds its work bound");
    }
    const SymbolTable& st = g_.symbols;
    using Kind = CompiledCondition::Kind;
    int pick = -1;
    int best = 100;
    for (size_t i = 0; i < ax.body.size(); ++i) {
      if (used[i]) continue;
      const auto& c = ax.body[i];
      int unbound = 0;
      for (const auto& t : c.args) unbound += t.is_var && b[t.value] < 0;
      int rank;
      if (unbound == 0) {
        rank = 0;
      } else if (c.kind == Kind::kAttribute && c.positive) {
        rank = 1;
      } else if (c.kind == Kind::kCompare && c.positive && unbound == 1) {
        rank = 2;
      } else if (c.kind == Kind::kInstance) {
        rank = 3;
      } else {
        continue;
      }
      if (rank < best) {
        best = rank;
        pick = static_cast<int>(i);
        if (rank == 0) break;
      }
    }
    if (pick < 0) {
      // Enumerate the first unbound variable, body order first.
      int var = -1;
      for (size_t i = 0; i < ax.body.size() && var < 0; ++i) {
        if (used[i]) continue;
        for (const auto& t : ax.body[i].args) {
          if (t.is_var && b[t.value] < 0) {
            var = t.value;
            break;
          }
        }
      }
      if (var < 0) {
        for (size_t v = 0; v < b.size() && var < 0; ++v) {
          if (b[v] < 0) var = static_cast<int>(v);
        }
      }
      if (var < 0) {
        std::vector<int> body = lits;
        std::sort(body.begin(), body.end());
        body.erase(std::unique(body.begin(), body.end()), body.end());
        for (size_t i = 0; i + 1 < body.size(); ++i) {
          if (body[i + 1] == Complement(body[i])) return;
        }
        emit(b, std::move(body));
        return;
      }
      for (int id : ax.domain[var]) {
        b[var] = id;
        Search(ax, b, used, lits, emit);
      }
      b[var] = -1;
      return;
    }

    const auto& c = ax.body[pick];
    used[pick] = 1;
    if (best == 0) {
      bool ok = true;
      switch (c.kind) {
        case Kind::kFluent: {
          std::vector<int> args;
          for (const auto& t : c.args) args.push_back(Value(t, b));
          auto atom = g_.FindAtom(c.name, args);
          if (!atom) {
            ok = false;
          } else {
            lits.push_back(c.positive ? PositiveLiteral(*atom) : NegativeLiteral(*atom));
          }
          break;
        }
        case Kind::kAttribute: {
          std::vector<int> args;
          for (const auto& t : c.args) args.push_back(Value(t, b));
          ok = st.AttributeHolds(c.name, args) == c.positive;
          break;
        }
        case Kind::kInstance:
          ok = st.IsInstanceOf(Value(c.args[0], b), c.name);
          break;
        case Kind::kCompare:
          ok = (Value(c.args[0], b) == Value(c.args[1], b)) == c.positive;
          break;
      }
      if (ok) {
        Search(ax, b, used, lits, emit);
        if (c.kind == Kind::kFluent) lits.pop_back();
      }
    } else if (best == 1) {
      for (const auto& fact : st.AttributeFacts(c.name)) {
        if (fact.size() != c.args.size()) continue;
        std::vector<int> bound_here;
        bool ok = true;
        for (size_t i = 0; i < fact.size() && ok; ++i) {
          const auto& t = c.args[i];
          if (!t.is_var) {
            ok = t.value == fact[i];
          } else if (b[t.value] >= 0) {
            ok = b[t.value] == fact[i];
          } else if (ax.in_domain[t.value][fact[i]]) {
            b[t.value] = fact[i];
            bound_here.push_back(t.value);
          } else {
            ok = false;
          }
        }
        if (ok) Search(ax, b, used, lits, emit);
        for (int v : bound_here) b[v] = -1;
      }
    } else if (best == 2) {
      const auto& lhs = c.args[0];
      const auto& rhs = c.args[1];
      const TermRef& free = lhs.is_var && b[lhs.value] < 0 ? lhs : rhs;
      const TermRef& fixed = &free == &lhs ? rhs : lhs;
      int value = Value(fixed, b);
      if (ax.in_domain[free.value][value]) {
        b[free.value] = value;
        Search(ax, b, used, lits, emit);
        b[free.value] = -1;
      }
    } else {
      int var = c.args[0].value;
      for (int id : ax.domain[var]) {
        if (!st.IsInstanceOf(id, c.name)) continue;
        b[var] = id;
        Search(ax, b, used, lits, emit);
      }
      b[var] = -1;
    }
    used[pick] = 0;
  }

  const alm::Program& program_;
  GroundOptions options_;
  GroundProgram g_;
  std::size_t size_ = 0;
  std::size_t work_ = 0;
};

}  // namespace

GroundProgram Ground(const alm::Program& program, const GroundOptions& options) {
  return Grounder(program, options).Run();
}

}  // namespace narrate::sem
