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

#include "narrate/sem/project.h"

#include <algorithm>
#include <map>
#include <optional>

namespace narrate::sem {

std::vector<int> State::Literals() const {
  std::vector<int> out;
  for (size_t a = 0; a < value.size(); ++a) {
    if (value[a] > 0) out.push_back(PositiveLiteral(static_cast<int>(a)));
    if (value[a] < 0) out.push_back(NegativeLiteral(static_cast<int>(a)));
  }
  return out;
}

namespace {

void Set(std::vector<int8_t>& value, int literal) {
  value[AtomOf(literal)] = IsNegative(literal) ? -1 : 1;
}

bool Holds(const std::vector<int8_t>& value, int literal) {
  return value[AtomOf(literal)] == (IsNegative(literal) ? -1 : 1);
}

bool BodyHolds(const State& s, const std::vector<int>& body) {
  return std::all_of(body.begin(), body.end(), [&](int l) { return s.Holds(l); });
}

// Closes a value vector under the ground state constraints by counting, per
// constraint, the body literals not yet present.
class Closer {
 public:
  struct Conflict {
    int derived;
    int existing;
  };

  explicit Closer(const GroundProgram& g) : g_(g), watch_(2 * g.atoms.size()) {
    for (size_t c = 0; c < g.constraints.size(); ++c) {
      for (int l : g.constraints[c].body) watch_[l].push_back(static_cast<int>(c));
    }
  }

  std::optional<Conflict> Close(std::vector<int8_t>& value) {
    const auto& cs = g_.constraints;
    missing_.resize(cs.size());
    queue_.clear();
    for (size_t a = 0; a < value.size(); ++a) {
      if (value[a] > 0) queue_.push_back(PositiveLiteral(static_cast<int>(a)));
      if (value[a] < 0) queue_.push_back(NegativeLiteral(static_cast<int>(a)));
    }
    for (size_t c = 0; c < cs.size(); ++c) {
      missing_[c] = static_cast<int>(cs[c].body.size());
      if (missing_[c] == 0) {
        if (auto conflict = Derive(value, cs[c].head)) return conflict;
      }
    }
    for (size_t i = 0; i < queue_.size(); ++i) {
      for (int c : watch_[queue_[i]]) {
        if (--missing_[c] == 0) {
          if (auto conflict = Derive(value, cs[c].head)) return conflict;
        }
      }
    }
    return std::nullopt;
  }

 private:
  std::optional<Conflict> Derive(std::vector<int8_t>& value, int head) {
    if (Holds(value, head)) return std::nullopt;
    if (Holds(value, Complement(head))) return Conflict{head, Complement(head)};
    Set(value, head);
    queue_.push_back(head);
    return std::nullopt;
  }

  const GroundProgram& g_;
  std::vector<std::vector<int>> watch_;
  std::vector<int> missing_;
  std::vector<int> queue_;
};

[[noreturn]] void Contradiction(const GroundProgram& g, const Closer::Conflict& c,
                                const std::string& where) {
  throw Error(ErrorKind::kInconsistency, "contradiction " + where + ": " +
                                             g.LiteralText(c.derived) + " and " +
                                             g.LiteralText(c.existing));
}

}  // namespace

std::vector<int> Closure(const GroundProgram& program, const std::vector<int>& literals) {
  std::vector<int8_t> value(program.atoms.size(), 0);
  for (int l : literals) {
    if (Holds(value, Complement(l))) {
      Contradiction(program, {l, Complement(l)}, "in the input");
    }
    Set(value, l);
  }
  Closer closer(program);
  if (auto conflict = closer.Close(value)) Contradiction(program, *conflict, "in closure");
  return State{value}.Literals();
}

Trajectory Project(const GroundProgram& g, const std::vector<alm::Occurrence>& history,
                   int max_steps, const ProjectOptions& options) {
  if (max_steps < 1) throw Error(ErrorKind::kInput, "max steps must be at least 1");
  const SymbolTable& st = g.symbols;
  Trajectory traj;
  std::map<int, std::vector<int>> events_at;
  for (const auto& occ : history) {
    auto id = st.Find(occ.event);
    if (!id || !st.IsEvent(*id)) throw Error(ErrorKind::kInput, "undeclared event " + occ.event);
    if (occ.time < 0 || occ.time >= max_steps) {
      throw Error(ErrorKind::kInput, "time " + std::to_string(occ.time) + " of " + occ.event +
                                         " is out of range");
    }
    events_at[occ.time].push_back(*id);
    traj.occurrences.emplace_back(*id, occ.time);
  }
  std::stable_sort(traj.occurrences.begin(), traj.occurrences.end(),
                   [](const auto& a, const auto& b) { return a.second < b.second; });

  std::map<int, std::vector<const GroundCausalLaw*>> laws;
  for (const auto& law : g.causal_laws) laws[law.event].push_back(&law);
  std::map<int, std::vector<const GroundExecutability*>> conditions;
  for (const auto& ex : g.executability) conditions[ex.event].push_back(&ex);

  Closer closer(g);
  const size_t n = g.atoms.size();
  State s0{std::vector<int8_t>(n, 0)};
  if (auto conflict = closer.Close(s0.value)) Contradiction(g, *conflict, "at time 0");
  traj.states.push_back(std::move(s0));

  for (int t = 0; t < max_steps; ++t) {
    const State& cur = traj.states[t];
    const auto& events = events_at[t];
    for (int e : events) {
      for (const auto* ex : conditions[e]) {
        if (!BodyHolds(cur, ex->body)) continue;
        std::string msg = st.Name(e) + " is not executable at time " + std::to_string(t) +
                          ": " + g.Text(*ex);
        if (options.strict_executability) throw Error(ErrorKind::kInconsistency, msg);
        traj.diagnostics.push_back(MakeWarning(msg));
      }
    }
    if (t + 1 == max_steps) break;

    std::vector<int8_t> caused(n, 0);
    for (int e : events) {
      for (const auto* law : laws[e]) {
        if (!BodyHolds(cur, law->body)) continue;
        if (Holds(caused, Complement(law->head))) {
          throw Error(ErrorKind::kInconsistency,
                      "conflicting effects at time " + std::to_string(t) + ": " +
                          g.LiteralText(law->head) + " and " +
                          g.LiteralText(Complement(law->head)));
        }
        Set(caused, law->head);
      }
    }
    const std::string where = "at time " + std::to_string(t + 1);
    if (auto conflict = closer.Close(caused)) Contradiction(g, *conflict, where);

    // Inertia: carry every literal of the current state whose complement the
    // effects do not establish. When closure turns a carried literal into a
    // contradiction, that literal is defeated and the step is retried.
    std::vector<char> defeated(n, 0);
    std::vector<int8_t> next;
    for (;;) {
      next = caused;
      for (size_t a = 0; a < n; ++a) {
        if (cur.value[a] != 0 && caused[a] == 0 && !defeated[a]) next[a] = cur.value[a];
      }
      auto conflict = closer.Close(next);
      if (!conflict) break;
      const int a = AtomOf(conflict->existing);
      if (caused[a] != 0 || defeated[a] || !cur.Holds(conflict->existing)) {
        throw Error(ErrorKind::kInconsistency,
                    "ambiguous inertia " + where + ": " + g.LiteralText(conflict->derived) +
                        " and " + g.LiteralText(conflict->existing));
      }
      defeated[a] = 1;
    }
    traj.states.push_back(State{std::move(next)});
  }
  return traj;
}

Trajectory Project(const GroundProgram& ground, const alm::Program& program,
                   const ProjectOptions& options) {
  return Project(ground, program.history, program.max_steps.value_or(1), options);
}

}  // namespace narrate::sem
