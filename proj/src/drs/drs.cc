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

#include "narrate/drs/drs.h"

#include <algorithm>
#include <cctype>
#include <optional>
#include <set>

namespace narrate::drs {

std::vector<std::string> Drs::EventsByTime() const {
  std::vector<std::string> ids;
  for (const auto& [id, e] : events) ids.push_back(id);
  std::stable_sort(ids.begin(), ids.end(), [&](const std::string& a, const std::string& b) {
    return events.at(a).time < events.at(b).time;
  });
  return ids;
}

namespace {

struct Arg {
  enum class Kind { kIdent, kNumber, kString };
  Kind kind;
  std::string text;
};

struct Fact {
  std::string name;
  std::vector<Arg> args;
  SourceLoc loc;
};

struct Failure {
  std::string message;
  SourceLoc loc;
};

class FactReader {
 public:
  explicit FactReader(std::string_view src) : src_(src) {}

  std::optional<Fact> Next() {
    SkipSpace();
    if (i_ >= src_.size()) return std::nullopt;
    Fact f;
    f.loc = Loc();
    f.name = Ident("fact name");
    SkipSpace();
    Expect('(');
    for (;;) {
      SkipSpace();
      f.args.push_back(ReadArg());
      SkipSpace();
      if (Peek() == ',') {
        Advance();
        continue;
      }
      Expect(')');
      break;
    }
    SkipSpace();
    Expect('.');
    return f;
  }

 private:
  SourceLoc Loc() const { return {line_, col_}; }
  char Peek() const { return i_ < src_.size() ? src_[i_] : '\0'; }
  void Advance() {
    if (src_[i_] == '\n') {
      ++line_;
      col_ = 1;
    } else {
      ++col_;
    }
    ++i_;
  }
  void SkipSpace() {
    while (i_ < src_.size()) {
      if (src_[i_] == '%') {
        while (i_ < src_.size() && src_[i_] != '\n') Advance();
      } else if (std::isspace(static_cast<unsigned char>(src_[i_]))) {
        Advance();
      } else {
        break;
      }
    }
  }
  [[noreturn]] void Fail(const std::string& expected) const {
    std::string found = i_ < src_.size() ? "'" + std::string(1, src_[i_]) + "'" : "end of input";
    throw Failure{"expected " + expected + ", found " + found, Loc()};
  }
  void Expect(char c) {
    if (Peek() != c) Fail("'" + std::string(1, c) + "'");
    Advance();
  }
  static bool IsIdent(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }
  std::string Ident(const std::string& what) {
    if (!IsIdent(Peek())) Fail(what);
    std::string out;
    while (IsIdent(Peek())) {
      out += Peek();
      Advance();
    }
    return out;
  }
  Arg ReadArg() {
    if (Peek() == '"') {
      const SourceLoc start = Loc();
      Advance();
      std::string out;
      for (;;) {
        if (i_ >= src_.size() || Peek() == '\n') throw Failure{"unterminated string", start};
        char c = Peek();
        Advance();
        if (c == '"') break;
        if (c == '\\' && i_ < src_.size()) {
          c = Peek();
          Advance();
        }
        out += c;
      }
      return {Arg::Kind::kString, out};
    }
    std::string t = Ident("an argument");
    bool digits = std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
    return {digits ? Arg::Kind::kNumber : Arg::Kind::kIdent, t};
  }

  std::string_view src_;
  size_t i_ = 0;
  int line_ = 1;
  int col_ = 1;
};

std::string Quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  return out + "\"";
}

}  // namespace

Parsed<Drs> ParseDrs(std::string_view source) {
  Parsed<Drs> result;
  Diagnostics& diags = result.diagnostics;
  std::vector<Fact> facts;
  try {
    FactReader reader(source);
    while (auto f = reader.Next()) facts.push_back(std::move(*f));
  } catch (const Failure& f) {
    diags.push_back(MakeError(f.message, f.loc));
    return result;
  }

  Drs d;
  std::map<std::string, SourceLoc> declared_entities;
  std::map<std::string, SourceLoc> declared_events;
  std::map<std::string, bool> has_type, has_time;
  auto error = [&](const std::string& msg, SourceLoc loc) { diags.push_back(MakeError(msg, loc)); };
  auto shape = [&](const Fact& f, std::vector<Arg::Kind> kinds) {
    bool ok = f.args.size() == kinds.size();
    for (size_t i = 0; ok && i < kinds.size(); ++i) ok = f.args[i].kind == kinds[i];
    if (!ok) error("malformed " + f.name + "/" + std::to_string(kinds.size()) + " fact", f.loc);
    return ok;
  };
  using K = Arg::Kind;
  // Declarations first so that facts may come in any order.
  for (const auto& f : facts) {
    if (f.name == "entity" && shape(f, {K::kIdent})) {
      if (declared_entities.count(f.args[0].text)) {
        error("duplicate entity " + f.args[0].text, f.loc);
      }
      declared_entities.emplace(f.args[0].text, f.loc);
    } else if (f.name == "event" && shape(f, {K::kIdent})) {
      if (declared_events.count(f.args[0].text)) {
        error("duplicate event " + f.args[0].text, f.loc);
      }
      declared_events.emplace(f.args[0].text, f.loc);
      d.events[f.args[0].text];
    } else if (f.name != "entity" && f.name != "event" && f.name != "property" &&
               f.name != "eventType" && f.name != "eventTime" && f.name != "eventArgument") {
      error("unknown fact " + f.name, f.loc);
    }
  }
  auto referent = [&](const std::string& r, SourceLoc loc) {
    if (declared_entities.count(r)) return true;
    error("undeclared referent " + r, loc);
    return false;
  };
  auto event = [&](const std::string& e, SourceLoc loc) -> EventRecord* {
    if (declared_events.count(e)) return &d.events[e];
    error("undeclared event " + e, loc);
    return nullptr;
  };
  for (const auto& f : facts) {
    if (f.name == "property" && shape(f, {K::kIdent, K::kString})) {
      if (!referent(f.args[0].text, f.loc)) continue;
      auto [it, fresh] = d.entities.emplace(f.args[0].text, f.args[1].text);
      if (!fresh && it->second != f.args[1].text) {
        error("conflicting names for " + f.args[0].text, f.loc);
      }
    } else if (f.name == "eventType" && shape(f, {K::kIdent, K::kString})) {
      EventRecord* e = event(f.args[0].text, f.loc);
      if (!e) continue;
      if (has_type[f.args[0].text]) error("duplicate eventType for " + f.args[0].text, f.loc);
      has_type[f.args[0].text] = true;
      e->class_id = f.args[1].text;
    } else if (f.name == "eventTime" && shape(f, {K::kIdent, K::kNumber})) {
      EventRecord* e = event(f.args[0].text, f.loc);
      if (!e) continue;
      if (has_time[f.args[0].text]) error("duplicate eventTime for " + f.args[0].text, f.loc);
      has_time[f.args[0].text] = true;
      if (f.args[1].text.size() > 9) {
        error("time out of range", f.loc);
        continue;
      }
      e->time = std::stoi(f.args[1].text);
    } else if (f.name == "eventArgument" && shape(f, {K::kIdent, K::kString, K::kIdent})) {
      EventRecord* e = event(f.args[0].text, f.loc);
      if (!e || !referent(f.args[2].text, f.loc)) continue;
      for (const auto& [role, ref] : e->args) {
        if (role == f.args[1].text) error("duplicate role " + role + " for " + f.args[0].text, f.loc);
      }
      e->args.emplace_back(f.args[1].text, f.args[2].text);
    }
  }
  for (const auto& [r, loc] : declared_entities) {
    if (!d.entities.count(r)) error("entity " + r + " has no property", loc);
  }
  for (const auto& [e, loc] : declared_events) {
    if (!has_type[e]) error("event " + e + " has no eventType", loc);
    if (!has_time[e]) error("event " + e + " has no eventTime", loc);
  }
  std::map<int, std::string> by_time;
  for (const auto& [id, e] : d.events) {
    if (!has_time[id]) continue;
    auto [it, fresh] = by_time.emplace(e.time, id);
    if (!fresh) {
      error("events " + it->second + " and " + id + " share time " + std::to_string(e.time),
            declared_events[id]);
    }
  }
  if (!HasErrors(diags)) result.value = std::move(d);
  return result;
}

std::string SerializeDrs(const Drs& d) {
  std::string out;
  for (const auto& [r, name] : d.entities) out += "entity(" + r + ").\n";
  for (const auto& [r, name] : d.entities) out += "property(" + r + ", " + Quote(name) + ").\n";
  for (const auto& id : d.EventsByTime()) {
    const EventRecord& e = d.events.at(id);
    if (!out.empty()) out += "\n";
    out += "event(" + id + ").\n";
    out += "eventType(" + id + ", " + Quote(e.class_id) + ").\n";
    out += "eventTime(" + id + ", " + std::to_string(e.time) + ").\n";
    for (const auto& [role, ref] : e.args) {
      out += "eventArgument(" + id + ", " + Quote(role) + ", " + ref + ").\n";
    }
  }
  return out;
}

Diagnostics ValidateDrs(const Drs& d) {
  Diagnostics diags;
  std::map<int, std::string> by_time;
  for (const auto& [id, e] : d.events) {
    if (e.time < 0) diags.push_back(MakeError("negative time for " + id));
    auto [it, fresh] = by_time.emplace(e.time, id);
    if (!fresh) {
      diags.push_back(MakeError("events " + it->second + " and " + id + " share time " +
                                std::to_string(e.time)));
    }
    std::set<std::string> roles;
    for (const auto& [role, ref] : e.args) {
      if (!roles.insert(role).second) {
        diags.push_back(MakeError("duplicate role " + role + " for " + id));
      }
      if (!d.entities.count(ref)) diags.push_back(MakeError("undeclared referent " + ref));
    }
    if (e.class_id.empty()) diags.push_back(MakeError("event " + id + " has no class"));
  }
  int expected = 0;
  for (const auto& [t, id] : by_time) {
    if (t != expected++) {
      diags.push_back(MakeWarning("non-contiguous event times"));
      break;
    }
  }
  return diags;
}

}  // namespace narrate::drs
