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

#include "narrate/alm/parser.h"

#include <array>
#include <cctype>
#include <string>

namespace narrate::alm {
namespace {

constexpr std::array kReserved = {
    "system",    "description", "theory",     "module",       "import",
    "from",      "depends",     "on",         "sort",         "sorts",
    "declarations", "attributes", "function", "fluents",      "basic",
    "axioms",    "dynamic",     "causal",     "laws",         "state",
    "constraints", "executability", "conditions", "occurs",   "causes",
    "if",        "impossible",  "instance",   "structure",    "instances",
    "in",        "true",        "false",      "temporal",     "projection",
    "max",       "steps",       "history",    "happened",
};

enum class TokenKind { kIdent, kNumber, kPunct, kEnd };

struct Token {
  TokenKind kind = TokenKind::kEnd;
  std::string text;
  SourceLoc loc;
};

struct ParseFailure {
  std::string message;
  SourceLoc loc;
};

bool IsIdentChar(char c) {
  return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
}

std::vector<Token> Tokenize(std::string_view src) {
  std::vector<Token> out;
  int line = 1, col = 1;
  size_t i = 0;
  auto advance = [&](size_t n) {
    for (size_t k = 0; k < n; ++k, ++i) {
      if (src[i] == '\n') {
        ++line;
        col = 1;
      } else {
        ++col;
      }
    }
  };
  while (i < src.size()) {
    const char c = src[i];
    if (c == '%') {
      while (i < src.size() && src[i] != '\n') advance(1);
      continue;
    }
    if (std::isspace(static_cast<unsigned char>(c))) {
      advance(1);
      continue;
    }
    const SourceLoc loc{line, col};
    if (IsIdentChar(c)) {
      size_t j = i;
      bool digits = true;
      while (j < src.size() && IsIdentChar(src[j])) {
        digits = digits && std::isdigit(static_cast<unsigned char>(src[j]));
        ++j;
      }
      out.push_back({digits ? TokenKind::kNumber : TokenKind::kIdent,
                     std::string(src.substr(i, j - i)), loc});
      advance(j - i);
      continue;
    }
    auto two = src.substr(i, 2);
    if (two == "::" || two == "->" || two == "!=") {
      out.push_back({TokenKind::kPunct, std::string(two), loc});
      advance(2);
      continue;
    }
    if (std::string_view(":*,().=-").find(c) != std::string_view::npos) {
      out.push_back({TokenKind::kPunct, std::string(1, c), loc});
      advance(1);
      continue;
    }
    std::string shown = std::isprint(static_cast<unsigned char>(c))
                            ? std::string(1, c)
                            : "byte " + std::to_string(static_cast<unsigned char>(c));
    throw ParseFailure{"unexpected character '" + shown + "'", loc};
  }
  out.push_back({TokenKind::kEnd, "", {line, col}});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : toks_(std::move(tokens)) {}

  Program ParseProgram() {
    Program p;
    ExpectWord("system");
    ExpectWord("description");
    p.name = ExpectName("system description name");
    p.theory = ParseTheory();
    p.structure = ParseStructure();
    if (IsWord(0, "temporal")) {
      Next();
      ExpectWord("projection");
      p.temporal_projection = true;
    }
    if (IsWord(0, "max")) {
      Next();
      ExpectWord("steps");
      p.max_steps = ExpectNumber();
    }
    if (IsWord(0, "history")) {
      Next();
      while (IsWord(0, "happened")) p.history.push_back(ParseOccurrence());
    }
    ExpectEnd();
    return p;
  }

  std::vector<Theory> ParseTheoryFile() {
    std::vector<Theory> out;
    while (IsWord(0, "theory")) out.push_back(ParseTheory());
    ExpectEnd();
    return out;
  }

 private:
  const Token& Peek(size_t k = 0) const {
    return toks_[std::min(pos_ + k, toks_.size() - 1)];
  }
  const Token& Next() {
    const Token& t = toks_[pos_];
    if (pos_ + 1 < toks_.size()) ++pos_;
    return t;
  }

  bool IsWord(size_t k, std::string_view w) const {
    return Peek(k).kind == TokenKind::kIdent && Peek(k).text == w;
  }
  bool IsPunct(size_t k, std::string_view p) const {
    return Peek(k).kind == TokenKind::kPunct && Peek(k).text == p;
  }
  bool IsName(size_t k) const {
    return Peek(k).kind == TokenKind::kIdent && !IsReservedWord(Peek(k).text);
  }

  [[noreturn]] void Fail(const std::string& expected) const {
    const Token& t = Peek();
    std::string found = t.kind == TokenKind::kEnd ? "end of input" : "'" + t.text + "'";
    throw ParseFailure{"expected " + expected + ", found " + found, t.loc};
  }

  void ExpectWord(std::string_view w) {
    if (!IsWord(0, w)) Fail("'" + std::string(w) + "'");
    Next();
  }
  void ExpectPunct(std::string_view p) {
    if (!IsPunct(0, p)) Fail("'" + std::string(p) + "'");
    Next();
  }
  bool AcceptPunct(std::string_view p) {
    if (!IsPunct(0, p)) return false;
    Next();
    return true;
  }
  std::string ExpectName(const std::string& what) {
    if (!IsName(0)) Fail(what);
    return Next().text;
  }
  int ExpectNumber() {
    if (Peek().kind != TokenKind::kNumber) Fail("a number");
    const Token& t = Next();
    if (t.text.size() > 9) throw ParseFailure{"number too large: " + t.text, t.loc};
    return std::stoi(t.text);
  }
  void ExpectEnd() {
    if (Peek().kind != TokenKind::kEnd) Fail("end of input");
  }

  std::vector<std::string> ParseNameList(const std::string& what) {
    std::vector<std::string> names{ExpectName(what)};
    while (AcceptPunct(",")) names.push_back(ExpectName(what));
    return names;
  }

  ModulePath ParsePath() {
    ModulePath path;
    path.theory = ExpectName("theory name");
    ExpectPunct(".");
    path.module = ExpectName("module name");
    return path;
  }

  Theory ParseTheory() {
    Theory th;
    th.loc = Peek().loc;
    ExpectWord("theory");
    th.name = ExpectName("theory name");
    for (;;) {
      if (IsWord(0, "import")) {
        Import imp;
        imp.loc = Next().loc;
        imp.path = ParsePath();
        ExpectWord("from");
        imp.library = ExpectName("library name");
        th.imports.push_back(std::move(imp));
      } else if (IsWord(0, "module")) {
        th.modules.push_back(ParseModule());
      } else {
        break;
      }
    }
    return th;
  }

  ModuleDecl ParseModule() {
    ModuleDecl m;
    m.loc = Next().loc;
    m.name = ExpectName("module name");
    if (IsWord(0, "depends")) {
      Next();
      ExpectWord("on");
      m.depends_on.push_back(ParsePath());
      while (AcceptPunct(",")) m.depends_on.push_back(ParsePath());
    }
    if ((IsWord(0, "sort") || IsWord(0, "sorts")) && IsWord(1, "declarations")) {
      Next();
      Next();
      while (IsName(0)) m.sorts.push_back(ParseSortDecl());
    }
    if (IsWord(0, "function")) {
      Next();
      ExpectWord("declarations");
      ExpectWord("fluents");
      ExpectWord("basic");
      while (IsName(0)) {
        FluentDecl f;
        f.loc = Peek().loc;
        f.name = Next().text;
        ExpectPunct(":");
        f.arg_sorts = ParseSortList();
        ExpectPunct("->");
        ExpectWord("booleans");
        m.fluents.push_back(std::move(f));
      }
    }
    if (IsWord(0, "axioms")) {
      Next();
      if (IsWord(0, "dynamic")) {
        Next();
        ExpectWord("causal");
        ExpectWord("laws");
        while (IsWord(0, "occurs")) m.causal_laws.push_back(ParseCausalLaw());
      }
      if (IsWord(0, "state")) {
        Next();
        ExpectWord("constraints");
        while (IsPunct(0, "-") || IsName(0)) m.constraints.push_back(ParseStateConstraint());
      }
      if (IsWord(0, "executability")) {
        Next();
        ExpectWord("conditions");
        while (IsWord(0, "impossible")) m.executability.push_back(ParseExecutability());
      }
    }
    return m;
  }

  std::vector<std::string> ParseSortList() {
    std::vector<std::string> sorts{ExpectName("sort name")};
    while (AcceptPunct("*")) sorts.push_back(ExpectName("sort name"));
    return sorts;
  }

  SortDecl ParseSortDecl() {
    SortDecl d;
    d.loc = Peek().loc;
    d.names = ParseNameList("sort name");
    ExpectPunct("::");
    d.parents = ParseNameList("parent sort");
    if (IsWord(0, "attributes")) {
      Next();
      while (IsName(0) && IsPunct(1, ":")) {
        AttributeDecl a;
        a.loc = Peek().loc;
        a.name = Next().text;
        Next();
        a.arg_sorts = ParseSortList();
        ExpectPunct("->");
        if (Peek().kind != TokenKind::kIdent) Fail("result sort");
        a.result = Next().text;
        d.attributes.push_back(std::move(a));
      }
    }
    return d;
  }

  Term ParseTerm() {
    if (Peek().kind == TokenKind::kNumber) {
      throw ParseFailure{"numerals are only allowed as time points", Peek().loc};
    }
    if (!IsName(0)) Fail("a term");
    const std::string& name = Next().text;
    if (std::isupper(static_cast<unsigned char>(name[0]))) return Term::Variable(name);
    return Term::Constant(name);
  }

  Literal ParseLiteral() {
    Literal lit;
    lit.loc = Peek().loc;
    if (AcceptPunct("-")) lit.positive = false;
    lit.function = ExpectName("function name");
    ExpectPunct("(");
    lit.args.push_back(ParseTerm());
    while (AcceptPunct(",")) lit.args.push_back(ParseTerm());
    ExpectPunct(")");
    return lit;
  }

  Condition ParseCondition() {
    const SourceLoc loc = Peek().loc;
    if (IsWord(0, "instance") && IsPunct(1, "(")) {
      Next();
      Next();
      InstanceTest test;
      test.loc = loc;
      test.term = ParseTerm();
      ExpectPunct(",");
      test.sort = ExpectName("sort name");
      ExpectPunct(")");
      return test;
    }
    if (IsPunct(0, "-") || (IsName(0) && IsPunct(1, "("))) return ParseLiteral();
    Comparison cmp;
    cmp.loc = loc;
    cmp.lhs = ParseTerm();
    if (AcceptPunct("=")) {
      cmp.equal = true;
    } else if (AcceptPunct("!=")) {
      cmp.equal = false;
    } else {
      Fail("'=' or '!='");
    }
    cmp.rhs = ParseTerm();
    return cmp;
  }

  std::vector<Condition> ParseConditions() {
    std::vector<Condition> body{ParseCondition()};
    while (AcceptPunct(",")) body.push_back(ParseCondition());
    return body;
  }

  std::string ParseOccursVar() {
    ExpectWord("occurs");
    ExpectPunct("(");
    Term t = ParseTerm();
    if (!t.is_variable()) {
      throw ParseFailure{"occurs() expects an action variable", Peek().loc};
    }
    ExpectPunct(")");
    return t.name;
  }

  DynamicCausalLaw ParseCausalLaw() {
    DynamicCausalLaw law;
    law.loc = Peek().loc;
    law.action_var = ParseOccursVar();
    ExpectWord("causes");
    law.head = ParseLiteral();
    ExpectWord("if");
    law.body = ParseConditions();
    ExpectPunct(".");
    return law;
  }

  StateConstraint ParseStateConstraint() {
    StateConstraint sc;
    sc.loc = Peek().loc;
    sc.head = ParseLiteral();
    ExpectWord("if");
    sc.body = ParseConditions();
    ExpectPunct(".");
    return sc;
  }

  Executability ParseExecutability() {
    Executability ex;
    ex.loc = Next().loc;
    ex.action_var = ParseOccursVar();
    ExpectWord("if");
    ex.body = ParseConditions();
    ExpectPunct(".");
    return ex;
  }

  Structure ParseStructure() {
    Structure s;
    s.loc = Peek().loc;
    ExpectWord("structure");
    s.name = ExpectName("structure name");
    ExpectWord("instances");
    while (IsName(0)) {
      InstanceDecl d;
      d.loc = Peek().loc;
      d.names = ParseNameList("instance name");
      ExpectWord("in");
      d.sort = ExpectName("sort name");
      while (IsName(0) && IsPunct(1, "(")) {
        AttributeAssignment a;
        a.loc = Peek().loc;
        a.attribute = Next().text;
        Next();
        a.args = ParseNameList("instance name");
        ExpectPunct(")");
        ExpectPunct("=");
        if (IsWord(0, "true")) {
          a.value = true;
        } else if (IsWord(0, "false")) {
          a.value = false;
        } else {
          Fail("'true' or 'false'");
        }
        Next();
        d.assignments.push_back(std::move(a));
      }
      s.instances.push_back(std::move(d));
    }
    return s;
  }

  Occurrence ParseOccurrence() {
    Occurrence occ;
    occ.loc = Next().loc;
    ExpectPunct("(");
    occ.event = ExpectName("event name");
    ExpectPunct(",");
    occ.time = ExpectNumber();
    ExpectPunct(")");
    ExpectPunct(".");
    return occ;
  }

  std::vector<Token> toks_;
  size_t pos_ = 0;
};

template <typename T, typename Fn>
Parsed<T> RunParser(std::string_view source, Fn fn) {
  Parsed<T> result;
  try {
    Parser parser(Tokenize(source));
    result.value = fn(parser);
  } catch (const ParseFailure& f) {
    result.diagnostics.push_back(MakeError(f.message, f.loc));
  }
  return result;
}

}  // namespace

bool IsReservedWord(std::string_view word) {
  for (const char* r : kReserved) {
    if (word == r) return true;
  }
  return false;
}

Parsed<Program> ParseProgram(std::string_view source) {
  return RunParser<Program>(source, [](Parser& p) { return p.ParseProgram(); });
}

Parsed<std::vector<Theory>> ParseTheoryFile(std::string_view source) {
  return RunParser<std::vector<Theory>>(source,
                                        [](Parser& p) { return p.ParseTheoryFile(); });
}

}  // namespace narrate::alm
