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

#include "narrate/qa/answer.h"

#include <algorithm>
#include <map>
#include <set>

#include "narrate/common/text.h"

namespace narrate::qa {
namespace {

bool Same(const std::string& a, const std::string& b) { return Normalize(a) == Normalize(b); }

[[noreturn]] void Indeterminate(const std::string& what) {
  throw Error(ErrorKind::kInput, "indeterminate: " + what);
}

// Second argument of the positive binary fluent atoms f(x, _, t), t <= time,
// keyed by time.
std::map<int, std::vector<std::string>> Values(const sem::Model& m, const std::string& fluent,
                                               const std::string& x, int time) {
  std::map<int, std::vector<std::string>> out;
  for (const auto& a : m.atoms) {
    if (a.function == fluent && a.args.size() == 2 && a.time <= time && Same(a.args[0], x)) {
      out[a.time].push_back(a.args[1]);
    }
  }
  return out;
}

bool HoldsAt(const std::map<int, std::vector<std::string>>& values, int t, const std::string& y) {
  auto it = values.find(t);
  if (it == values.end()) return false;
  return std::any_of(it->second.begin(), it->second.end(),
                     [&](const std::string& v) { return Same(v, y); });
}

std::string Where(const AnswerContext& ctx, const std::string& x) {
  auto values = Values(*ctx.model, "loc_in", x, ctx.time);
  if (values.empty()) Indeterminate("no known location of " + x);
  return values.rbegin()->second.front();
}

std::string WhereBefore(const AnswerContext& ctx, const std::string& o, const std::string& p) {
  auto values = Values(*ctx.model, "loc_in", o, ctx.time);
  int last = -1;
  for (const auto& [t, places] : values) {
    if (HoldsAt(values, t, p)) last = t;
  }
  if (last < 0) Indeterminate(o + " was never in " + p);
  int start = last;
  while (start > 0 && HoldsAt(values, start - 1, p)) --start;
  auto it = values.find(start - 1);
  if (start == 0 || it == values.end()) Indeterminate("location of " + o + " before " + p);
  return it->second.front();
}

std::vector<std::string> Carried(const AnswerContext& ctx, const std::string& x) {
  auto values = Values(*ctx.model, "holding", x, ctx.time);
  auto now = values.find(ctx.time);
  if (now == values.end()) return {};
  std::vector<std::pair<int, std::string>> held;
  for (const auto& o : now->second) {
    int start = ctx.time;
    while (start > 0 && HoldsAt(values, start - 1, o)) --start;
    held.emplace_back(start, o);
  }
  std::sort(held.begin(), held.end());
  std::vector<std::string> out;
  for (const auto& [t, o] : held) out.push_back(o);
  return out;
}

struct Transfer {
  std::string agent, theme, recipient;
};

// Transfer events that happened before the question time, latest first.
std::vector<Transfer> Transfers(const AnswerContext& ctx) {
  const sem::SymbolTable& st = ctx.ground->symbols;
  auto role = [&](const char* attr, int event) {
    for (const auto& fact : st.AttributeFacts(attr)) {
      if (fact.size() == 2 && fact[0] == event) {
        auto it = ctx.names->find(st.Name(fact[1]));
        return it == ctx.names->end() ? st.Name(fact[1]) : it->second;
      }
    }
    return std::string();
  };
  std::vector<std::pair<int, Transfer>> found;
  for (const auto& a : ctx.model->atoms) {
    if (a.function != "happened" || a.time >= ctx.time) continue;
    auto id = st.Find(a.args[0]);
    if (!id || !st.IsInstanceOf(*id, "transfer")) continue;
    found.emplace_back(a.time, Transfer{role("agent", *id), role("theme", *id),
                                        role("recipient", *id)});
  }
  std::stable_sort(found.begin(), found.end(),
                   [](const auto& x, const auto& y) { return x.first > y.first; });
  std::vector<Transfer> out;
  for (auto& [t, tr] : found) out.push_back(std::move(tr));
  return out;
}

std::string Given(const AnswerContext& ctx, const QuestionKind& q) {
  auto match = [&](const std::string& slot, const std::string& value) {
    return slot.empty() || Same(slot, value);
  };
  for (const auto& t : Transfers(ctx)) {
    if (!match(q.object, t.theme) || !match(q.giver, t.agent) || !match(q.recipient, t.recipient)) {
      continue;
    }
    const std::string& answer = q.type == QuestionType::kWhoGave     ? t.agent
                                : q.type == QuestionType::kWhatGiven ? t.theme
                                                                     : t.recipient;
    if (!answer.empty()) return answer;
  }
  Indeterminate("no matching transfer");
}

}  // namespace

std::string CountWord(int n) {
  static const char* kWords[] = {"none", "one", "two",   "three", "four", "five",
                                 "six",  "seven", "eight", "nine",  "ten"};
  if (n >= 0 && n <= 10) return kWords[n];
  return std::to_string(n);
}

std::string Answer(const QuestionKind& q, const AnswerContext& ctx) {
  switch (q.type) {
    case QuestionType::kWhereAgent:
      return Where(ctx, q.entity);
    case QuestionType::kWhereObject:
      return Where(ctx, q.object);
    case QuestionType::kWhereObjectBefore:
      return WhereBefore(ctx, q.object, q.place);
    case QuestionType::kWhoGave:
    case QuestionType::kWhatGiven:
    case QuestionType::kWhoReceived:
      return Given(ctx, q);
    case QuestionType::kYesNoLocation:
      return HoldsAt(Values(*ctx.model, "loc_in", q.entity, ctx.time), ctx.time, q.place) ? "yes"
                                                                                          : "no";
    case QuestionType::kCountCarrying:
      return CountWord(static_cast<int>(Carried(ctx, q.entity).size()));
    case QuestionType::kListCarrying: {
      auto items = Carried(ctx, q.entity);
      return items.empty() ? "nothing" : Join(items, ",");
    }
  }
  Indeterminate("unknown question type");
}

}  // namespace narrate::qa
