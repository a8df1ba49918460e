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

#include "narrate/harness/dataset.h"

#include <algorithm>
#include <array>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>

#include "narrate/common/diagnostic.h"
#include "narrate/common/text.h"

namespace narrate::harness {
namespace {

constexpr int kQuestionsPerStory = 5;
constexpr int kMaxSentences = 60;

class Rng {
 public:
  explicit Rng(uint64_t seed) : gen_(seed) {}
  size_t Below(size_t n) { return static_cast<size_t>(gen_() % n); }
  bool Chance(double p) { return static_cast<double>(gen_() >> 11) * 0x1.0p-53 < p; }
  template <typename T>
  const T& Pick(const std::vector<T>& v) { return v[Below(v.size())]; }

 private:
  std::mt19937_64 gen_;
};

const std::vector<std::string> kMotionVerbs = {"moved", "went", "journeyed", "travelled"};
const std::vector<std::string> kGetVerbs = {"got", "grabbed", "picked up", "took"};
const std::vector<std::string> kDropVerbs = {"dropped", "discarded", "put down", "left"};
const std::vector<std::string> kGiveVerbs = {"gave", "handed", "passed"};
const std::vector<std::string> kPlaces = {"bathroom", "bedroom", "kitchen",
                                          "garden",   "office",  "hallway"};
const std::vector<std::string> kObjects = {"football", "apple", "milk"};

struct Give {
  std::string giver, object, recipient;
};

// Ground truth for one story. Locations are only recorded once stated.
struct World {
  std::map<std::string, std::string> person_at;
  std::map<std::string, std::string> holder;  // object -> person
  std::map<std::string, std::string> object_at;
  std::map<std::string, std::vector<std::string>> carrying;  // in acquisition order
  std::map<std::string, int> carried_moves;
  std::vector<Give> gives;
  // Object locations after each event; entry 0 is the empty initial state.
  std::vector<std::map<std::string, std::string>> history{{}};
  std::map<std::string, int> last_line;

  void Snapshot() { history.push_back(object_at); }

  void Move(const std::string& p, const std::string& dest) {
    person_at[p] = dest;
    for (const auto& o : carrying[p]) {
      object_at[o] = dest;
      ++carried_moves[o];
    }
    Snapshot();
  }
  void Get(const std::string& p, const std::string& o) {
    holder[o] = p;
    carrying[p].push_back(o);
    object_at[o] = person_at.at(p);
    Snapshot();
  }
  void Drop(const std::string& p, const std::string& o) {
    holder.erase(o);
    auto& c = carrying[p];
    c.erase(std::find(c.begin(), c.end(), o));
    Snapshot();
  }
  void Hand(const std::string& p, const std::string& o, const std::string& r) {
    holder[o] = r;
    auto& c = carrying[p];
    c.erase(std::find(c.begin(), c.end(), o));
    carrying[r].push_back(o);
    gives.push_back({p, o, r});
    Snapshot();
  }
};

struct Candidate {
  std::string text;
  std::string answer;
  std::vector<std::string> about;  // entities whose last mention supports it
};

class StoryWriter {
 public:
  StoryWriter(int task, Rng& rng, const std::map<std::string, std::string>& swaps,
              double swap)
      : task_(task), rng_(rng), swaps_(swaps), swap_(swap) {
    people_ = task == 5 ? std::vector<std::string>{"Fred", "Bill", "Jeff", "Mary"}
                        : std::vector<std::string>{"Mary", "John", "Sandra", "Daniel"};
    places_ = kPlaces;
    if (task == 5) places_.resize(3);
  }

  // Returns nullopt when the story ran out of sentences before any question.
  std::optional<babi::Story> Write(int max_questions) {
    babi::Story story;
    int since_question = 0;
    while (static_cast<int>(story.questions.size()) < max_questions &&
           static_cast<int>(story.sentences.size()) < kMaxSentences) {
      story.sentences.push_back({++line_, Act()});
      ++since_question;
      if (since_question < 2 || (since_question < 4 && !rng_.Chance(0.4))) continue;
      auto candidates = Questions();
      if (candidates.empty()) continue;
      const Candidate& c = rng_.Pick(candidates);
      babi::Question q;
      q.line = ++line_;
      q.text = c.text;
      q.answer = c.answer;
      std::set<int> support;
      for (const auto& e : c.about) {
        if (world_.last_line.count(e)) support.insert(world_.last_line[e]);
      }
      q.supports.assign(support.begin(), support.end());
      q.position = static_cast<int>(story.sentences.size());
      story.questions.push_back(std::move(q));
      since_question = 0;
    }
    if (story.questions.empty()) return std::nullopt;
    return story;
  }

 private:
  std::string Verb(const std::vector<std::string>& pool) {
    std::string v = rng_.Pick(pool);
    auto it = swaps_.find(v);
    if (it != swaps_.end() && swap_ > 0 && rng_.Chance(swap_)) return it->second;
    return v;
  }

  bool Known(const std::string& p) const { return world_.person_at.count(p) > 0; }

  void Mention(std::initializer_list<std::string> names) {
    for (const auto& n : names) world_.last_line[n] = line_;
  }

  std::string Act() {
    struct Option {
      int weight;
      std::function<std::string()> run;
    };
    std::vector<Option> options;
    const bool objects = task_ != 1 && task_ != 6;
    options.push_back({4, [&] { return DoMove(); }});
    if (objects) {
      std::vector<std::pair<std::string, std::string>> gets, drops, gives_from;
      for (const auto& p : people_) {
        if (!Known(p)) continue;
        for (const auto& o : kObjects) {
          if (world_.holder.count(o)) continue;
          auto at = world_.object_at.find(o);
          if (at == world_.object_at.end() || at->second == world_.person_at[p]) {
            gets.emplace_back(p, o);
          }
        }
        for (const auto& o : world_.carrying[p]) drops.emplace_back(p, o);
      }
      if (!gets.empty()) {
        options.push_back({3, [this, gets] {
                             auto [p, o] = rng_.Pick(gets);
                             world_.Get(p, o);
                             Mention({p, o});
                             bool there = (task_ == 2 || task_ == 3) && rng_.Chance(0.3);
                             return p + " " + Verb(kGetVerbs) + " the " + o +
                                    (there ? " there." : ".");
                           }});
      }
      if (!drops.empty()) {
        options.push_back({task_ == 5 ? 1 : 2, [this, drops] {
                             auto [p, o] = rng_.Pick(drops);
                             world_.Drop(p, o);
                             Mention({p, o});
                             return p + " " + Verb(kDropVerbs) + " the " + o + ".";
                           }});
      }
      if (task_ == 5 || task_ == 7 || task_ == 8) {
        std::vector<std::array<std::string, 3>> hands;
        for (const auto& [p, o] : drops) {
          for (const auto& r : people_) {
            if (r != p && Known(r) && world_.person_at[r] == world_.person_at[p]) {
              hands.push_back({p, o, r});
            }
          }
        }
        if (!hands.empty()) {
          options.push_back({task_ == 5 ? 6 : 2, [this, hands] {
                               auto [p, o, r] = rng_.Pick(hands);
                               world_.Hand(p, o, r);
                               Mention({p, o, r});
                               return p + " " + Verb(kGiveVerbs) + " the " + o + " to " + r + ".";
                             }});
        }
      }
    }
    int total = 0;
    for (const auto& o : options) total += o.weight;
    int roll = static_cast<int>(rng_.Below(total));
    for (const auto& o : options) {
      if (roll < o.weight) return o.run();
      roll -= o.weight;
    }
    return options.front().run();
  }

  std::string DoMove() {
    const std::string& p = rng_.Pick(people_);
    std::vector<std::string> dests;
    for (const auto& d : places_) {
      if (!Known(p) || world_.person_at[p] != d) dests.push_back(d);
    }
    // In task 5 people often join someone so that objects can change hands.
    std::string dest = rng_.Pick(dests);
    if (task_ == 5 && rng_.Chance(0.5)) {
      std::vector<std::string> company;
      for (const auto& q : people_) {
        if (q != p && Known(q) && (!Known(p) || world_.person_at[q] != world_.person_at.at(p))) {
          company.push_back(world_.person_at[q]);
        }
      }
      if (!company.empty()) dest = rng_.Pick(company);
    }
    world_.Move(p, dest);
    Mention({p});
    if (rng_.Chance(0.1)) {
      std::string went = Verb({"went"});
      return p + " " + went + " back to the " + dest + ".";
    }
    return p + " " + Verb(kMotionVerbs) + " to the " + dest + ".";
  }

  std::vector<Candidate> Questions() {
    std::vector<Candidate> out;
    switch (task_) {
      case 1:
        for (const auto& p : people_) {
          if (Known(p)) out.push_back({"Where is " + p + "?", world_.person_at[p], {p}});
        }
        break;
      case 2:
        for (const auto& o : kObjects) {
          if (world_.carried_moves[o] < 1 || !world_.object_at.count(o)) continue;
          std::vector<std::string> about{o};
          if (world_.holder.count(o)) about.push_back(world_.holder[o]);
          out.push_back({"Where is the " + o + "?", world_.object_at[o], about});
        }
        break;
      case 3:
        for (const auto& o : kObjects) {
          if (world_.carried_moves[o] < 2 || !world_.object_at.count(o)) continue;
          if (auto before = LocationBefore(o, world_.object_at[o])) {
            out.push_back({"Where was the " + o + " before the " + world_.object_at[o] + "?",
                           *before,
                           {o}});
          }
        }
        break;
      case 5:
        if (!world_.gives.empty()) out.push_back(GiveQuestion());
        break;
      case 6:
        for (const auto& p : people_) {
          if (!Known(p)) continue;
          const std::string& place =
              rng_.Chance(0.5) ? world_.person_at[p] : rng_.Pick(places_);
          out.push_back({"Is " + p + " in the " + place + "?",
                         place == world_.person_at[p] ? "yes" : "no",
                         {p}});
        }
        break;
      case 7:
        for (const auto& p : people_) {
          if (!Known(p)) continue;
          static const char* kWords[] = {"none", "one", "two", "three"};
          out.push_back({"How many objects is " + p + " carrying?",
                         kWords[world_.carrying[p].size()],
                         {p}});
        }
        break;
      case 8:
        for (const auto& p : people_) {
          if (!Known(p)) continue;
          const auto& c = world_.carrying[p];
          out.push_back({"What is " + p + " carrying?", c.empty() ? "nothing" : Join(c, ","), {p}});
        }
        break;
    }
    return out;
  }

  // Where the object was just before its latest arrival at `place`.
  std::optional<std::string> LocationBefore(const std::string& o, const std::string& place) {
    const auto& h = world_.history;
    auto at = [&](size_t t) -> std::optional<std::string> {
      auto it = h[t].find(o);
      if (it == h[t].end()) return std::nullopt;
      return it->second;
    };
    size_t t = h.size() - 1;
    while (t > 0 && at(t - 1) == place) --t;
    if (t == 0) return std::nullopt;
    return at(t - 1);
  }

  Candidate GiveQuestion() {
    const Give& g = world_.gives[world_.gives.size() - 1 - rng_.Below(std::min<size_t>(2, world_.gives.size()))];
    // The most recent give matching the question's slots decides the answer.
    auto latest = [&](auto pred) -> const Give& {
      for (auto it = world_.gives.rbegin(); it != world_.gives.rend(); ++it) {
        if (pred(*it)) return *it;
      }
      return g;
    };
    switch (rng_.Below(5)) {
      case 0: {
        const Give& m = latest([&](const Give& x) { return x.object == g.object; });
        return {"Who gave the " + g.object + "?", m.giver, {m.giver, m.object}};
      }
      case 1: {
        const Give& m = latest([&](const Give& x) {
          return x.object == g.object && x.recipient == g.recipient;
        });
        return {"Who gave the " + g.object + " to " + g.recipient + "?", m.giver,
                {m.giver, m.recipient}};
      }
      case 2: {
        const Give& m = latest([&](const Give& x) { return x.object == g.object; });
        return {"Who received the " + g.object + "?", m.recipient, {m.recipient, m.object}};
      }
      case 3: {
        const Give& m = latest([&](const Give& x) {
          return x.giver == g.giver && x.recipient == g.recipient;
        });
        return {"What did " + g.giver + " give to " + g.recipient + "?", m.object,
                {m.giver, m.recipient}};
      }
      default: {
        const Give& m = latest([&](const Give& x) {
          return x.giver == g.giver && x.object == g.object;
        });
        return {"Who did " + g.giver + " give the " + g.object + " to?", m.recipient,
                {m.giver, m.object}};
      }
    }
  }

  int task_;
  Rng& rng_;
  const std::map<std::string, std::string>& swaps_;
  double swap_;
  std::vector<std::string> people_;
  std::vector<std::string> places_;
  World world_;
  int line_ = 0;
};

}  // namespace

const std::vector<int>& SupportedTasks() {
  static const std::vector<int> tasks = {1, 2, 3, 5, 6, 7, 8};
  return tasks;
}

const std::vector<std::pair<std::string, std::string>>& SynonymSwaps() {
  static const std::vector<std::pair<std::string, std::string>> swaps = {
      {"travelled", "sprinted"}, {"journeyed", "strolled"}, {"moved", "hurried"},
      {"went", "ran"},           {"grabbed", "seized"},     {"got", "snatched"},
      {"took", "collected"},     {"picked up", "lifted"},   {"dropped", "tossed"},
      {"discarded", "abandoned"}, {"left", "ditched"},      {"gave", "delivered"},
      {"handed", "presented"},
  };
  return swaps;
}

std::string DatasetFileName(int task) { return "qa" + std::to_string(task) + "_test.txt"; }

std::vector<babi::Story> GenerateDataset(const DatasetSpec& spec, const kb::Lexicon& lexicon) {
  const auto& tasks = SupportedTasks();
  if (std::find(tasks.begin(), tasks.end(), spec.task) == tasks.end()) {
    throw Error(ErrorKind::kInput, "unsupported task " + std::to_string(spec.task));
  }
  if (spec.synonym_swap < 0 || spec.synonym_swap > 1) {
    throw Error(ErrorKind::kInput, "synonym swap must lie in [0, 1]");
  }
  std::map<std::string, std::string> swaps;
  for (const auto& [base, syn] : SynonymSwaps()) {
    if (spec.synonym_swap > 0) {
      const kb::Frame* b = lexicon.Find(base);
      const kb::Frame* s = lexicon.Find(syn);
      if (!s || (b && b->class_id != s->class_id)) {
        throw Error(ErrorKind::kInput, "synonym '" + syn + "' for '" + base +
                                           "' is missing from the lexicon");
      }
    }
    swaps[base] = syn;
  }
  Rng rng(spec.seed * 1000 + static_cast<uint64_t>(spec.task));
  std::vector<babi::Story> stories;
  int asked = 0;
  while (asked < spec.questions) {
    StoryWriter writer(spec.task, rng, swaps, spec.synonym_swap);
    auto story = writer.Write(std::min(kQuestionsPerStory, spec.questions - asked));
    if (!story) continue;
    asked += static_cast<int>(story->questions.size());
    stories.push_back(std::move(*story));
  }
  return stories;
}

}  // namespace narrate::harness
