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

#include <gtest/gtest.h>

#include "narrate/alm/parser.h"
#include "narrate/sem/ground.h"
#include "narrate/sem/project.h"
#include "support/fixtures.h"

namespace narrate::sem {
namespace {

constexpr char kTwoSpots[] = R"(system description d
  theory t
    module m
      sort declarations
        things, spots :: universe
        go :: actions
          attributes
            who : things -> booleans
            dest : spots -> booleans
        flip :: actions
          attributes
            who : things -> booleans
            dest : spots -> booleans
      function declarations
        fluents
          basic
            at : things * spots -> booleans
      axioms
        dynamic causal laws
          occurs(X) causes at(A,D) if instance(X,go), who(X,A), dest(X,D).
          occurs(X) causes at(A,D) if instance(X,flip), who(X,A), dest(X,D).
          occurs(X) causes -at(A,D) if instance(X,flip), who(X,A), dest(X,D).
        state constraints
          -at(A,P2) if at(A,P1), P1 != P2.
        executability conditions
          impossible occurs(X) if instance(X,go), who(X,A), dest(X,D), at(A,D).
  structure s
    instances
      a in things
      p1, p2 in spots
      g1 in go
        who(a) = true
        dest(p1) = true
      g2 in go
        who(a) = true
        dest(p2) = true
      f1 in flip
        who(a) = true
        dest(p1) = true
)";

class ProjectTest : public ::testing::Test {
 protected:
  ProjectTest() : g_(Ground(*alm::ParseProgram(kTwoSpots).value)) {}

  int Lit(const std::string& text) const {
    const bool neg = text[0] == '-';
    const std::string body = neg ? text.substr(1) : text;
    const auto open = body.find('(');
    const auto comma = body.find(',');
    const std::string f = body.substr(0, open);
    const std::string x = body.substr(open + 1, comma - open - 1);
    const std::string y = body.substr(comma + 1, body.size() - comma - 2);
    const int atom = *g_.FindAtom(f, {*g_.symbols.Find(x), *g_.symbols.Find(y)});
    return neg ? NegativeLiteral(atom) : PositiveLiteral(atom);
  }

  std::vector<std::string> Texts(const std::vector<int>& lits) const {
    std::vector<std::string> out;
    for (int l : lits) out.push_back(g_.LiteralText(l));
    std::sort(out.begin(), out.end());
    return out;
  }

  Trajectory Run(std::vector<alm::Occurrence> history, int steps, bool strict = false) const {
    return Project(g_, history, steps, {strict});
  }

  GroundProgram g_;
};

TEST_F(ProjectTest, ClosureAddsFunctionalConsequence) {
  EXPECT_EQ(Texts(Closure(g_, {Lit("at(a,p1)")})),
            (std::vector<std::string>{"-at(a,p2)", "at(a,p1)"}));
  EXPECT_TRUE(Closure(g_, {}).empty());
}

TEST_F(ProjectTest, ClosureRejectsTwoPlaces) {
  try {
    Closure(g_, {Lit("at(a,p1)"), Lit("at(a,p2)")});
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInconsistency);
    EXPECT_NE(std::string(e.what()).find("at(a,p"), std::string::npos);
  }
}

TEST_F(ProjectTest, ClosureIsMonotoneAndIdempotent) {
  const auto once = Closure(g_, {Lit("at(a,p2)")});
  EXPECT_EQ(Closure(g_, once), once);
  EXPECT_NE(std::find(once.begin(), once.end(), Lit("at(a,p2)")), once.end());
}

TEST_F(ProjectTest, EffectsOverrideInertia) {
  const Trajectory t = Run({{"g1", 0, {}}, {"g2", 1, {}}}, 3);
  ASSERT_EQ(t.size(), 3);
  EXPECT_TRUE(t.states[0].Literals().empty());
  EXPECT_EQ(Texts(t.states[1].Literals()), (std::vector<std::string>{"-at(a,p2)", "at(a,p1)"}));
  EXPECT_EQ(Texts(t.states[2].Literals()), (std::vector<std::string>{"-at(a,p1)", "at(a,p2)"}));
  EXPECT_TRUE(t.diagnostics.empty());
  EXPECT_EQ(t.occurrences.size(), 2u);
}

TEST_F(ProjectTest, EmptyHistoryKeepsStateZero) {
  const Trajectory t = Run({}, 4);
  ASSERT_EQ(t.size(), 4);
  for (const auto& s : t.states) EXPECT_EQ(s, t.states[0]);
}

TEST_F(ProjectTest, ImpossibleEventWarnsOrFails) {
  const Trajectory t = Run({{"g1", 0, {}}, {"g1", 1, {}}}, 3);
  ASSERT_EQ(t.diagnostics.size(), 1u);
  EXPECT_EQ(t.diagnostics[0].severity, Severity::kWarning);
  EXPECT_EQ(t.states[2], t.states[1]);
  try {
    Run({{"g1", 0, {}}, {"g1", 1, {}}}, 3, true);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInconsistency);
    EXPECT_NE(std::string(e.what()).find("g1"), std::string::npos);
  }
}

TEST_F(ProjectTest, ConflictingEffectsAreInconsistent) {
  try {
    Run({{"f1", 0, {}}}, 2);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInconsistency);
    EXPECT_NE(std::string(e.what()).find("at(a,p1)"), std::string::npos);
  }
}

TEST_F(ProjectTest, BadHistoryIsAnInputError) {
  for (const auto& history : {std::vector<alm::Occurrence>{{"nope", 0, {}}},
                              std::vector<alm::Occurrence>{{"g1", 5, {}}},
                              std::vector<alm::Occurrence>{{"a", 0, {}}}}) {
    try {
      Run(history, 3);
      FAIL();
    } catch (const Error& e) {
      EXPECT_EQ(e.kind(), ErrorKind::kInput);
    }
  }
}

TEST(JsProjectionTest, PositiveAtomsAreExactlyThePublishedOnes) {
  const alm::Program p = *alm::ParseProgram(testing::kJsProgram).value;
  const GroundProgram g = Ground(p);
  const Trajectory t = Project(g, p);
  ASSERT_EQ(t.size(), 3);
  std::vector<std::string> positives;
  for (int time = 0; time < t.size(); ++time) {
    for (int l : t.states[time].Literals()) {
      if (!IsNegative(l)) positives.push_back(g.LiteralText(l) + "@" + std::to_string(time));
    }
  }
  EXPECT_EQ(positives, (std::vector<std::string>{"loc_in(john,hallway)@1",
                                                 "loc_in(john,hallway)@2",
                                                 "loc_in(sandra,hallway)@2"}));
}

}  // namespace
}  // namespace narrate::sem
