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
#include "narrate/kb/library.h"
#include "narrate/sem/ground.h"
#include "narrate/sem/model.h"
#include "narrate/sem/project.h"
#include "support/fixtures.h"

namespace narrate::sem {
namespace {

class ModelTest : public ::testing::Test {
 protected:
  ModelTest() {
    alm::Program p = kb::ResolveImports(
        *alm::ParseProgram(testing::kJsGeneratedProgram).value, kb::BuiltinLibrary());
    g_ = Ground(p);
    t_ = Project(g_, p);
  }

  GroundProgram g_;
  Trajectory t_;
  NameMap names_ = {{"r1", "John"}, {"r2", "hallway"}, {"r3", "Sandra"}};
};

std::vector<std::string> Strings(const std::vector<ModelAtom>& atoms) {
  std::vector<std::string> out;
  for (const auto& a : atoms) out.push_back(a.ToString());
  return out;
}

TEST_F(ModelTest, NamesReplaceReferents) {
  const Model m = ExtractModel(g_, t_, names_);
  EXPECT_EQ(Strings(m.atoms),
            (std::vector<std::string>{"happened(e1,0)", "happened(e2,1)",
                                      "loc_in(John,hallway,1)", "loc_in(John,hallway,2)",
                                      "loc_in(Sandra,hallway,2)"}));
  EXPECT_TRUE(m.Contains("loc_in(John,hallway,1)"));
  EXPECT_FALSE(m.Contains("loc_in(Sandra,hallway,1)"));
  EXPECT_EQ(m.ToText().substr(0, 16), "happened(e1,0).\n");
}

TEST_F(ModelTest, MissingNameIsAnError) {
  names_.erase("r2");
  try {
    ExtractModel(g_, t_, names_);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
    EXPECT_STREQ(e.what(), "unnamed referent r2");
  }
}

TEST_F(ModelTest, EmptyTrajectoryHasOnlyHappenedAtoms) {
  const Trajectory quiet = Project(g_, {{"e1", 0, {}}}, 1);
  EXPECT_EQ(Strings(ExtractModel(g_, quiet, names_).atoms),
            (std::vector<std::string>{"happened(e1,0)"}));
}

TEST_F(ModelTest, QueryByPattern) {
  const Model m = ExtractModel(g_, t_, names_);
  EXPECT_EQ(Strings(Query(m, ParsePattern("loc_in(_,hallway,2)"))),
            (std::vector<std::string>{"loc_in(John,hallway,2)", "loc_in(Sandra,hallway,2)"}));
  EXPECT_TRUE(Query(m, ParsePattern("loc_in(John,hallway,0)")).empty());
  EXPECT_EQ(Query(m, ParsePattern("loc_in(John,_)")).size(), 2u);
  EXPECT_EQ(Query(m, ParsePattern("_(_,_)")).size(), 3u);
  EXPECT_EQ(Query(m, ParsePattern("happened(_,_)")).size(), 2u);
}

TEST(PatternTest, RejectsMalformedText) {
  EXPECT_THROW(ParsePattern("loc_in(John"), Error);
  EXPECT_THROW(ParsePattern("(a,b)"), Error);
}

TEST(IdentityNamesTest, NamesEveryInstance) {
  const alm::Program p = *alm::ParseProgram(testing::kJsProgram).value;
  const GroundProgram g = Ground(p);
  const NameMap names = IdentityNames(g.symbols);
  EXPECT_EQ(names.at("john"), "john");
  EXPECT_TRUE(ExtractModel(g, Project(g, p), names).Contains("loc_in(sandra,hallway,2)"));
}

}  // namespace
}  // namespace narrate::sem
