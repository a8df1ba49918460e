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
#include "narrate/alm/render.h"
#include "narrate/alm/validate.h"
#include "narrate/drs/drs.h"
#include "narrate/gen/generate.h"
#include "narrate/kb/library.h"
#include "support/fixtures.h"

namespace narrate::gen {
namespace {

drs::Drs Js() { return *drs::ParseDrs(testing::kJsDrs).value; }

TEST(GenerateTest, JsDrsGivesExpectedProgram) {
  GenConfig cfg;
  cfg.name = "js_discourse";
  const alm::Program p = GenerateProgram(Js(), cfg);
  EXPECT_EQ(p, *alm::ParseProgram(testing::kJsGeneratedProgram).value)
      << alm::RenderProgram(p);
}

TEST(GenerateTest, OutputValidatesAfterImports) {
  const alm::Program flat = kb::ResolveImports(GenerateProgram(Js()), kb::BuiltinLibrary());
  EXPECT_TRUE(alm::Validate(flat).empty()) << FormatDiagnostics(alm::Validate(flat));
}

TEST(GenerateTest, ImportsEachClassOnceInTimeOrder) {
  drs::Drs d = Js();
  d.entities["r4"] = "football";
  d.events["e3"] = {"get-13.5.1", 2, {{"Agent", "r1"}, {"Theme", "r4"}}};
  d.events["e4"] = {"run-51.3.2-1", 3, {{"Theme", "r1"}, {"Destination", "r2"}}};
  const alm::Program p = GenerateProgram(d);
  ASSERT_EQ(p.theory.imports.size(), 2u);
  EXPECT_EQ(p.theory.imports[0].path.ToString(), "t_run_51_3_2.m_run_51_3_2_1");
  EXPECT_EQ(p.theory.imports[1].path.ToString(), "t_get_13_5.m_get_13_5_1");
  EXPECT_EQ(p.theory.imports[1].library, "VN_class_library");
  EXPECT_EQ(p.max_steps, 5);
  EXPECT_EQ(p.history.back().time, 3);
}

TEST(GenerateTest, TimesAreCompacted) {
  drs::Drs d = Js();
  d.events.at("e1").time = 4;
  d.events.at("e2").time = 9;
  const alm::Program p = GenerateProgram(d);
  EXPECT_EQ(p.history, (std::vector<alm::Occurrence>{{"e1", 0, {}}, {"e2", 1, {}}}));
}

TEST(GenerateTest, UnknownClassIsUnsupported) {
  drs::Drs d = Js();
  d.events.at("e2").class_id = "teleport-99";
  try {
    GenerateProgram(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupported);
    EXPECT_NE(std::string(e.what()).find("teleport-99"), std::string::npos);
  }
}

TEST(GenerateTest, RoleOutsideClassIsUnsupported) {
  drs::Drs d = Js();
  d.events.at("e1").args.emplace_back("Recipient", "r3");
  try {
    GenerateProgram(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kUnsupported);
    EXPECT_NE(std::string(e.what()).find("Recipient"), std::string::npos);
  }
}

TEST(GenerateTest, InvalidDrsIsAnInputError) {
  drs::Drs d = Js();
  d.events.at("e2").time = 0;
  try {
    GenerateProgram(d);
    FAIL();
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::kInput);
  }
}

TEST(EntitySortNameTest, Sanitizes) {
  EXPECT_EQ(EntitySortName("John", {}), "john");
  EXPECT_EQ(EntitySortName("the  living room", {}), "the_living_room");
  EXPECT_EQ(EntitySortName("O'Brien", {}), "obrien");
  EXPECT_EQ(EntitySortName("42nd street", {}), "s_42nd_street");
  EXPECT_THROW(EntitySortName("!!!", {}), Error);
}

TEST(EntitySortNameTest, AvoidsTakenAndReservedNames) {
  EXPECT_EQ(EntitySortName("place", {"place"}), "place_ent2");
  EXPECT_EQ(EntitySortName("place", {"place", "place_ent2"}), "place_ent3");
  EXPECT_EQ(EntitySortName("history", {}), "history_ent2");
}

TEST(GenerateTest, ClashingEntityNamesGetDistinctSorts) {
  drs::Drs d;
  d.entities = {{"r1", "Place"}, {"r2", "place"}, {"r3", "garden"}};
  d.events["e1"] = {"run-51.3.2-1", 0, {{"Theme", "r1"}, {"Destination", "r3"}}};
  d.events["e2"] = {"run-51.3.2-1", 1, {{"Theme", "r2"}, {"Destination", "r3"}}};
  const alm::Program p = GenerateProgram(d);
  const auto& sorts = p.theory.modules[0].sorts;
  ASSERT_EQ(sorts.size(), 3u);
  EXPECT_EQ(sorts[0].names[0], "place_ent2");
  EXPECT_EQ(sorts[1].names[0], "place_ent3");
  const alm::Program flat = kb::ResolveImports(p, kb::BuiltinLibrary());
  EXPECT_TRUE(alm::Validate(flat).empty()) << FormatDiagnostics(alm::Validate(flat));
}

}  // namespace
}  // namespace narrate::gen
