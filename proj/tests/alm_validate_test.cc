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
#include "narrate/alm/validate.h"
#include "narrate/common/text.h"
#include "support/fixtures.h"

namespace narrate::alm {
namespace {

Program Js() { return *ParseProgram(testing::kJsProgram).value; }

std::string Messages(const Diagnostics& d) { return FormatDiagnostics(d); }

TEST(ValidateTest, JsProgramIsClean) {
  EXPECT_TRUE(Validate(Js()).empty()) << Messages(Validate(Js()));
}

TEST(ValidateTest, UndeclaredSort) {
  Program p = Js();
  p.theory.modules[0].fluents[0].arg_sorts[1] = "places";
  EXPECT_NE(Messages(Validate(p)).find("undeclared sort places"), std::string::npos);
}

TEST(ValidateTest, ArityMismatch) {
  Program p = Js();
  p.theory.modules[0].causal_laws[0].head.args.pop_back();
  EXPECT_NE(Messages(Validate(p)).find("arity mismatch for loc_in"), std::string::npos);
}

TEST(ValidateTest, UnboundHeadVariable) {
  Program p = Js();
  p.theory.modules[0].causal_laws[0].head.args[1] = Term::Variable("Q");
  EXPECT_NE(Messages(Validate(p)).find("unbound variable in head: Q"), std::string::npos);
}

TEST(ValidateTest, SortCycle) {
  Program p = Js();
  p.theory.modules[0].sorts[0].parents = {"move"};
  p.theory.modules[0].sorts[1].parents = {"points"};
  EXPECT_NE(Messages(Validate(p)).find("sort hierarchy cycle"), std::string::npos);
}

TEST(ValidateTest, HistoryEventsMustBeActionsWithinRange) {
  Program p = Js();
  p.history.push_back({"john", 1, {}});
  p.history.push_back({"asin", 3, {}});
  p.history.push_back({"nobody", 0, {}});
  const std::string m = Messages(Validate(p));
  EXPECT_NE(m.find("john is not an action"), std::string::npos);
  EXPECT_NE(m.find("time 3 of asin is out of range"), std::string::npos);
  EXPECT_NE(m.find("undeclared event nobody"), std::string::npos);
}

TEST(ValidateTest, ContradictoryAssignment) {
  Program p = Js();
  p.structure.instances[2].assignments.push_back({"actor", {"john"}, false, {}});
  EXPECT_NE(Messages(Validate(p)).find("contradictory assignment of actor"), std::string::npos);
}

TEST(ValidateTest, AttributeMustBelongToInstanceSort) {
  Program p = Js();
  p.structure.instances[0].assignments.push_back({"actor", {"john"}, true, {}});
  EXPECT_NE(Messages(Validate(p)).find("does not belong to sort agents"), std::string::npos);
}

TEST(ValidateTest, ExecutabilityNeedsTypedAction) {
  Program p = Js();
  p.theory.modules[0].executability[0].body.erase(
      p.theory.modules[0].executability[0].body.begin());
  EXPECT_NE(Messages(Validate(p)).find("needs instance(X, sort)"), std::string::npos);
}

TEST(ValidateTest, ProjectionNeedsMaxSteps) {
  Program p = Js();
  p.max_steps.reset();
  EXPECT_NE(Messages(Validate(p)).find("requires max steps"), std::string::npos);
}

TEST(ValidateTest, EveryProblemIsReported) {
  Program p = Js();
  p.theory.modules[0].fluents[0].arg_sorts[1] = "places";
  p.history.push_back({"nobody", 0, {}});
  EXPECT_GE(Validate(p).size(), 2u);
}

}  // namespace
}  // namespace narrate::alm
