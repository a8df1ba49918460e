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

#ifndef NARRATE_ALM_RENDER_H_
#define NARRATE_ALM_RENDER_H_

#include <string>

#include "narrate/alm/ast.h"

namespace narrate::alm {

// Canonical concrete syntax. ParseProgram(RenderProgram(p)) == p for every
// valid program.
std::string RenderProgram(const Program& program);
std::string RenderTheory(const Theory& theory);

std::string RenderTerm(const Term& term);
std::string RenderLiteral(const Literal& literal);
std::string RenderCondition(const Condition& condition);
std::string RenderAxiom(const Axiom& axiom);

}  // namespace narrate::alm

#endif  // NARRATE_ALM_RENDER_H_
