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

#ifndef NARRATE_HARNESS_PIPELINE_H_
#define NARRATE_HARNESS_PIPELINE_H_

#include <string>
#include <string_view>
#include <vector>

#include "narrate/alm/ast.h"
#include "narrate/drs/drs.h"
#include "narrate/kb/lexicon.h"
#include "narrate/kb/library.h"
#include "narrate/sem/ground.h"
#include "narrate/sem/model.h"
#include "narrate/sem/project.h"

namespace narrate::harness {

struct PipelineOptions {
  const kb::Library* library = &kb::BuiltinLibrary();
  // Builtin lexicon with synonyms when null.
  const kb::Lexicon* lexicon = nullptr;
  bool strict_executability = false;
  std::string name = "narrative";
};

// Every stage's output for one narrative.
struct PipelineResult {
  drs::Drs drs;
  alm::Program program;  // as generated or read, imports unresolved
  alm::Program flat;     // imports inlined
  sem::GroundProgram ground;
  sem::Trajectory trajectory;
  sem::Model model;
  sem::NameMap names;

  // Time point after the last event.
  int final_time() const { return trajectory.size() - 1; }
};

// Stage failures are rethrown with the stage name prefixed and the original
// error kind kept.
PipelineResult RunSentences(const std::vector<std::string>& sentences,
                            const PipelineOptions& options = {});
PipelineResult RunDrs(const drs::Drs& drs, const PipelineOptions& options = {});
// Instances are named by themselves.
PipelineResult RunProgram(const alm::Program& program, const PipelineOptions& options = {});

// Classifies and answers `question` at the final time point.
std::string AnswerQuestion(const PipelineResult& result, std::string_view question);

}  // namespace narrate::harness

#endif  // NARRATE_HARNESS_PIPELINE_H_
