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

#ifndef NARRATE_QA_ANSWER_H_
#define NARRATE_QA_ANSWER_H_

#include <string>

#include "narrate/qa/question.h"
#include "narrate/sem/ground.h"
#include "narrate/sem/model.h"

namespace narrate::qa {

struct AnswerContext {
  const sem::GroundProgram* ground = nullptr;
  const sem::Model* model = nullptr;
  const sem::NameMap* names = nullptr;  // instance id -> narrative name
  int time = 0;                         // question time point
};

// Answer text in bAbI gold format. Names compare case-insensitively; the
// answer keeps the narrative's spelling. Throws Error(kInput)
// "indeterminate: ..." when the model does not decide the question.
std::string Answer(const QuestionKind& question, const AnswerContext& context);

// "none", "one", ..., "ten", then digits.
std::string CountWord(int n);

}  // namespace narrate::qa

#endif  // NARRATE_QA_ANSWER_H_
