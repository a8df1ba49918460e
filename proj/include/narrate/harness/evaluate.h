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

#ifndef NARRATE_HARNESS_EVALUATE_H_
#define NARRATE_HARNESS_EVALUATE_H_

#include <optional>
#include <string>
#include <vector>

#include "narrate/babi/story.h"
#include "narrate/common/diagnostic.h"
#include "narrate/harness/pipeline.h"

namespace narrate::harness {

struct QuestionResult {
  int story = 0;
  int line = 0;
  std::string question;
  std::string gold;
  std::string predicted;
  std::string error;  // empty when the pipeline produced an answer
  std::optional<ErrorKind> error_kind;
  bool correct = false;
};

struct TaskReport {
  int task = 0;
  int scored = 0;
  int correct = 0;
  int errors = 0;
  std::vector<QuestionResult> results;

  double accuracy() const { return scored == 0 ? 0.0 : 100.0 * correct / scored; }
};

// Answers every question from the sentences before it, in parallel over
// stories. Failed questions count as incorrect. `threads` <= 0 uses the
// hardware concurrency.
TaskReport EvaluateStories(int task, const std::vector<babi::Story>& stories,
                           const PipelineOptions& options, int threads = 0);

// Files for `task` in `dir`: qa<N>_test.txt or any qa<N>_*test*.txt, sorted.
std::vector<std::string> FindTaskFiles(const std::string& dir, int task);

// Published accuracy of the original system, for the report's reference
// column.
std::optional<double> ReferenceAccuracy(int task);

// Fixed-width table, one row per task.
std::string RenderReport(const std::vector<TaskReport>& reports);

// One JSON object per line: id (the task), scored, correct, errors, accuracy.
std::string RenderJsonLines(const std::vector<TaskReport>& reports);

// Accuracy with one decimal.
std::string FormatAccuracy(double accuracy);

}  // namespace narrate::harness

#endif  // NARRATE_HARNESS_EVALUATE_H_
