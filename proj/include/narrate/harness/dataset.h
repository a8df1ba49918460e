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

#ifndef NARRATE_HARNESS_DATASET_H_
#define NARRATE_HARNESS_DATASET_H_

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "narrate/babi/story.h"
#include "narrate/kb/lexicon.h"

namespace narrate::harness {

// Tasks the generator and the QA layer cover.
const std::vector<int>& SupportedTasks();

// (base verb, synonym) pairs used for the bAbI+ variant.
const std::vector<std::pair<std::string, std::string>>& SynonymSwaps();

struct DatasetSpec {
  int task = 1;
  int questions = 100;
  uint64_t seed = 1;
  // Probability of replacing a verb that has a synonym.
  double synonym_swap = 0.0;
};

// Template stories for one task with gold answers from a world simulation of
// its own. Deterministic given `spec`. Only questions whose answer follows
// from the preceding sentences are asked. Throws Error(kInput) for an
// unsupported task, or when synonym_swap > 0 and `lexicon` lacks a synonym.
std::vector<babi::Story> GenerateDataset(const DatasetSpec& spec, const kb::Lexicon& lexicon);

// "qa<N>_test.txt".
std::string DatasetFileName(int task);

}  // namespace narrate::harness

#endif  // NARRATE_HARNESS_DATASET_H_
