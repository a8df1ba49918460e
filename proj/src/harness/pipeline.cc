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

#include "narrate/harness/pipeline.h"

#include "narrate/alm/validate.h"
#include "narrate/babi/reader.h"
#include "narrate/gen/generate.h"
#include "narrate/qa/answer.h"

namespace narrate::harness {
namespace {

template <typename Fn>
auto Stage(const char* name, Fn fn) -> decltype(fn()) {
  try {
    return fn();
  } catch (const Error& e) {
    throw Error(e.kind(), std::string(name) + ": " + e.what());
  }
}

const kb::Lexicon& LexiconOf(const PipelineOptions& options) {
  static const kb::Lexicon* builtin = new kb::Lexicon(kb::BuiltinLexicon());
  return options.lexicon ? *options.lexicon : *builtin;
}

void Solve(PipelineResult& r, const PipelineOptions& options) {
  r.flat = Stage("resolve", [&] { return kb::ResolveImports(r.program, *options.library); });
  Stage("validate", [&] {
    auto diags = alm::Validate(r.flat);
    if (HasErrors(diags)) throw Error(ErrorKind::kInput, FormatDiagnostics(diags));
    return 0;
  });
  r.ground = Stage("ground", [&] { return sem::Ground(r.flat); });
  sem::ProjectOptions popts;
  popts.strict_executability = options.strict_executability;
  r.trajectory = Stage("project", [&] { return sem::Project(r.ground, r.flat, popts); });
  r.model = Stage("model", [&] { return sem::ExtractModel(r.ground, r.trajectory, r.names); });
}

}  // namespace

PipelineResult RunSentences(const std::vector<std::string>& sentences,
                            const PipelineOptions& options) {
  drs::Drs d = Stage("reader", [&] { return babi::BuildDrs(sentences, LexiconOf(options)); });
  return RunDrs(d, options);
}

PipelineResult RunDrs(const drs::Drs& drs, const PipelineOptions& options) {
  PipelineResult r;
  r.drs = drs;
  gen::GenConfig cfg;
  cfg.library = options.library;
  cfg.name = options.name;
  r.program = Stage("drs2alm", [&] { return gen::GenerateProgram(drs, cfg); });
  r.names.insert(drs.entities.begin(), drs.entities.end());
  Solve(r, options);
  return r;
}

PipelineResult RunProgram(const alm::Program& program, const PipelineOptions& options) {
  PipelineResult r;
  r.program = program;
  for (const auto& decl : program.structure.instances) {
    for (const auto& n : decl.names) r.names[n] = n;
  }
  Solve(r, options);
  return r;
}

std::string AnswerQuestion(const PipelineResult& result, std::string_view question) {
  return Stage("qa", [&] {
    qa::QuestionKind kind = qa::ClassifyQuestion(question);
    qa::AnswerContext ctx{&result.ground, &result.model, &result.names, result.final_time()};
    return qa::Answer(kind, ctx);
  });
}

}  // namespace narrate::harness
