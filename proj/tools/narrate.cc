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

// Command-line driver: run the pipeline on one input, generate datasets, and
// score datasets.

#include <cstdio>
#include <filesystem>
#include <iostream>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "narrate/alm/parser.h"
#include "narrate/alm/render.h"
#include "narrate/babi/story.h"
#include "narrate/common/diagnostic.h"
#include "narrate/common/text.h"
#include "narrate/drs/drs.h"
#include "narrate/harness/dataset.h"
#include "narrate/harness/evaluate.h"
#include "narrate/harness/pipeline.h"
#include "narrate/kb/lexicon.h"
#include "narrate/kb/library.h"

namespace {

using narrate::Error;
using narrate::ErrorKind;
namespace harness = narrate::harness;

int ExitCode(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInconsistency: return 2;
    case ErrorKind::kUnsupported: return 3;
    default: return 1;
  }
}

struct RunArgs {
  std::string input;
  std::string from = "babi";
  std::string emit_drs, emit_alm, emit_model;
  bool strict_exec = false;
  std::string lib, lexicon;
  std::string name = "narrative";
};

struct Resources {
  std::optional<narrate::kb::Library> library;
  std::optional<narrate::kb::Lexicon> lexicon;

  harness::PipelineOptions Options(bool strict) const {
    harness::PipelineOptions opts;
    if (library) opts.library = &*library;
    if (lexicon) opts.lexicon = &*lexicon;
    opts.strict_executability = strict;
    return opts;
  }
};

Resources LoadResources(const std::string& lib, const std::string& lexicon) {
  Resources r;
  if (!lib.empty()) r.library = narrate::kb::LoadLibrary(lib);
  if (!lexicon.empty()) {
    r.lexicon = narrate::kb::ParseLexicon(narrate::ReadFile(lexicon), lexicon);
  }
  return r;
}

// With several stories each artifact gets a ".<story>" suffix.
std::string EmitPath(const std::string& path, size_t index, size_t count) {
  return count <= 1 ? path : path + "." + std::to_string(index + 1);
}

void Emit(const RunArgs& args, const harness::PipelineResult& r, size_t index, size_t count,
          bool has_drs) {
  if (!args.emit_drs.empty() && has_drs) {
    narrate::WriteFile(EmitPath(args.emit_drs, index, count), narrate::drs::SerializeDrs(r.drs));
  }
  if (!args.emit_alm.empty()) {
    narrate::WriteFile(EmitPath(args.emit_alm, index, count),
                       narrate::alm::RenderProgram(r.program));
  }
  if (!args.emit_model.empty()) {
    narrate::WriteFile(EmitPath(args.emit_model, index, count), r.model.ToText());
  }
}

void PrintDiagnostics(const narrate::Diagnostics& diags) {
  if (!diags.empty()) std::cerr << narrate::FormatDiagnostics(diags);
}

// Plain narrative text: one sentence per '.', '!' or '?' terminator. Turned
// into a single bAbI story; questions must then carry no answer.
std::vector<narrate::babi::Story> PlainStory(const std::string& text) {
  narrate::babi::Story story;
  std::string current;
  int line = 0;
  auto flush = [&](char end) {
    std::string s(narrate::Trim(current));
    current.clear();
    if (s.empty()) return;
    ++line;
    if (end == '?') {
      narrate::babi::Question q;
      q.line = line;
      q.text = s + "?";
      q.position = static_cast<int>(story.sentences.size());
      story.questions.push_back(q);
    } else {
      story.sentences.push_back({line, s + "."});
    }
  };
  for (char c : text) {
    if (c == '.' || c == '!' || c == '?') {
      flush(c);
    } else {
      current += c == '\n' ? ' ' : c;
    }
  }
  flush('.');
  return {story};
}

bool LooksNumbered(const std::string& text) {
  for (const auto& line : narrate::Split(text, '\n')) {
    auto t = narrate::Trim(line);
    if (t.empty()) continue;
    return std::isdigit(static_cast<unsigned char>(t.front()));
  }
  return true;
}

int Run(const RunArgs& args) {
  Resources res = LoadResources(args.lib, args.lexicon);
  harness::PipelineOptions opts = res.Options(args.strict_exec);
  opts.name = args.name;
  const std::string text = narrate::ReadFile(args.input);

  if (args.from == "alm") {
    auto parsed = narrate::alm::ParseProgram(text);
    PrintDiagnostics(parsed.diagnostics);
    if (!parsed.ok()) throw Error(ErrorKind::kInput, "parse: " + args.input + " is not a program");
    auto r = harness::RunProgram(*parsed.value, opts);
    PrintDiagnostics(r.trajectory.diagnostics);
    Emit(args, r, 0, 1, false);
    if (args.emit_model.empty()) std::cout << r.model.ToText();
    return 0;
  }
  if (args.from == "drs") {
    auto parsed = narrate::drs::ParseDrs(text);
    PrintDiagnostics(parsed.diagnostics);
    if (!parsed.ok()) throw Error(ErrorKind::kInput, "drs: " + args.input + " is not a DRS");
    auto r = harness::RunDrs(*parsed.value, opts);
    PrintDiagnostics(r.trajectory.diagnostics);
    Emit(args, r, 0, 1, true);
    if (args.emit_model.empty() && args.emit_alm.empty() && args.emit_drs.empty()) {
      std::cout << r.model.ToText();
    }
    return 0;
  }

  const auto stories =
      LooksNumbered(text) ? narrate::babi::ParseBabi(text) : PlainStory(text);
  for (size_t i = 0; i < stories.size(); ++i) {
    const auto& story = stories[i];
    std::vector<std::string> all;
    for (const auto& s : story.sentences) all.push_back(s.text);
    for (const auto& q : story.questions) {
      std::vector<std::string> prefix(all.begin(), all.begin() + q.position);
      auto r = harness::RunSentences(prefix, opts);
      std::cout << q.line << "\t" << harness::AnswerQuestion(r, q.text) << "\n";
    }
    auto r = harness::RunSentences(all, opts);
    PrintDiagnostics(r.trajectory.diagnostics);
    Emit(args, r, i, stories.size(), true);
    if (story.questions.empty() && args.emit_model.empty()) std::cout << r.model.ToText();
  }
  return 0;
}

struct GenArgs {
  int task = 1;
  int count = 100;
  uint64_t seed = 1;
  double synonym_swap = 0.0;
  std::string out;
  std::string lexicon;
};

int Gen(const GenArgs& args) {
  narrate::kb::Lexicon lexicon = args.lexicon.empty()
                                     ? narrate::kb::BuiltinLexicon()
                                     : narrate::kb::ParseLexicon(narrate::ReadFile(args.lexicon),
                                                                 args.lexicon);
  harness::DatasetSpec spec;
  spec.task = args.task;
  spec.questions = args.count;
  spec.seed = args.seed;
  spec.synonym_swap = args.synonym_swap;
  const auto stories = harness::GenerateDataset(spec, lexicon);
  std::filesystem::create_directories(args.out);
  const auto path = std::filesystem::path(args.out) / harness::DatasetFileName(args.task);
  narrate::WriteFile(path.string(), narrate::babi::RenderBabi(stories));
  std::cerr << "wrote " << path.string() << "\n";
  return 0;
}

struct EvalArgs {
  std::string data;
  std::string tasks = "1,2,3,5,6,7,8";
  std::string report;
  std::string lexicon, lib;
  bool strict_exec = false;
  int threads = 0;
};

int Eval(const EvalArgs& args) {
  Resources res = LoadResources(args.lib, args.lexicon);
  const harness::PipelineOptions opts = res.Options(args.strict_exec);
  std::vector<harness::TaskReport> reports;
  for (const auto& field : narrate::Split(args.tasks, ',')) {
    const std::string t(narrate::Trim(field));
    if (t.empty()) continue;
    int task = 0;
    try {
      task = std::stoi(t);
    } catch (const std::exception&) {
      throw Error(ErrorKind::kInput, "bad task id '" + t + "'");
    }
    const auto files = harness::FindTaskFiles(args.data, task);
    if (files.empty()) {
      throw Error(ErrorKind::kInput, "no data for task " + t + " in " + args.data);
    }
    std::vector<narrate::babi::Story> stories;
    for (const auto& f : files) {
      try {
        auto more = narrate::babi::ParseBabi(narrate::ReadFile(f));
        stories.insert(stories.end(), more.begin(), more.end());
      } catch (const Error& e) {
        throw Error(e.kind(), f + ": " + e.what());
      }
    }
    reports.push_back(harness::EvaluateStories(task, stories, opts, args.threads));
  }
  const std::string table = harness::RenderReport(reports);
  std::cout << table;
  if (!args.report.empty()) {
    narrate::WriteFile(args.report, table);
    narrate::WriteFile(args.report + ".jsonl", harness::RenderJsonLines(reports));
  }
  // Unknown words are a loud failure: the scores above would be misleading.
  std::set<std::string> unsupported;
  for (const auto& r : reports) {
    for (const auto& q : r.results) {
      if (q.error_kind == ErrorKind::kUnsupported) unsupported.insert(q.error);
    }
  }
  if (!unsupported.empty()) {
    for (const auto& msg : unsupported) std::cerr << "error: " << msg << "\n";
    return 3;
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"narrative reasoning pipeline"};
  app.require_subcommand(1);

  RunArgs run;
  auto* run_cmd = app.add_subcommand("run", "run the pipeline on one input file");
  run_cmd->add_option("--input", run.input, "input file")->required()->check(CLI::ExistingFile);
  run_cmd->add_option("--from", run.from, "input kind")
      ->check(CLI::IsMember({"babi", "drs", "alm"}));
  run_cmd->add_option("--emit-drs", run.emit_drs, "write the DRS here");
  run_cmd->add_option("--emit-alm", run.emit_alm, "write the generated program here");
  run_cmd->add_option("--emit-model", run.emit_model, "write the model here");
  run_cmd->add_option("--name", run.name, "name of the generated system description");
  run_cmd->add_flag("--strict-exec", run.strict_exec, "fail on executability violations");
  run_cmd->add_option("--lib", run.lib, "extra library directory")->check(CLI::ExistingDirectory);
  run_cmd->add_option("--lexicon", run.lexicon, "lexicon replacing the builtin one")
      ->check(CLI::ExistingFile);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "generate a bAbI-style test set");
  gen_cmd->add_option("--task", gen.task, "task id")->required();
  gen_cmd->add_option("--count", gen.count, "number of questions")->required()
      ->check(CLI::NonNegativeNumber);
  gen_cmd->add_option("--seed", gen.seed, "random seed")->required();
  gen_cmd->add_option("--synonym-swap", gen.synonym_swap, "fraction of verbs to swap")
      ->check(CLI::Range(0.0, 1.0));
  gen_cmd->add_option("--out", gen.out, "output directory")->required();
  gen_cmd->add_option("--lexicon", gen.lexicon, "lexicon supplying synonyms")
      ->check(CLI::ExistingFile);

  EvalArgs eval;
  auto* eval_cmd = app.add_subcommand("eval", "score bAbI-format test sets");
  eval_cmd->add_option("--data", eval.data, "directory with qa<N>_test.txt files")->required();
  eval_cmd->add_option("--tasks", eval.tasks, "comma-separated task ids");
  eval_cmd->add_option("--report", eval.report, "report path; a .jsonl sidecar is added");
  eval_cmd->add_option("--lexicon", eval.lexicon, "lexicon replacing the builtin one")
      ->check(CLI::ExistingFile);
  eval_cmd->add_option("--lib", eval.lib, "extra library directory")
      ->check(CLI::ExistingDirectory);
  eval_cmd->add_flag("--strict-exec", eval.strict_exec, "fail on executability violations");
  eval_cmd->add_option("--threads", eval.threads, "worker threads, 0 for all cores");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return Run(run);
    if (*gen_cmd) return Gen(gen);
    return Eval(eval);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return ExitCode(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
}
