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

#include "narrate/babi/story.h"

#include <cctype>

#include "narrate/common/diagnostic.h"
#include "narrate/common/text.h"

namespace narrate::babi {
namespace {

bool AllDigits(std::string_view s) {
  if (s.empty() || s.size() > 9) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

std::vector<Story> ParseBabi(std::string_view source) {
  std::vector<Story> stories;
  int last = 0;
  int file_line = 0;
  for (const auto& raw : Split(source, '\n')) {
    ++file_line;
    std::string_view line = raw;
    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    if (Trim(line).empty()) continue;
    auto fail = [&](const std::string& msg) {
      throw Error(ErrorKind::kInput, "line " + std::to_string(file_line) + ": " + msg);
    };
    line = Trim(line);
    size_t sp = line.find_first_of(" \t");
    if (sp == std::string_view::npos || !AllDigits(line.substr(0, sp))) {
      fail("expected a line number");
    }
    int n = std::stoi(std::string(line.substr(0, sp)));
    std::string_view rest = Trim(line.substr(sp));
    if (stories.empty() || n <= last) stories.emplace_back();
    last = n;
    Story& story = stories.back();
    auto fields = Split(rest, '\t');
    const bool question = fields[0].find('?') != std::string::npos;
    if (!question) {
      if (fields.size() > 1) fail("statement with tab-separated fields");
      story.sentences.push_back({n, std::string(Trim(rest))});
      continue;
    }
    if (fields.size() < 2 || Trim(fields[1]).empty()) fail("question without an answer");
    Question q;
    q.line = n;
    q.text = std::string(Trim(fields[0]));
    q.answer = std::string(Trim(fields[1]));
    if (fields.size() > 2) {
      for (const auto& id : SplitWhitespace(fields[2])) {
        if (!AllDigits(id)) fail("bad supporting fact id '" + id + "'");
        q.supports.push_back(std::stoi(id));
      }
    }
    q.position = static_cast<int>(story.sentences.size());
    story.questions.push_back(std::move(q));
  }
  return stories;
}

std::string RenderBabi(const std::vector<Story>& stories) {
  std::string out;
  for (const auto& story : stories) {
    size_t s = 0;
    size_t q = 0;
    while (s < story.sentences.size() || q < story.questions.size()) {
      bool take_sentence =
          q == story.questions.size() ||
          (s < story.sentences.size() && story.sentences[s].line < story.questions[q].line);
      if (take_sentence) {
        out += std::to_string(story.sentences[s].line) + " " + story.sentences[s].text + "\n";
        ++s;
      } else {
        const Question& qq = story.questions[q++];
        std::vector<std::string> ids;
        for (int id : qq.supports) ids.push_back(std::to_string(id));
        out += std::to_string(qq.line) + " " + qq.text + "\t" + qq.answer + "\t" +
               Join(ids, " ") + "\n";
      }
    }
  }
  return out;
}

}  // namespace narrate::babi
