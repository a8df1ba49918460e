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

#ifndef NARRATE_COMMON_TEXT_H_
#define NARRATE_COMMON_TEXT_H_

#include <string>
#include <string_view>
#include <vector>

namespace narrate {

std::string ToLower(std::string_view s);
std::string_view Trim(std::string_view s);
std::vector<std::string> SplitWhitespace(std::string_view s);
std::vector<std::string> Split(std::string_view s, char sep);
std::string Join(const std::vector<std::string>& parts, std::string_view sep);
bool StartsWith(std::string_view s, std::string_view prefix);

// Orders identifiers like "r2" < "r10": common prefix compared as text,
// trailing digit runs compared numerically.
struct NaturalLess {
  bool operator()(const std::string& a, const std::string& b) const;
};

std::string ReadFile(const std::string& path);
void WriteFile(const std::string& path, std::string_view contents);

}  // namespace narrate

#endif  // NARRATE_COMMON_TEXT_H_
