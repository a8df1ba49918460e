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

#ifndef NARRATE_KB_EMBEDDED_H_
#define NARRATE_KB_EMBEDDED_H_

#include <span>
#include <string_view>

namespace narrate::kb {

// A file from the source tree's data/ directory compiled into the binary.
struct EmbeddedFile {
  std::string_view path;  // relative to data/, e.g. "lib/core/base.alm"
  std::string_view contents;
};

std::span<const EmbeddedFile> EmbeddedFiles();

}  // namespace narrate::kb

#endif  // NARRATE_KB_EMBEDDED_H_
