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

#include "narrate/common/diagnostic.h"

#include <algorithm>
#include <sstream>

namespace narrate {

std::string Diagnostic::ToString() const {
  std::ostringstream out;
  if (loc.known()) out << loc.line << ":" << loc.column << ": ";
  out << (severity == Severity::kError ? "error: " : "warning: ") << message;
  return out.str();
}

Diagnostic MakeError(std::string message, SourceLoc loc) {
  return Diagnostic{Severity::kError, std::move(message), loc};
}

Diagnostic MakeWarning(std::string message, SourceLoc loc) {
  return Diagnostic{Severity::kWarning, std::move(message), loc};
}

bool HasErrors(const Diagnostics& diags) {
  return std::any_of(diags.begin(), diags.end(), [](const Diagnostic& d) {
    return d.severity == Severity::kError;
  });
}

std::string FormatDiagnostics(const Diagnostics& diags) {
  std::string out;
  for (const auto& d : diags) {
    out += d.ToString();
    out += '\n';
  }
  return out;
}

const char* ErrorKindName(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::kInput: return "input";
    case ErrorKind::kInconsistency: return "inconsistency";
    case ErrorKind::kUnsupported: return "unsupported";
    case ErrorKind::kSizing: return "sizing";
  }
  return "unknown";
}

}  // namespace narrate
