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

#ifndef NARRATE_COMMON_DIAGNOSTIC_H_
#define NARRATE_COMMON_DIAGNOSTIC_H_

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace narrate {

// Position in a source text, 1-based. Two locations always compare equal so
// that AST nodes carrying them keep structural equality.
struct SourceLoc {
  int line = 0;
  int column = 0;

  bool known() const { return line > 0; }
  friend bool operator==(const SourceLoc&, const SourceLoc&) { return true; }
};

enum class Severity { kError, kWarning };

struct Diagnostic {
  Severity severity = Severity::kError;
  std::string message;
  SourceLoc loc;

  std::string ToString() const;
  friend bool operator==(const Diagnostic&, const Diagnostic&) = default;
};

using Diagnostics = std::vector<Diagnostic>;

Diagnostic MakeError(std::string message, SourceLoc loc = {});
Diagnostic MakeWarning(std::string message, SourceLoc loc = {});

bool HasErrors(const Diagnostics& diags);
std::string FormatDiagnostics(const Diagnostics& diags);

// Failure categories; the CLI maps them onto exit codes.
enum class ErrorKind {
  kInput,          // malformed or inconsistent input files
  kInconsistency,  // contradictory effects or constraints during projection
  kUnsupported,    // constructs outside the supported fragment
  kSizing,         // grounding exceeded its cap
};

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(message), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

const char* ErrorKindName(ErrorKind kind);

// Result of a parser that reports problems instead of throwing.
template <typename T>
struct Parsed {
  std::optional<T> value;
  Diagnostics diagnostics;

  bool ok() const { return value.has_value(); }
};

}  // namespace narrate

#endif  // NARRATE_COMMON_DIAGNOSTIC_H_
