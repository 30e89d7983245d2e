/*
 * Copyright (c) 2026, the cspauto authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "cspauto/env.hpp"

namespace cspauto {

enum class DiagCode {
  Syntax,
  UnknownChannel,
  ArityMismatch,
  DomainMismatch,
  UnboundReference,
  UnguardedRecursion,
};

std::string_view to_string(DiagCode code);

struct SourcePos {
  std::size_t line = 1;    // 1-based
  std::size_t column = 1;  // 1-based
  friend auto operator<=>(const SourcePos&, const SourcePos&) = default;
};

struct SourceSpan {
  SourcePos begin;
  SourcePos end;
  friend auto operator<=>(const SourceSpan&, const SourceSpan&) = default;
};

struct Diagnostic {
  DiagCode code;
  SourceSpan span;
  std::string message;

  /// "4:13: syntax error: expected '->'"
  std::string to_string() const;
};

struct ParseResult {
  /// Engaged iff there are no diagnostics.
  std::optional<Environment> env;
  std::vector<Diagnostic> diagnostics;

  bool ok() const { return diagnostics.empty(); }
};

/// Parses a .cspa script. Never throws on malformed input: errors are
/// reported as diagnostics and parsing resumes at the next declaration.
ParseResult parse(std::string_view text);

}  // namespace cspauto
