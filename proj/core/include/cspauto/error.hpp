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

#include <stdexcept>
#include <string>

namespace cspauto {

enum class ErrorCode {
  UnboundReference,
  UnguardedRecursion,
  UnknownChannel,
  ArityMismatch,
  DomainMismatch,
  TraceNotFound,
  SpecTruncated,
  Truncated,
  EmptyRestriction,
  ComponentOutOfRange,
  InvalidArgument,
};

inline std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnboundReference: return "unbound reference";
    case ErrorCode::UnguardedRecursion: return "unguarded recursion";
    case ErrorCode::UnknownChannel: return "unknown channel";
    case ErrorCode::ArityMismatch: return "arity mismatch";
    case ErrorCode::DomainMismatch: return "domain mismatch";
    case ErrorCode::TraceNotFound: return "trace not found";
    case ErrorCode::SpecTruncated: return "specification truncated";
    case ErrorCode::Truncated: return "truncated";
    case ErrorCode::EmptyRestriction: return "empty restriction";
    case ErrorCode::ComponentOutOfRange: return "component out of range";
    case ErrorCode::InvalidArgument: return "invalid argument";
  }
  return "error";
}

/// Runtime error carrying a machine-checkable code alongside the message.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cspauto
