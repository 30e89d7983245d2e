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

#include <vector>

#include "cspauto/env.hpp"

namespace cspauto {

struct Transition {
  Event event;
  TermRef target;
  friend bool operator==(const Transition&, const Transition&) = default;
};

/// One-step structured operational semantics. The result is sorted by
/// (event, structural term order) and duplicate-free; reference unfolding is
/// transparent (no tau), so the term must be guarded.
///
/// Throws Error(UnboundReference) and Error(UnguardedRecursion).
std::vector<Transition> step(TermRef t, const Environment& env);

/// All visible events syntactically occurring in the full unfolding of `t`,
/// with input-prefix binders expanded over their domains. Synchronization
/// and alphabetized-parallel restriction sets do not contribute.
EventSet alphabet(TermRef t, const Environment& env);

struct GuardednessResult {
  bool ok = true;
  std::vector<std::string> cycle;  // a shortest offending cycle when !ok
};

/// Every reference cycle must pass through a prefix. Reports a shortest
/// cycle (lexicographically least among shortest) when violated.
GuardednessResult check_guarded(const Environment& env);

}  // namespace cspauto
