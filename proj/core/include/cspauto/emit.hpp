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

#include <string>
#include <vector>

#include "cspauto/testgen.hpp"

namespace cspauto {

struct EmitMeta {
  std::string scenario;
  std::optional<ThreatActor> actor;
};

/// Deterministic XML test suite:
///   <testsuite scenario actor generator version>
///     <testcase id> <step index role channel args/> ... </testcase>
///   </testsuite>
/// Attacker events carry role="inject", system events role="observe". The
/// actor attribute is omitted when no actor is set.
std::string emit_xml(const std::vector<TestCase>& suite, const EmitMeta& meta);

/// CAPL-style script: a header comment block, then one testcase_<id>()
/// function per test case; inject steps as output-message placeholders,
/// observe steps as wait-for-event placeholders. 7-bit ASCII, LF endings.
std::string emit_capl(const std::vector<TestCase>& suite, const EmitMeta& meta);

}  // namespace cspauto
