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

#include "cspauto/automodels.hpp"
#include "cspauto/semantics.hpp"

namespace cspauto {

/// One concrete test case: a trace of the composed attack scenario in which
/// attacker-channel events are injection steps and system events are
/// observation steps.
struct TestCase {
  std::string id;        // stable content hash of (scenario, actor, events)
  std::string scenario;
  std::optional<ThreatActor> actor;
  Trace events;
  std::vector<Event> attacker_events;  // sub-list of events on attacker channels
  std::vector<Value> target_buses;     // buses named inside attacker events

  /// True iff this event is an injection step of the test case.
  bool is_attacker_event(const Event& e) const;
};

/// Traces of the composed scenario up to `depth`, filtered to those that
/// exercise at least one attacker channel; with `maximal_only`, proper
/// prefixes of kept traces are dropped. Output is ordered by length then
/// lexicographically and ids are deterministic.
///
/// Throws Error(Truncated) when the composition exceeds `limits`.
std::vector<TestCase> generate_tests(const AttackScenario& scenario,
                                     const Environment& env, std::size_t depth,
                                     bool maximal_only,
                                     const LtsLimits& limits = {});

/// One variant per value, substituting component `component_index` of every
/// `channel` event in the trace; variants that no longer replay on the
/// composed scenario are dropped. Throws Error(ComponentOutOfRange) if an
/// occurrence lacks the component.
std::vector<TestCase> enumerate_payload_variants(
    const AttackScenario& scenario, const Environment& env, const TestCase& tc,
    const std::string& channel, std::size_t component_index,
    const std::vector<Value>& values, const LtsLimits& limits = {});

}  // namespace cspauto
