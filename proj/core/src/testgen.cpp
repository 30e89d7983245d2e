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

#include "cspauto/testgen.hpp"

#include <algorithm>
#include <cstdio>
#include <set>

#include "cspauto/error.hpp"

namespace cspauto {

namespace {

std::uint64_t fnv1a(std::uint64_t h, std::string_view s) {
  for (unsigned char c : s) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  return h;
}

std::string content_id(const std::string& scenario,
                       const std::optional<ThreatActor>& actor,
                       const Trace& events) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  h = fnv1a(h, scenario);
  h = fnv1a(h, "|");
  if (actor) h = fnv1a(h, to_string(*actor));
  h = fnv1a(h, "|");
  for (const Event& e : events) {
    h = fnv1a(h, e.to_string());
    h = fnv1a(h, ";");
  }
  char buf[20];
  std::snprintf(buf, sizeof buf, "tc_%016llx",
                static_cast<unsigned long long>(h));
  return buf;
}

std::set<std::string> attacker_channel_names(const AttackScenario& scenario,
                                             const Environment& env) {
  std::set<std::string> names;
  for (const Event& e : alphabet(scenario.attacker, env))
    names.insert(e.channel());
  return names;
}

TestCase make_test_case(const AttackScenario& scenario,
                        const std::set<std::string>& attacker_channels,
                        Trace events) {
  TestCase tc;
  tc.scenario = scenario.name;
  tc.actor = scenario.actor;
  tc.events = std::move(events);
  std::set<Value> buses(all_buses().begin(), all_buses().end());
  for (const Event& e : tc.events) {
    if (!e.is_visible() || !attacker_channels.count(e.channel())) continue;
    tc.attacker_events.push_back(e);
    for (const Value& v : e.components())
      if (buses.count(v)) tc.target_buses.push_back(v);
  }
  normalize_value_set(tc.target_buses);
  tc.id = content_id(tc.scenario, tc.actor, tc.events);
  return tc;
}

}  // namespace

bool TestCase::is_attacker_event(const Event& e) const {
  return std::find(attacker_events.begin(), attacker_events.end(), e) !=
         attacker_events.end();
}

std::vector<TestCase> generate_tests(const AttackScenario& scenario,
                                     const Environment& env, std::size_t depth,
                                     bool maximal_only,
                                     const LtsLimits& limits) {
  TermRef composed = compose_attack(scenario, env);
  Lts lts = build_lts(composed, env, limits);
  if (lts.truncated())
    throw Error(ErrorCode::Truncated,
                "composition of '" + scenario.name +
                    "' exceeds the state or depth limit; raise "
                    "max_states/max_depth");

  std::set<std::string> attacker_channels =
      attacker_channel_names(scenario, env);

  std::vector<Trace> kept;
  for (Trace& t : traces_up_to(lts, depth)) {
    bool has_attack = std::any_of(
        t.begin(), t.end(), [&](const Event& e) {
          return e.is_visible() && attacker_channels.count(e.channel());
        });
    if (has_attack) kept.push_back(std::move(t));
  }

  if (maximal_only) {
    auto is_proper_prefix = [](const Trace& a, const Trace& b) {
      return a.size() < b.size() && std::equal(a.begin(), a.end(), b.begin());
    };
    std::vector<Trace> maximal;
    for (const Trace& t : kept) {
      bool extended = std::any_of(
          kept.begin(), kept.end(),
          [&](const Trace& other) { return is_proper_prefix(t, other); });
      if (!extended) maximal.push_back(t);
    }
    kept = std::move(maximal);
  }

  std::sort(kept.begin(), kept.end(), trace_less);
  kept.erase(std::unique(kept.begin(), kept.end()), kept.end());

  std::vector<TestCase> out;
  out.reserve(kept.size());
  for (Trace& t : kept)
    out.push_back(make_test_case(scenario, attacker_channels, std::move(t)));
  return out;
}

std::vector<TestCase> enumerate_payload_variants(
    const AttackScenario& scenario, const Environment& env, const TestCase& tc,
    const std::string& channel, std::size_t component_index,
    const std::vector<Value>& values, const LtsLimits& limits) {
  for (const Event& e : tc.events) {
    if (e.is_visible() && e.channel() == channel &&
        component_index >= e.components().size())
      throw Error(ErrorCode::ComponentOutOfRange,
                  "event " + e.to_string() + " has no component " +
                      std::to_string(component_index));
  }

  TermRef composed = compose_attack(scenario, env);
  Lts lts = build_lts(composed, env, limits);
  if (lts.truncated())
    throw Error(ErrorCode::Truncated,
                "composition of '" + scenario.name + "' exceeds the limits");
  std::set<std::string> attacker_channels =
      attacker_channel_names(scenario, env);

  std::vector<TestCase> out;
  std::set<std::string> seen_ids;
  for (const Value& v : values) {
    Trace substituted;
    substituted.reserve(tc.events.size());
    for (const Event& e : tc.events) {
      if (e.is_visible() && e.channel() == channel) {
        std::vector<Value> comps = e.components();
        comps[component_index] = v;
        substituted.push_back(Event::visible(channel, std::move(comps)));
      } else {
        substituted.push_back(e);
      }
    }
    if (states_after(lts, substituted).empty()) continue;  // not replayable
    TestCase variant =
        make_test_case(scenario, attacker_channels, std::move(substituted));
    if (seen_ids.insert(variant.id).second) out.push_back(std::move(variant));
  }
  return out;
}

}  // namespace cspauto
