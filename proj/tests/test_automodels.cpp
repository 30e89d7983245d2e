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

#include <doctest.h>

#include <fstream>
#include <sstream>

#include "cspauto/automodels.hpp"
#include "cspauto/error.hpp"
#include "cspauto/parser.hpp"
#include "cspauto/printer.hpp"
#include "cspauto/refinement.hpp"
#include "oracles.hpp"

using namespace cspauto;

namespace {

std::string read_model_file(const std::string& name) {
  std::string path = std::string(CSPAUTO_MODELS_DIR) + "/" + name;
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing corpus file: " << path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

}  // namespace

TEST_CASE("builtin_env validates and is guarded") {
  Environment env = builtin_env();
  CHECK_NOTHROW(env.validate());
  CHECK(check_guarded(env).ok);
  CHECK(env.definitions().size() == 7);
  CHECK(env.channels().size() == 23);  // 19 plain + 4 capabilities
}

TEST_CASE("GATEWAY offers the four gateway events initially") {
  Environment env = builtin_env();
  Lts lts = build_lts(Term::ref("GATEWAY"), env);
  CHECK(lts.visible_initials(lts.initial()) ==
        EventSet{Event::visible("gateway_canhs1"),
                 Event::visible("gateway_canhs2"),
                 Event::visible("gateway_canls"),
                 Event::visible("gateway_flexray")});
}

TEST_CASE("MOST offers the four media events after canhs_most") {
  Environment env = builtin_env();
  Lts lts = build_lts(Term::ref("MOST"), env);
  auto states = states_after(lts, {Event::visible("canhs_most")});
  REQUIRE(states.size() == 1);
  CHECK(lts.visible_initials(states.front()) ==
        EventSet{Event::visible("dvd"), Event::visible("mp3"),
                 Event::visible("radio"), Event::visible("media")});
}

TEST_CASE("GATEWAY is deterministic, deadlocking only at STOP leaves") {
  Environment env = builtin_env();
  Lts lts = build_lts(Term::ref("GATEWAY"), env);
  CHECK(is_deterministic(lts));
  for (StateId s = 0; s < lts.num_states(); ++s)
    if (lts.out(s).empty()) CHECK(lts.state_term(s) == Term::stop());
  // every bus event is reachable
  EventSet labels = lts.label_alphabet();
  for (const Value& bus : all_buses())
    CHECK(labels.contains(Event::visible(bus.atom_name())));
}

TEST_CASE("attacker_process: 182 initial transitions over the full domains") {
  Environment env = builtin_env();
  TermRef attacker = attacker_process(env, all_buses(), int_range(0, 10));
  env.validate();
  auto initial = step(attacker, env);
  CHECK(initial.size() == 182);  // 13*11 + 3*13
  Lts lts = build_lts(attacker, env);
  CHECK(lts.num_states() == 1);  // every branch loops back
  CHECK(lts.num_transitions() == 182);
}

TEST_CASE("attacker_process: one value per channel gives four transitions") {
  Environment env = builtin_env();
  TermRef attacker = attacker_process(env, {Value::atom("engine_cu")},
                                      {Value::integer(2)});
  env.validate();
  auto initial = step(attacker, env);
  CHECK(initial.size() == 4);
  for (const auto& tr : initial) CHECK(tr.target == attacker);
}

TEST_CASE("literal composition of attack1 deadlocks immediately") {
  Environment env = builtin_env();
  AttackScenario scenario = attack1_scenario(env, CompositionMode::Literal);
  TermRef composed = compose_attack(scenario, env);
  Lts lts = build_lts(composed, env);
  CHECK(traces_up_to(lts, 6) == std::vector<Trace>{{}});
  Verdict v = deadlock_free(lts);
  REQUIRE(v.kind() == Verdict::Kind::Deadlock);
  CHECK(v.witness().empty());
}

TEST_CASE("shared composition of attack1 matches the shuffle oracle") {
  Environment env = builtin_env();
  AttackScenario scenario = attack1_scenario(env, CompositionMode::SharedOnly);
  TermRef composed = compose_attack(scenario, env);
  Lts lts = build_lts(composed, env);

  auto got = traces_up_to(lts, 6);
  std::set<Trace, TraceLess> got_set(got.begin(), got.end());

  // per-side restricted walks, interleaved; independent of the kernel's
  // alphabetized parallel
  EventSet attacker_allowed =
      scenario.attack_path.set_intersection(alphabet(scenario.attacker, env));
  EventSet system_allowed =
      scenario.attack_path.set_intersection(alphabet(scenario.system, env));
  auto expected = oracle::shuffle_product(
      oracle::restricted_traces(scenario.attacker, env, attacker_allowed, 6),
      oracle::restricted_traces(scenario.system, env, system_allowed, 6), 6);
  CHECK(got_set == expected);

  Event spoof = Event::visible("spoofing",
                               {Value::atom("engine_cu"), Value::integer(2)});
  Event g = Event::visible("gateway_canhs1");
  Event e = Event::visible("engine_cu");
  CHECK(got_set.count(Trace{spoof}));
  CHECK(got_set.count(Trace{g, g, e}));
  CHECK(got_set.count(Trace{g, spoof, g, e}));
}

TEST_CASE("shared composition projected onto system events stays in the system") {
  Environment env = builtin_env();
  AttackScenario scenario = attack1_scenario(env, CompositionMode::SharedOnly);
  Lts lts = build_lts(compose_attack(scenario, env), env);
  EventSet system_alpha = alphabet(scenario.system, env);
  auto system_traces = oracle::traces(scenario.system, env, 8);
  for (const Trace& t : traces_up_to(lts, 6)) {
    Trace projected;
    for (const Event& ev : t)
      if (system_alpha.contains(ev)) projected.push_back(ev);
    CHECK(system_traces.count(projected));
  }
}

TEST_CASE("a full attack path makes the sides interleave freely") {
  Environment env = builtin_env();
  // small attacker so the interleaving stays enumerable
  TermRef attacker = attacker_process(env, {Value::atom("engine_cu")},
                                      {Value::integer(2)});
  AttackScenario scenario;
  scenario.name = "full_path";
  scenario.attacker = attacker;
  scenario.system = Term::ref("GATEWAY");
  scenario.attack_path = alphabet(attacker, env).set_union(
      alphabet(scenario.system, env));
  scenario.mode = CompositionMode::SharedOnly;

  Lts lts = build_lts(compose_attack(scenario, env), env);
  auto got = traces_up_to(lts, 3);
  std::set<Trace, TraceLess> got_set(got.begin(), got.end());
  auto expected = oracle::shuffle_product(
      oracle::traces(attacker, env, 3),
      oracle::traces(scenario.system, env, 3), 3);
  CHECK(got_set == expected);
}

TEST_CASE("actor capability matrix") {
  CHECK(actor_capabilities(ThreatActor::OwnerDriver) ==
        std::vector<std::string>{"spoofing", "block", "eavesdrop",
                                 "change_functionality"});
  CHECK(actor_capabilities(ThreatActor::Thief) ==
        std::vector<std::string>{"spoofing", "block", "eavesdrop"});
  CHECK(actor_capabilities(ThreatActor::RemoteAttacker) ==
        std::vector<std::string>{"spoofing", "block", "eavesdrop"});
  CHECK(actor_capabilities(ThreatActor::EvilMechanic) ==
        std::vector<std::string>{"change_functionality"});
  for (ThreatActor actor : all_actors())
    CHECK(actor_from_string(to_string(actor)) == actor);
}

TEST_CASE("actor-restricted attackers stay inside their capabilities") {
  for (ThreatActor actor : all_actors()) {
    Environment env = builtin_env();
    AttackScenario scenario =
        attack1_scenario(env, CompositionMode::SharedOnly, actor);
    CHECK_NOTHROW(validate_scenario(scenario, env));
    auto caps = actor_capabilities(actor);
    for (const Event& e : alphabet(scenario.attacker, env))
      CHECK(std::find(caps.begin(), caps.end(), e.channel()) != caps.end());
  }
}

TEST_CASE("a scenario whose attacker exceeds the actor capabilities is invalid") {
  Environment env = builtin_env();
  AttackScenario scenario = attack1_scenario(env, CompositionMode::Literal);
  scenario.actor = ThreatActor::EvilMechanic;  // but the attacker has all four
  CHECK_THROWS_AS(validate_scenario(scenario, env), Error);
}

TEST_CASE("the mechanic cannot reach the spoofing attack path") {
  Environment env = builtin_env();
  AttackScenario scenario = attack1_scenario(env, CompositionMode::SharedOnly,
                                             ThreatActor::EvilMechanic);
  CHECK_THROWS_AS(compose_attack(scenario, env), Error);
}

TEST_CASE("empty attack path is rejected") {
  Environment env = builtin_env();
  AttackScenario scenario = attack1_scenario(env, CompositionMode::Literal);
  scenario.attack_path = {};
  CHECK_THROWS_AS(compose_attack(scenario, env), Error);
}

TEST_CASE("gateway.cspa parses to exactly the built-in environment") {
  std::string text = read_model_file("gateway.cspa");
  ParseResult result = parse(text);
  for (const Diagnostic& d : result.diagnostics) INFO(d.to_string());
  REQUIRE(result.ok());
  Environment builtin = builtin_env();
  CHECK(*result.env == builtin);

  // state-for-state equality of the GATEWAY transition systems
  Lts from_file = build_lts(Term::ref("GATEWAY"), *result.env);
  Lts from_builtin = build_lts(Term::ref("GATEWAY"), builtin);
  REQUIRE(from_file.num_states() == from_builtin.num_states());
  for (StateId s = 0; s < from_file.num_states(); ++s) {
    CHECK(from_file.state_term(s) == from_builtin.state_term(s));
    CHECK(from_file.out(s) == from_builtin.out(s));
  }

  // the shipped file is in canonical form already
  CHECK(print(*result.env) == text);
}

TEST_CASE("attacker.cspa parses to the default attacker") {
  std::string text = read_model_file("attacker.cspa");
  ParseResult result = parse(text);
  for (const Diagnostic& d : result.diagnostics) INFO(d.to_string());
  REQUIRE(result.ok());

  Environment reference;
  for (const std::string& channel : capability_channels()) {
    std::vector<std::vector<Value>> domains = {all_buses()};
    if (channel == "spoofing") domains.push_back(int_range(0, 10));
    reference.declare_channel(channel, std::move(domains));
  }
  attacker_process(reference, all_buses(), int_range(0, 10));
  CHECK(*result.env == reference);
  CHECK(print(*result.env) == text);
}

TEST_CASE("builtin model and scenario listings") {
  auto models = builtin_model_names();
  CHECK(models == std::vector<std::string>{"Attacker", "CANHS1", "CANHS2",
                                           "CANLS", "FLEXRAY", "GATEWAY",
                                           "LIN", "MOST"});
  CHECK(builtin_scenario_names() == std::vector<std::string>{"attack1"});
}
