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

#include "cspauto/automodels.hpp"

#include <algorithm>

#include "cspauto/error.hpp"
#include "cspauto/step.hpp"

namespace cspauto {

const std::vector<Value>& all_buses() {
  static const std::vector<Value> buses = {
      Value::atom("engine_cu"),    Value::atom("gearbox"),
      Value::atom("head_unit"),    Value::atom("can_ecu30"),
      Value::atom("can_ecu32"),    Value::atom("video"),
      Value::atom("radar"),        Value::atom("dvd"),
      Value::atom("mp3"),          Value::atom("radio"),
      Value::atom("media"),        Value::atom("lin_sensor"),
      Value::atom("lin_actuator"),
  };
  return buses;
}

std::vector<Value> int_range(std::int32_t lo, std::int32_t hi) {
  std::vector<Value> out;
  for (std::int32_t v = lo; v <= hi; ++v) out.push_back(Value::integer(v));
  return out;
}

const std::vector<std::string>& capability_channels() {
  static const std::vector<std::string> channels = {
      "spoofing", "block", "eavesdrop", "change_functionality"};
  return channels;
}

namespace {

TermRef plain(const char* channel, TermRef cont) {
  return Term::prefix(Event::visible(channel), cont);
}

}  // namespace

Environment builtin_env() {
  Environment env;
  for (const char* name :
       {"gateway_canhs1", "gateway_canhs2", "gateway_canls", "gateway_flexray",
        "canhs_most", "canls_lin"})
    env.declare_channel(name);
  for (const Value& bus : all_buses()) env.declare_channel(bus.atom_name());
  env.declare_channel("spoofing", {all_buses(), int_range(0, 10)});
  env.declare_channel("block", {all_buses()});
  env.declare_channel("eavesdrop", {all_buses()});
  env.declare_channel("change_functionality", {all_buses()});

  TermRef stop = Term::stop();
  std::vector<TermRef> gateway_branches = {
      plain("gateway_canhs1", Term::ref("CANHS1")),
      plain("gateway_canhs2", Term::ref("CANHS2")),
      plain("gateway_canls", Term::ref("CANLS")),
      plain("gateway_flexray", Term::ref("FLEXRAY")),
  };
  env.define("GATEWAY", Term::ext_choice_all(gateway_branches));

  std::vector<TermRef> canhs1_inner = {
      plain("engine_cu", stop),
      plain("gearbox", stop),
      plain("head_unit", stop),
  };
  env.define("CANHS1",
             plain("gateway_canhs1", Term::ext_choice_all(canhs1_inner)));

  std::vector<TermRef> canhs2_inner = {
      plain("can_ecu30", stop),
      plain("canhs_most", Term::ref("MOST")),
  };
  env.define("CANHS2",
             plain("gateway_canhs2", Term::ext_choice_all(canhs2_inner)));

  std::vector<TermRef> canls_inner = {
      plain("can_ecu32", stop),
      plain("canls_lin", Term::ref("LIN")),
  };
  env.define("CANLS",
             plain("gateway_canls", Term::ext_choice_all(canls_inner)));

  std::vector<TermRef> flexray_inner = {
      plain("video", stop),
      plain("radar", stop),
  };
  env.define("FLEXRAY",
             plain("gateway_flexray", Term::ext_choice_all(flexray_inner)));

  std::vector<TermRef> most_inner = {
      plain("dvd", stop),
      plain("mp3", stop),
      plain("radio", stop),
      plain("media", stop),
  };
  env.define("MOST", plain("canhs_most", Term::ext_choice_all(most_inner)));

  std::vector<TermRef> lin_inner = {
      plain("lin_sensor", stop),
      plain("lin_actuator", stop),
  };
  env.define("LIN", plain("canls_lin", Term::ext_choice_all(lin_inner)));

  return env;
}

TermRef attacker_process(Environment& env, const std::vector<Value>& buses,
                         const std::vector<Value>& payloads,
                         const std::vector<std::string>& channels,
                         const std::string& name) {
  if (buses.empty() || payloads.empty())
    throw Error(ErrorCode::InvalidArgument,
                "attacker needs nonempty bus and payload sets");
  if (channels.empty())
    throw Error(ErrorCode::InvalidArgument,
                "attacker needs at least one capability channel");
  TermRef self = Term::ref(name);
  std::vector<TermRef> branches;
  for (const std::string& channel : channels) {
    std::vector<Binder> binders = {Binder{"b", buses}};
    if (channel == "spoofing") binders.push_back(Binder{"c", payloads});
    branches.push_back(Term::input(channel, {}, std::move(binders), self));
  }
  env.define(name, Term::ext_choice_all(branches));
  return self;
}

Environment full_builtin_env() {
  Environment env = builtin_env();
  attacker_process(env, all_buses(), int_range(0, 10));
  return env;
}

std::vector<std::string> actor_capabilities(ThreatActor actor) {
  switch (actor) {
    case ThreatActor::OwnerDriver:
      return {"spoofing", "block", "eavesdrop", "change_functionality"};
    case ThreatActor::EvilMechanic:
      return {"change_functionality"};
    case ThreatActor::Thief:
    case ThreatActor::RemoteAttacker:
      return {"spoofing", "block", "eavesdrop"};
  }
  return {};
}

std::string to_string(ThreatActor actor) {
  switch (actor) {
    case ThreatActor::OwnerDriver: return "owner_driver";
    case ThreatActor::EvilMechanic: return "evil_mechanic";
    case ThreatActor::Thief: return "thief";
    case ThreatActor::RemoteAttacker: return "remote_attacker";
  }
  return "";
}

std::optional<ThreatActor> actor_from_string(std::string_view name) {
  for (ThreatActor actor : all_actors())
    if (to_string(actor) == name) return actor;
  return std::nullopt;
}

const std::vector<ThreatActor>& all_actors() {
  static const std::vector<ThreatActor> actors = {
      ThreatActor::OwnerDriver, ThreatActor::EvilMechanic, ThreatActor::Thief,
      ThreatActor::RemoteAttacker};
  return actors;
}

std::string to_string(CompositionMode mode) {
  return mode == CompositionMode::Literal ? "literal" : "shared";
}

void validate_scenario(const AttackScenario& scenario, const Environment& env) {
  if (scenario.attacker == nullptr || scenario.system == nullptr)
    throw Error(ErrorCode::InvalidArgument,
                "scenario '" + scenario.name + "' is incomplete");
  if (scenario.attack_path.empty())
    throw Error(ErrorCode::InvalidArgument,
                "scenario '" + scenario.name + "' has an empty attack path");
  if (scenario.actor) {
    auto caps = actor_capabilities(*scenario.actor);
    for (const Event& e : alphabet(scenario.attacker, env)) {
      if (std::find(caps.begin(), caps.end(), e.channel()) == caps.end())
        throw Error(ErrorCode::InvalidArgument,
                    "attacker channel '" + e.channel() +
                        "' exceeds the capabilities of " +
                        to_string(*scenario.actor));
    }
  }
}

TermRef compose_attack(const AttackScenario& scenario, const Environment& env) {
  validate_scenario(scenario, env);
  if (scenario.mode == CompositionMode::Literal)
    return Term::alpha_par(scenario.attacker, scenario.attack_path,
                           scenario.attack_path, scenario.system);
  EventSet attacker_side =
      scenario.attack_path.set_intersection(alphabet(scenario.attacker, env));
  EventSet system_side =
      scenario.attack_path.set_intersection(alphabet(scenario.system, env));
  if (attacker_side.empty())
    throw Error(ErrorCode::EmptyRestriction,
                "no attack-path event is performable by the attacker");
  if (system_side.empty())
    throw Error(ErrorCode::EmptyRestriction,
                "no attack-path event is performable by the system");
  return Term::alpha_par(scenario.attacker, attacker_side, system_side,
                         scenario.system);
}

AttackScenario attack1_scenario(Environment& env, CompositionMode mode,
                                std::optional<ThreatActor> actor) {
  AttackScenario scenario;
  scenario.name = "attack1";
  scenario.mode = mode;
  scenario.actor = actor;
  scenario.system = Term::ref("GATEWAY");
  scenario.attacker = attacker_process(
      env, all_buses(), int_range(0, 10),
      actor ? actor_capabilities(*actor) : capability_channels());
  scenario.attack_path =
      EventSet{Event::visible("gateway_canhs1"), Event::visible("engine_cu"),
               Event::visible("spoofing", {Value::atom("engine_cu"),
                                           Value::integer(2)})};
  return scenario;
}

std::vector<std::string> builtin_model_names() {
  Environment env = full_builtin_env();
  std::vector<std::string> names;
  for (const auto& [name, _] : env.definitions()) names.push_back(name);
  return names;
}

std::vector<std::string> builtin_scenario_names() { return {"attack1"}; }

}  // namespace cspauto
