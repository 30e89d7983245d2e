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
#include <vector>

#include "cspauto/env.hpp"

namespace cspauto {

/// The thirteen bus-system endpoints of the built-in vehicle architecture,
/// in model order.
const std::vector<Value>& all_buses();

/// {lo, ..., hi} as integer values.
std::vector<Value> int_range(std::int32_t lo, std::int32_t hi);

/// The four attacker capability channels, in model order:
/// spoofing, block, eavesdrop, change_functionality.
const std::vector<std::string>& capability_channels();

/// The built-in vehicle architecture: GATEWAY, CANHS1, CANHS2, CANLS,
/// FLEXRAY, MOST, LIN, with channel declarations for every bus event and
/// the four capability channels.
Environment builtin_env();

/// Registers `name` = a recursive external choice over the given capability
/// channels (spoofing carries a payload component over `payloads`), every
/// branch looping back to `name`. Returns the reference term.
TermRef attacker_process(Environment& env, const std::vector<Value>& buses,
                         const std::vector<Value>& payloads,
                         const std::vector<std::string>& channels =
                             capability_channels(),
                         const std::string& name = "Attacker");

/// builtin_env() plus the default Attacker over all buses and payloads
/// {0..10}.
Environment full_builtin_env();

enum class ThreatActor { OwnerDriver, EvilMechanic, Thief, RemoteAttacker };

/// The fixed capability matrix: owners hold all four capabilities, thieves
/// and remote attackers the command-and-control three, evil mechanics
/// change_functionality only.
std::vector<std::string> actor_capabilities(ThreatActor actor);

std::string to_string(ThreatActor actor);
std::optional<ThreatActor> actor_from_string(std::string_view name);
const std::vector<ThreatActor>& all_actors();

enum class CompositionMode {
  /// The verbatim composition: both sides are restricted to the whole
  /// attack path. Synchronizing on events only one side can perform makes
  /// several published attack paths deadlock immediately; kept for
  /// fidelity and as the default.
  Literal,
  /// Each side is restricted to the attack-path events it can actually
  /// perform; the sides synchronize only on shared events.
  SharedOnly,
};

std::string to_string(CompositionMode mode);

struct AttackScenario {
  std::string name;
  TermRef attacker = nullptr;
  TermRef system = nullptr;
  EventSet attack_path;
  CompositionMode mode = CompositionMode::Literal;
  std::optional<ThreatActor> actor;
};

/// Throws Error(InvalidArgument) on an empty attack path or an attacker
/// whose channels exceed the actor's capabilities.
void validate_scenario(const AttackScenario& scenario, const Environment& env);

/// The attacker-system composition for the scenario. SharedOnly mode throws
/// Error(EmptyRestriction) when either side's restriction is empty.
TermRef compose_attack(const AttackScenario& scenario, const Environment& env);

/// The built-in scenario over GATEWAY with attack path
/// {gateway_canhs1, engine_cu, spoofing.engine_cu.2}. Registers the (actor
/// restricted) attacker in `env`.
AttackScenario attack1_scenario(Environment& env, CompositionMode mode,
                                std::optional<ThreatActor> actor = {});

std::vector<std::string> builtin_model_names();
std::vector<std::string> builtin_scenario_names();

}  // namespace cspauto
