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

#include <benchmark/benchmark.h>

#include "cspauto/emit.hpp"
#include "cspauto/parser.hpp"
#include "cspauto/printer.hpp"
#include "cspauto/refinement.hpp"

using namespace cspauto;

static void BM_BuildLtsGateway(benchmark::State& state) {
  Environment env = full_builtin_env();
  for (auto _ : state) {
    Lts lts = build_lts(Term::ref("GATEWAY"), env);
    benchmark::DoNotOptimize(lts.num_states());
  }
}
BENCHMARK(BM_BuildLtsGateway);

static void BM_BuildLtsAttacker(benchmark::State& state) {
  Environment env = full_builtin_env();
  for (auto _ : state) {
    Lts lts = build_lts(Term::ref("Attacker"), env);
    benchmark::DoNotOptimize(lts.num_transitions());
  }
}
BENCHMARK(BM_BuildLtsAttacker);

static void BM_TracesGateway(benchmark::State& state) {
  Environment env = full_builtin_env();
  Lts lts = build_lts(Term::ref("GATEWAY"), env);
  for (auto _ : state) {
    auto traces = traces_up_to(lts, 6);
    benchmark::DoNotOptimize(traces.size());
  }
}
BENCHMARK(BM_TracesGateway);

static void BM_FailuresRefinementReflexive(benchmark::State& state) {
  Environment env = full_builtin_env();
  Lts lts = build_lts(Term::ref("GATEWAY"), env);
  for (auto _ : state) {
    Verdict v = check_failures_refinement(lts, lts);
    benchmark::DoNotOptimize(v.is_holds());
  }
}
BENCHMARK(BM_FailuresRefinementReflexive);

static void BM_ComposeAttackShared(benchmark::State& state) {
  for (auto _ : state) {
    Environment env = builtin_env();
    AttackScenario scenario =
        attack1_scenario(env, CompositionMode::SharedOnly);
    Lts lts = build_lts(compose_attack(scenario, env), env);
    benchmark::DoNotOptimize(lts.num_states());
  }
}
BENCHMARK(BM_ComposeAttackShared);

static void BM_GenerateTestsDepth6(benchmark::State& state) {
  Environment env = builtin_env();
  AttackScenario scenario = attack1_scenario(env, CompositionMode::SharedOnly);
  for (auto _ : state) {
    auto suite = generate_tests(scenario, env, 6, true);
    benchmark::DoNotOptimize(suite.size());
  }
}
BENCHMARK(BM_GenerateTestsDepth6);

static void BM_ParsePrintBuiltin(benchmark::State& state) {
  std::string text = print(full_builtin_env());
  for (auto _ : state) {
    ParseResult result = parse(text);
    benchmark::DoNotOptimize(result.ok());
  }
}
BENCHMARK(BM_ParsePrintBuiltin);

static void BM_EmitXmlDepth6(benchmark::State& state) {
  Environment env = builtin_env();
  AttackScenario scenario = attack1_scenario(env, CompositionMode::SharedOnly);
  auto suite = generate_tests(scenario, env, 6, false);
  EmitMeta meta{scenario.name, scenario.actor};
  for (auto _ : state) {
    std::string doc = emit_xml(suite, meta);
    benchmark::DoNotOptimize(doc.size());
  }
}
BENCHMARK(BM_EmitXmlDepth6);

BENCHMARK_MAIN();
