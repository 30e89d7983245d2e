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

#include "cspauto/cli.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "cspauto/emit.hpp"
#include "cspauto/error.hpp"
#include "cspauto/parser.hpp"
#include "cspauto/printer.hpp"
#include "cspauto/refinement.hpp"
#include "cspauto/version.hpp"

namespace cspauto::cli {

namespace {

constexpr int kExitOk = 0;
constexpr int kExitRefuted = 1;
constexpr int kExitUsage = 2;
constexpr int kExitInconclusive = 3;

struct UsageFailure {
  std::string message;
};

struct LoadedProcess {
  Environment env;
  TermRef root = nullptr;
};

LtsLimits limits_from_environment(std::ostream& err) {
  LtsLimits limits;
  if (const char* raw = std::getenv("CSPAUTO_MAX_STATES")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(raw, &end, 10);
    if (end && *end == '\0' && v > 0) {
      limits.max_states = static_cast<std::size_t>(v);
    } else {
      err << "warning: ignoring invalid CSPAUTO_MAX_STATES value '" << raw
          << "'\n";
    }
  }
  return limits;
}

Environment parse_file(const std::string& path, std::ostream& err) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw UsageFailure{"cannot open '" + path + "'"};
  std::ostringstream buffer;
  buffer << in.rdbuf();
  ParseResult result = parse(buffer.str());
  if (!result.ok()) {
    for (const Diagnostic& d : result.diagnostics)
      err << path << ":" << d.to_string() << "\n";
    throw UsageFailure{"parse of '" + path + "' failed"};
  }
  return std::move(*result.env);
}

// "FILE.cspa:Name" or "builtin:Name"; Name may also be STOP or SKIP.
LoadedProcess load_process(const std::string& address, std::ostream& err) {
  auto colon = address.rfind(':');
  if (colon == std::string::npos || colon + 1 == address.size())
    throw UsageFailure{"'" + address +
                       "': expected FILE.cspa:Name or builtin:Name"};
  std::string source = address.substr(0, colon);
  std::string name = address.substr(colon + 1);

  LoadedProcess loaded;
  loaded.env =
      source == "builtin" ? full_builtin_env() : parse_file(source, err);
  if (name == "STOP") {
    loaded.root = Term::stop();
  } else if (name == "SKIP") {
    loaded.root = Term::skip();
  } else if (loaded.env.has_definition(name)) {
    loaded.root = Term::ref(name);
  } else {
    throw UsageFailure{"process '" + name + "' is not defined in " + source};
  }
  return loaded;
}

int verdict_exit_code(const Verdict& verdict) {
  switch (verdict.kind()) {
    case Verdict::Kind::Holds:
      return kExitOk;
    case Verdict::Kind::Inconclusive:
      return kExitInconclusive;
    default:
      return kExitRefuted;
  }
}

int run_check(const std::string& model, const std::string& spec_addr,
              const std::string& impl_addr, std::ostream& out,
              std::ostream& err) {
  LtsLimits limits = limits_from_environment(err);
  LoadedProcess spec = load_process(spec_addr, err);
  LoadedProcess impl = load_process(impl_addr, err);
  Lts spec_lts = build_lts(spec.root, spec.env, limits);
  Lts impl_lts = build_lts(impl.root, impl.env, limits);
  Verdict verdict = model == "traces"
                        ? check_traces_refinement(spec_lts, impl_lts)
                        : check_failures_refinement(spec_lts, impl_lts);
  out << verdict.describe() << "\n";
  return verdict_exit_code(verdict);
}

int run_traces(const std::string& address, std::size_t depth, std::ostream& out,
               std::ostream& err) {
  LtsLimits limits = limits_from_environment(err);
  LoadedProcess loaded = load_process(address, err);
  Lts lts = build_lts(loaded.root, loaded.env, limits);
  for (const Trace& t : traces_up_to(lts, depth))
    out << trace_to_string(t) << "\n";
  if (lts.truncated()) {
    err << "warning: LTS truncated, the listing is a lower bound; raise "
           "CSPAUTO_MAX_STATES\n";
    return kExitInconclusive;
  }
  return kExitOk;
}

int run_deadlock(const std::string& address, std::ostream& out,
                 std::ostream& err) {
  LtsLimits limits = limits_from_environment(err);
  LoadedProcess loaded = load_process(address, err);
  Verdict verdict = deadlock_free(build_lts(loaded.root, loaded.env, limits));
  if (verdict.is_holds())
    out << "deadlock free\n";
  else
    out << verdict.describe() << "\n";
  return verdict_exit_code(verdict);
}

int run_testgen(const std::string& scenario_name, const std::string& mode_name,
                std::size_t depth, bool maximal, const std::string& actor_name,
                const std::string& format, const std::string& out_path,
                std::ostream& out, std::ostream& err) {
  if (scenario_name != "attack1")
    throw UsageFailure{"unknown scenario '" + scenario_name +
                       "'; try `cspauto builtin --list`"};
  CompositionMode mode = mode_name == "shared" ? CompositionMode::SharedOnly
                                               : CompositionMode::Literal;
  std::optional<ThreatActor> actor;
  if (!actor_name.empty()) {
    actor = actor_from_string(actor_name);
    if (!actor)
      throw UsageFailure{"unknown actor '" + actor_name +
                         "'; one of owner_driver, evil_mechanic, thief, "
                         "remote_attacker"};
  }

  LtsLimits limits = limits_from_environment(err);
  Environment env = builtin_env();
  AttackScenario scenario = attack1_scenario(env, mode, actor);
  std::vector<TestCase> suite =
      generate_tests(scenario, env, depth, maximal, limits);

  if (suite.empty()) {
    Verdict dl = deadlock_free(build_lts(compose_attack(scenario, env), env,
                                         limits));
    if (dl.kind() == Verdict::Kind::Deadlock && dl.witness().empty())
      err << "warning: composition deadlocks at the empty trace\n";
  }

  EmitMeta meta{scenario.name, scenario.actor};
  std::string document =
      format == "capl" ? emit_capl(suite, meta) : emit_xml(suite, meta);
  if (out_path.empty()) {
    out << document;
  } else {
    std::ofstream file(out_path, std::ios::binary);
    if (!file) throw UsageFailure{"cannot write '" + out_path + "'"};
    file << document;
  }
  return kExitOk;
}

int run_fmt(const std::string& path, std::ostream& out, std::ostream& err) {
  out << print(parse_file(path, err));
  return kExitOk;
}

int run_builtin_list(std::ostream& out) {
  out << "models:";
  for (const std::string& name : builtin_model_names()) out << " " << name;
  out << "\nscenarios:";
  for (const std::string& name : builtin_scenario_names()) out << " " << name;
  out << "\n";
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out,
        std::ostream& err) {
  CLI::App app{"miniature CSP toolkit for automotive security test generation",
               "cspauto"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);

  auto* check = app.add_subcommand("check", "check a refinement");
  std::string model = "traces";
  std::string spec_addr;
  std::string impl_addr;
  check->add_option("--model", model, "semantic model")
      ->check(CLI::IsMember({"traces", "failures"}))
      ->capture_default_str();
  check->add_option("spec", spec_addr, "FILE.cspa:Name or builtin:Name")
      ->required();
  check->add_option("impl", impl_addr, "FILE.cspa:Name or builtin:Name")
      ->required();

  auto* traces = app.add_subcommand("traces", "list traces up to a depth");
  std::string traces_addr;
  std::size_t traces_depth = 8;
  traces->add_option("process", traces_addr, "FILE.cspa:Name or builtin:Name")
      ->required();
  traces->add_option("--depth", traces_depth, "maximum trace length")
      ->capture_default_str();

  auto* deadlock = app.add_subcommand("deadlock", "check deadlock freedom");
  std::string deadlock_addr;
  deadlock
      ->add_option("process", deadlock_addr, "FILE.cspa:Name or builtin:Name")
      ->required();

  auto* testgen =
      app.add_subcommand("testgen", "generate security test cases");
  std::string scenario_name = "attack1";
  std::string mode_name = "literal";
  std::size_t testgen_depth = 8;
  bool maximal = false;
  std::string actor_name;
  std::string format = "xml";
  std::string out_path;
  testgen->add_option("--scenario", scenario_name, "scenario name")
      ->capture_default_str();
  testgen->add_option("--mode", mode_name, "composition mode")
      ->check(CLI::IsMember({"literal", "shared"}))
      ->capture_default_str();
  testgen->add_option("--depth", testgen_depth, "maximum trace length")
      ->capture_default_str();
  testgen->add_flag("--maximal", maximal, "drop proper prefixes");
  testgen->add_option("--actor", actor_name, "threat actor profile");
  testgen->add_option("--format", format, "output format")
      ->check(CLI::IsMember({"xml", "capl"}))
      ->capture_default_str();
  testgen->add_option("--out", out_path, "output file (default: stdout)");

  auto* fmt = app.add_subcommand("fmt", "canonically format a script");
  std::string fmt_path;
  fmt->add_option("file", fmt_path, "a .cspa script")->required();

  auto* builtin = app.add_subcommand("builtin", "shipped models and scenarios");
  bool list = false;
  builtin->add_flag("--list", list, "list names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(check))
      return run_check(model, spec_addr, impl_addr, out, err);
    if (app.got_subcommand(traces))
      return run_traces(traces_addr, traces_depth, out, err);
    if (app.got_subcommand(deadlock)) return run_deadlock(deadlock_addr, out, err);
    if (app.got_subcommand(testgen))
      return run_testgen(scenario_name, mode_name, testgen_depth, maximal,
                         actor_name, format, out_path, out, err);
    if (app.got_subcommand(fmt)) return run_fmt(fmt_path, out, err);
    if (app.got_subcommand(builtin)) return run_builtin_list(out);
  } catch (const UsageFailure& failure) {
    err << "error: " << failure.message << "\n";
    return kExitUsage;
  } catch (const Error& error) {
    err << "error: " << error.what() << "\n";
    if (error.code() == ErrorCode::Truncated ||
        error.code() == ErrorCode::SpecTruncated)
      return kExitInconclusive;
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace cspauto::cli
