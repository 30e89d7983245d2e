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

#include "cspauto/emit.hpp"
#include "oracles.hpp"
#include "xml_reader.hpp"

using namespace cspauto;
using cspauto::testsupport::parse_xml;
using cspauto::testsupport::validate_testsuite;

namespace {

std::vector<TestCase> shared_suite(Environment& env, std::size_t depth,
                                   bool maximal) {
  AttackScenario scenario = attack1_scenario(env, CompositionMode::SharedOnly);
  return generate_tests(scenario, env, depth, maximal);
}

}  // namespace

TEST_CASE("empty suite: a bare testsuite root with metadata") {
  std::string doc = emit_xml({}, {"attack1", {}});
  CHECK(doc ==
        "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
        "<testsuite scenario=\"attack1\" generator=\"cspauto\" "
        "version=\"0.1.0\">\n"
        "</testsuite>\n");
  auto root = parse_xml(doc);
  validate_testsuite(root);
  CHECK(root.children.empty());
  CHECK(root.attr("scenario") == "attack1");
}

TEST_CASE("single-step test case maps onto the schema") {
  TestCase tc;
  tc.scenario = "attack1";
  tc.id = "tc_0000000000000001";
  Event spoof = Event::visible("spoofing", {Value::atom("engine_cu"),
                                            Value::integer(2)});
  tc.events = {spoof};
  tc.attacker_events = {spoof};
  std::string doc = emit_xml({tc}, {"attack1", ThreatActor::Thief});
  auto root = parse_xml(doc);
  validate_testsuite(root);
  CHECK(root.attr("actor") == "thief");
  REQUIRE(root.children.size() == 1);
  const auto& testcase = root.child(0);
  CHECK(testcase.attr("id") == "tc_0000000000000001");
  REQUIRE(testcase.children.size() == 1);
  const auto& step = testcase.child(0);
  CHECK(step.attr("index") == "0");
  CHECK(step.attr("role") == "inject");
  CHECK(step.attr("channel") == "spoofing");
  CHECK(step.attr("args") == "engine_cu,2");
}

TEST_CASE("xml round-trips the generator's traces through the reader") {
  Environment env = builtin_env();
  auto suite = shared_suite(env, 5, false);
  REQUIRE(!suite.empty());
  std::string doc = emit_xml(suite, {"attack1", {}});
  auto root = parse_xml(doc);
  validate_testsuite(root);
  REQUIRE(root.children.size() == suite.size());
  for (std::size_t i = 0; i < suite.size(); ++i) {
    const auto& tc = root.child(i);
    CHECK(tc.attr("id") == suite[i].id);
    REQUIRE(tc.children.size() == suite[i].events.size());
    for (std::size_t j = 0; j < suite[i].events.size(); ++j) {
      const Event& e = suite[i].events[j];
      const auto& step = tc.child(j);
      CHECK(step.attr("channel") == e.channel());
      std::string args;
      for (std::size_t k = 0; k < e.components().size(); ++k) {
        if (k) args += ",";
        args += e.components()[k].to_string();
      }
      CHECK(step.attr("args") == args);
      CHECK(step.attr("role") ==
            (suite[i].is_attacker_event(e) ? "inject" : "observe"));
    }
  }
}

TEST_CASE("inject and observe roles follow the attacker channels") {
  Environment env = builtin_env();
  auto suite = shared_suite(env, 4, true);
  REQUIRE(!suite.empty());
  std::string doc = emit_xml(suite, {"attack1", {}});
  auto root = parse_xml(doc);
  for (std::size_t i = 0; i < suite.size(); ++i) {
    for (std::size_t j = 0; j < suite[i].events.size(); ++j) {
      bool inject = suite[i].events[j].channel() == "spoofing";
      CHECK(root.child(i).child(j).attr("role") ==
            (inject ? "inject" : "observe"));
    }
  }
}

TEST_CASE("emission is deterministic byte for byte") {
  Environment env = builtin_env();
  auto suite = shared_suite(env, 5, true);
  EmitMeta meta{"attack1", {}};
  CHECK(emit_xml(suite, meta) == emit_xml(suite, meta));
  CHECK(emit_capl(suite, meta) == emit_capl(suite, meta));

  Environment env2 = builtin_env();
  auto suite2 = shared_suite(env2, 5, true);
  CHECK(emit_xml(suite, meta) == emit_xml(suite2, meta));
}

TEST_CASE("xml escapes attribute values") {
  TestCase tc;
  tc.scenario = "x";
  tc.id = "tc_x";
  tc.events = {Event::visible("spoofing", {Value::atom("engine_cu"),
                                           Value::integer(2)})};
  tc.attacker_events = tc.events;
  std::string doc = emit_xml({tc}, {"a<b>&\"'c", {}});
  CHECK(doc.find("scenario=\"a&lt;b&gt;&amp;&quot;&apos;c\"") !=
        std::string::npos);
  CHECK(parse_xml(doc).attr("scenario") == "a<b>&\"'c");
}

TEST_CASE("empty capl suite is the header block only") {
  std::string doc = emit_capl({}, {"attack1", ThreatActor::Thief});
  CHECK(doc ==
        "/*\n"
        " * generated by cspauto 0.1.0\n"
        " * scenario: attack1\n"
        " * actor: thief\n"
        " * test cases: 0\n"
        " */\n");
}

TEST_CASE("capl renders one function per test case") {
  Environment env = builtin_env();
  auto suite = shared_suite(env, 4, true);
  REQUIRE(!suite.empty());
  std::string doc = emit_capl(suite, {"attack1", {}});
  for (const TestCase& tc : suite) {
    CHECK(doc.find("testcase testcase_" + tc.id + "()") != std::string::npos);
  }
  // 7-bit clean with LF endings and a trailing newline
  for (unsigned char c : doc) CHECK(c < 128);
  CHECK(doc.find('\r') == std::string::npos);
  CHECK(doc.back() == '\n');
  // inject steps render output placeholders, observe steps wait
  CHECK(doc.find("output(/* spoofing: engine_cu,2 */);") != std::string::npos);
  CHECK(doc.find("testWaitForMessage(/* gateway_canhs1 */ 1000);") !=
        std::string::npos);
}
