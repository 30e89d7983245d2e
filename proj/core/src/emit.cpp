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

#include "cspauto/emit.hpp"

#include "cspauto/version.hpp"

namespace cspauto {

namespace {

std::string xml_escape(std::string_view raw) {
  std::string out;
  out.reserve(raw.size());
  for (char c : raw) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      case '\'': out += "&apos;"; break;
      default: out += c;
    }
  }
  return out;
}

std::string channel_of(const Event& e) {
  if (e.is_tick()) return "tick";
  return e.channel();
}

std::string args_of(const Event& e) {
  std::string out;
  for (std::size_t i = 0; i < e.components().size(); ++i) {
    if (i) out += ",";
    out += e.components()[i].to_string();
  }
  return out;
}

// 7-bit rendering for CAPL comments
std::string ascii_event(const Event& e) {
  if (e.is_tick()) return "tick";
  if (e.is_tau()) return "tau";
  return e.to_string();
}

}  // namespace

std::string emit_xml(const std::vector<TestCase>& suite, const EmitMeta& meta) {
  std::string out = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
  out += "<testsuite scenario=\"" + xml_escape(meta.scenario) + "\"";
  if (meta.actor) out += " actor=\"" + to_string(*meta.actor) + "\"";
  out += " generator=\"" + std::string(kGeneratorName) + "\"";
  out += " version=\"" + std::string(kVersion) + "\">\n";
  for (const TestCase& tc : suite) {
    out += "  <testcase id=\"" + xml_escape(tc.id) + "\">\n";
    for (std::size_t i = 0; i < tc.events.size(); ++i) {
      const Event& e = tc.events[i];
      out += "    <step index=\"" + std::to_string(i) + "\"";
      out += " role=\"";
      out += tc.is_attacker_event(e) ? "inject" : "observe";
      out += "\"";
      out += " channel=\"" + xml_escape(channel_of(e)) + "\"";
      out += " args=\"" + xml_escape(args_of(e)) + "\"/>\n";
    }
    out += "  </testcase>\n";
  }
  out += "</testsuite>\n";
  return out;
}

std::string emit_capl(const std::vector<TestCase>& suite,
                      const EmitMeta& meta) {
  std::string out = "/*\n";
  out += " * generated by " + std::string(kGeneratorName) + " " +
         std::string(kVersion) + "\n";
  out += " * scenario: " + meta.scenario + "\n";
  if (meta.actor) out += " * actor: " + to_string(*meta.actor) + "\n";
  out += " * test cases: " + std::to_string(suite.size()) + "\n";
  out += " */\n";
  for (const TestCase& tc : suite) {
    out += "\n";
    out += "testcase testcase_" + tc.id + "()\n";
    out += "{\n";
    for (std::size_t i = 0; i < tc.events.size(); ++i) {
      const Event& e = tc.events[i];
      bool inject = tc.is_attacker_event(e);
      out += "  /* step " + std::to_string(i) + ": ";
      out += inject ? "inject " : "observe ";
      out += ascii_event(e) + " */\n";
      if (inject) {
        out += "  output(/* " + channel_of(e);
        if (!args_of(e).empty()) out += ": " + args_of(e);
        out += " */);\n";
      } else {
        out += "  testWaitForMessage(/* " + channel_of(e) + " */ 1000);\n";
      }
    }
    out += "}\n";
  }
  return out;
}

}  // namespace cspauto
