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

#include "cspauto/printer.hpp"

#include <map>
#include <set>

namespace cspauto {

namespace {

// Binding strength, loosest first; matches the grammar's nesting. A child
// below its context's level needs parentheses.
enum Level : int {
  kChoice = 1,
  kIChoice = 2,
  kPar = 3,
  kPrefix = 4,
  kAtom = 5,
};

int level_of(TermRef t) {
  switch (t->kind()) {
    case TermKind::ExtChoice:
      return kChoice;
    case TermKind::IntChoice:
      return kIChoice;
    case TermKind::SyncPar:
    case TermKind::GenPar:
    case TermKind::AlphaPar:
    case TermKind::Interleave:
      return kPar;
    case TermKind::Prefix:
    case TermKind::Input:
      return kPrefix;
    default:
      return kAtom;
  }
}

std::string render_value_set(const std::vector<Value>& values) {
  // contiguous all-integer sets compress to a range
  if (values.size() >= 2 && values.front().is_int()) {
    bool contiguous = true;
    for (std::size_t i = 0; i + 1 < values.size() && contiguous; ++i)
      contiguous = values[i].is_int() && values[i + 1].is_int() &&
                   values[i + 1].int_value() == values[i].int_value() + 1;
    if (contiguous)
      return "{" + std::to_string(values.front().int_value()) + ".." +
             std::to_string(values.back().int_value()) + "}";
  }
  std::string out = "{";
  for (std::size_t i = 0; i < values.size(); ++i) {
    if (i) out += ", ";
    out += values[i].to_string();
  }
  return out + "}";
}

// Event sets print as the sorted channel names they cover; validation
// guarantees whole-channel coverage.
std::string render_event_set(const EventSet& set) {
  std::set<std::string> channels;
  for (const Event& e : set) channels.insert(e.channel());
  std::string out = "{";
  bool first = true;
  for (const std::string& c : channels) {
    if (!first) out += ", ";
    first = false;
    out += c;
  }
  return out + "}";
}

std::string render_expr(const ValueExpr& ve) {
  if (const Value* v = std::get_if<Value>(&ve)) return v->to_string();
  return std::get<VarName>(ve).name;
}

std::string render(TermRef t, int context) {
  std::string out;
  switch (t->kind()) {
    case TermKind::Stop:
      out = "STOP";
      break;
    case TermKind::Skip:
      out = "SKIP";
      break;
    case TermKind::Ref:
      out = t->as_ref().name;
      break;
    case TermKind::Prefix: {
      const auto& d = t->as_prefix();
      out = d.channel;
      for (const ValueExpr& c : d.comps) out += "." + render_expr(c);
      out += " -> " + render(d.cont, kPrefix);
      break;
    }
    case TermKind::Input: {
      const auto& d = t->as_input();
      out = d.channel;
      for (const EventComp& c : d.comps) {
        if (const ValueExpr* ve = std::get_if<ValueExpr>(&c)) {
          out += "." + render_expr(*ve);
        } else {
          const Binder& b = std::get<Binder>(c);
          out += "?" + b.var + ":" + render_value_set(b.domain);
        }
      }
      out += " -> " + render(d.cont, kPrefix);
      break;
    }
    case TermKind::ExtChoice: {
      const auto& d = t->as_pair();
      out = render(d.left, kChoice + 1) + " [] " + render(d.right, kChoice);
      break;
    }
    case TermKind::IntChoice: {
      const auto& d = t->as_pair();
      out = render(d.left, kIChoice + 1) + " |~| " + render(d.right, kIChoice);
      break;
    }
    case TermKind::SyncPar: {
      const auto& d = t->as_pair();
      out = render(d.left, kPar + 1) + " || " + render(d.right, kPar);
      break;
    }
    case TermKind::Interleave: {
      const auto& d = t->as_pair();
      out = render(d.left, kPar + 1) + " ||| " + render(d.right, kPar);
      break;
    }
    case TermKind::GenPar: {
      const auto& d = t->as_gen_par();
      out = render(d.left, kPar + 1) + " [| " + render_event_set(d.sync) +
            " |] " + render(d.right, kPar);
      break;
    }
    case TermKind::AlphaPar: {
      const auto& d = t->as_alpha_par();
      out = render(d.left, kPar + 1) + " [ " + render_event_set(d.left_alpha) +
            " || " + render_event_set(d.right_alpha) + " ] " +
            render(d.right, kPar);
      break;
    }
  }
  if (level_of(t) < context) return "(" + out + ")";
  return out;
}

}  // namespace

std::string print_value_set(const std::vector<Value>& values) {
  return render_value_set(values);
}

std::string print_term(TermRef t) { return render(t, kChoice); }

std::string print(const Environment& env) {
  std::string out;
  for (const auto& [name, decl] : env.channels()) {
    out += "channel " + name;
    for (const auto& domain : decl.domains)
      out += " : " + render_value_set(domain);
    out += "\n";
  }
  if (!env.channels().empty() && !env.definitions().empty()) out += "\n";
  for (const auto& [name, body] : env.definitions())
    out += name + " = " + print_term(body) + "\n";
  return out;
}

}  // namespace cspauto
