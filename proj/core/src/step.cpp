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

#include "cspauto/step.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

#include "cspauto/error.hpp"

namespace cspauto {

namespace {

// Joint enumeration of the ground instances of a communication. Positions
// referring to the same variable stay consistent (c?x:{0,1}!x yields c.0.0
// and c.1.1, never c.0.1), and a later binder shadows an earlier one of the
// same name for the positions and continuation after it.
struct EventInstance {
  std::vector<Value> components;
  std::map<std::string, Value> binding;  // final (post-shadowing) assignment
};

std::vector<EventInstance> enumerate_instances(
    const std::string& channel, const std::vector<EventComp>& comps,
    const std::map<std::string, std::vector<Value>>& outer_domains) {
  struct Slot {
    std::string name;  // empty for anonymous outer uses? always named
    std::vector<Value> domain;
  };
  std::vector<Slot> slots;
  std::map<std::string, std::size_t> name_to_slot;

  // Each position is a fixed value or a slot index.
  struct Pos {
    bool fixed;
    Value value = Value::integer(0);
    std::size_t slot = 0;
  };
  std::vector<Pos> positions;
  positions.reserve(comps.size());

  for (const EventComp& comp : comps) {
    if (const ValueExpr* ve = std::get_if<ValueExpr>(&comp)) {
      if (const Value* v = std::get_if<Value>(ve)) {
        positions.push_back({true, *v, 0});
      } else {
        const std::string& name = std::get<VarName>(*ve).name;
        auto it = name_to_slot.find(name);
        if (it == name_to_slot.end()) {
          auto outer = outer_domains.find(name);
          if (outer == outer_domains.end())
            throw Error(ErrorCode::InvalidArgument,
                        "variable '" + name + "' on channel '" + channel +
                            "' is unbound");
          name_to_slot[name] = slots.size();
          slots.push_back({name, outer->second});
          it = name_to_slot.find(name);
        }
        positions.push_back({false, Value::integer(0), it->second});
      }
    } else {
      const Binder& b = std::get<Binder>(comp);
      name_to_slot[b.var] = slots.size();  // shadows any earlier slot
      slots.push_back({b.var, b.domain});
      positions.push_back({false, Value::integer(0), slots.size() - 1});
    }
  }

  std::vector<EventInstance> out;
  std::vector<std::size_t> choice(slots.size(), 0);
  for (;;) {
    EventInstance inst;
    inst.components.reserve(positions.size());
    for (const Pos& p : positions)
      inst.components.push_back(p.fixed ? p.value
                                        : slots[p.slot].domain[choice[p.slot]]);
    for (const auto& [name, slot] : name_to_slot)
      inst.binding.emplace(name, slots[slot].domain[choice[slot]]);
    out.push_back(std::move(inst));

    // advance the odometer
    std::size_t i = 0;
    for (; i < slots.size(); ++i) {
      if (++choice[i] < slots[i].domain.size()) break;
      choice[i] = 0;
    }
    if (i == slots.size()) break;
  }
  return out;
}

using Unfolding = std::set<std::string>;

std::vector<Transition> step_impl(TermRef t, const Environment& env,
                                  Unfolding& unfolding);

TermRef rebuild_par(TermRef original, TermRef left, TermRef right) {
  switch (original->kind()) {
    case TermKind::SyncPar:
      return Term::sync_par(left, right);
    case TermKind::Interleave:
      return Term::interleave(left, right);
    case TermKind::GenPar:
      return Term::gen_par(left, original->as_gen_par().sync, right);
    case TermKind::AlphaPar: {
      const auto& d = original->as_alpha_par();
      return Term::alpha_par(left, d.left_alpha, d.right_alpha, right);
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "not a parallel term");
  }
}

std::vector<Transition> par_step(TermRef t, const Environment& env,
                                 Unfolding& unfolding) {
  TermRef left;
  TermRef right;
  // allowed: may the side perform this visible event at all;
  // synced: must both sides agree on it.
  std::function<bool(const Event&, bool)> allowed;
  std::function<bool(const Event&)> synced;
  switch (t->kind()) {
    case TermKind::SyncPar: {
      const auto& d = t->as_pair();
      left = d.left;
      right = d.right;
      allowed = [](const Event&, bool) { return true; };
      synced = [](const Event&) { return true; };
      break;
    }
    case TermKind::Interleave: {
      const auto& d = t->as_pair();
      left = d.left;
      right = d.right;
      allowed = [](const Event&, bool) { return true; };
      synced = [](const Event&) { return false; };
      break;
    }
    case TermKind::GenPar: {
      const auto& d = t->as_gen_par();
      left = d.left;
      right = d.right;
      const EventSet& sync = d.sync;
      allowed = [](const Event&, bool) { return true; };
      synced = [&sync](const Event& e) { return sync.contains(e); };
      break;
    }
    case TermKind::AlphaPar: {
      const auto& d = t->as_alpha_par();
      left = d.left;
      right = d.right;
      const EventSet& la = d.left_alpha;
      const EventSet& ra = d.right_alpha;
      allowed = [&la, &ra](const Event& e, bool is_left) {
        return is_left ? la.contains(e) : ra.contains(e);
      };
      synced = [&la, &ra](const Event& e) {
        return la.contains(e) && ra.contains(e);
      };
      break;
    }
    default:
      throw Error(ErrorCode::InvalidArgument, "not a parallel term");
  }

  auto ls = step_impl(left, env, unfolding);
  auto rs = step_impl(right, env, unfolding);

  std::vector<Transition> out;
  bool left_tick = false;
  bool right_tick = false;

  for (const Transition& lt : ls) {
    if (lt.event.is_tau()) {
      out.push_back({lt.event, rebuild_par(t, lt.target, right)});
    } else if (lt.event.is_tick()) {
      left_tick = true;  // termination is distributed; handled below
    } else if (!allowed(lt.event, true)) {
      continue;  // blocked by the side's alphabet
    } else if (!synced(lt.event)) {
      out.push_back({lt.event, rebuild_par(t, lt.target, right)});
    } else {
      for (const Transition& rt : rs) {
        if (rt.event == lt.event)
          out.push_back({lt.event, rebuild_par(t, lt.target, rt.target)});
      }
    }
  }
  for (const Transition& rt : rs) {
    if (rt.event.is_tau()) {
      out.push_back({rt.event, rebuild_par(t, left, rt.target)});
    } else if (rt.event.is_tick()) {
      right_tick = true;
    } else if (!allowed(rt.event, false)) {
      continue;
    } else if (!synced(rt.event)) {
      out.push_back({rt.event, rebuild_par(t, left, rt.target)});
    }
    // synchronized moves were paired in the left pass
  }
  if (left_tick && right_tick) out.push_back({Event::tick(), Term::stop()});
  return out;
}

std::vector<Transition> step_impl(TermRef t, const Environment& env,
                                  Unfolding& unfolding) {
  switch (t->kind()) {
    case TermKind::Stop:
      return {};
    case TermKind::Skip:
      return {{Event::tick(), Term::stop()}};
    case TermKind::Prefix: {
      const auto& d = t->as_prefix();
      std::vector<Value> components;
      components.reserve(d.comps.size());
      for (const ValueExpr& c : d.comps) {
        if (const Value* v = std::get_if<Value>(&c)) {
          components.push_back(*v);
        } else {
          throw Error(ErrorCode::InvalidArgument,
                      "variable '" + std::get<VarName>(c).name +
                          "' is unbound; step needs a closed term");
        }
      }
      return {{Event::visible(d.channel, std::move(components)), d.cont}};
    }
    case TermKind::Input: {
      const auto& d = t->as_input();
      std::vector<Transition> out;
      for (EventInstance& inst : enumerate_instances(d.channel, d.comps, {})) {
        out.push_back({Event::visible(d.channel, std::move(inst.components)),
                       substitute(d.cont, inst.binding)});
      }
      return out;
    }
    case TermKind::ExtChoice: {
      const auto& d = t->as_pair();
      std::vector<Transition> out;
      for (const Transition& lt : step_impl(d.left, env, unfolding)) {
        if (lt.event.is_tau())
          out.push_back({lt.event, Term::ext_choice(lt.target, d.right)});
        else
          out.push_back(lt);  // a visible or tick move resolves the choice
      }
      for (const Transition& rt : step_impl(d.right, env, unfolding)) {
        if (rt.event.is_tau())
          out.push_back({rt.event, Term::ext_choice(d.left, rt.target)});
        else
          out.push_back(rt);
      }
      return out;
    }
    case TermKind::IntChoice: {
      const auto& d = t->as_pair();
      return {{Event::tau(), d.left}, {Event::tau(), d.right}};
    }
    case TermKind::SyncPar:
    case TermKind::GenPar:
    case TermKind::AlphaPar:
    case TermKind::Interleave:
      return par_step(t, env, unfolding);
    case TermKind::Ref: {
      const std::string& name = t->as_ref().name;
      if (unfolding.count(name))
        throw Error(ErrorCode::UnguardedRecursion,
                    "unfolding '" + name + "' loops without a transition");
      TermRef body = env.definition(name);
      unfolding.insert(name);
      auto out = step_impl(body, env, unfolding);
      unfolding.erase(name);
      return out;
    }
  }
  return {};  // unreachable
}

}  // namespace

std::vector<Transition> step(TermRef t, const Environment& env) {
  Unfolding unfolding;
  auto out = step_impl(t, env, unfolding);
  std::sort(out.begin(), out.end(), [](const Transition& a, const Transition& b) {
    if (a.event != b.event) return a.event < b.event;
    return term_order(a.target, b.target) < 0;
  });
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

namespace {

void alphabet_walk(TermRef t, const Environment& env,
                   std::map<std::string, std::vector<Value>> var_domains,
                   std::set<std::string>& visited_refs, EventSet& out) {
  switch (t->kind()) {
    case TermKind::Stop:
    case TermKind::Skip:
      return;
    case TermKind::Prefix: {
      const auto& d = t->as_prefix();
      std::vector<EventComp> comps;
      comps.reserve(d.comps.size());
      for (const ValueExpr& c : d.comps) comps.emplace_back(c);
      for (EventInstance& inst :
           enumerate_instances(d.channel, comps, var_domains))
        out.insert(Event::visible(d.channel, std::move(inst.components)));
      alphabet_walk(d.cont, env, std::move(var_domains), visited_refs, out);
      return;
    }
    case TermKind::Input: {
      const auto& d = t->as_input();
      for (EventInstance& inst :
           enumerate_instances(d.channel, d.comps, var_domains))
        out.insert(Event::visible(d.channel, std::move(inst.components)));
      for (const EventComp& c : d.comps)
        if (const Binder* b = std::get_if<Binder>(&c))
          var_domains[b->var] = b->domain;
      alphabet_walk(d.cont, env, std::move(var_domains), visited_refs, out);
      return;
    }
    case TermKind::ExtChoice:
    case TermKind::IntChoice:
    case TermKind::SyncPar:
    case TermKind::Interleave: {
      const auto& d = t->as_pair();
      alphabet_walk(d.left, env, var_domains, visited_refs, out);
      alphabet_walk(d.right, env, std::move(var_domains), visited_refs, out);
      return;
    }
    case TermKind::GenPar: {
      const auto& d = t->as_gen_par();
      alphabet_walk(d.left, env, var_domains, visited_refs, out);
      alphabet_walk(d.right, env, std::move(var_domains), visited_refs, out);
      return;
    }
    case TermKind::AlphaPar: {
      const auto& d = t->as_alpha_par();
      alphabet_walk(d.left, env, var_domains, visited_refs, out);
      alphabet_walk(d.right, env, std::move(var_domains), visited_refs, out);
      return;
    }
    case TermKind::Ref: {
      const std::string& name = t->as_ref().name;
      if (!visited_refs.insert(name).second) return;
      alphabet_walk(env.definition(name), env, {}, visited_refs, out);
      return;
    }
  }
}

}  // namespace

EventSet alphabet(TermRef t, const Environment& env) {
  EventSet out;
  std::set<std::string> visited;
  alphabet_walk(t, env, {}, visited, out);
  return out;
}

namespace {

// Names reachable from `t` without passing through a prefix.
void unguarded_refs(TermRef t, std::set<std::string>& out) {
  switch (t->kind()) {
    case TermKind::Stop:
    case TermKind::Skip:
    case TermKind::Prefix:
    case TermKind::Input:
      return;
    case TermKind::Ref:
      out.insert(t->as_ref().name);
      return;
    case TermKind::ExtChoice:
    case TermKind::IntChoice:
    case TermKind::SyncPar:
    case TermKind::Interleave:
      unguarded_refs(t->as_pair().left, out);
      unguarded_refs(t->as_pair().right, out);
      return;
    case TermKind::GenPar:
      unguarded_refs(t->as_gen_par().left, out);
      unguarded_refs(t->as_gen_par().right, out);
      return;
    case TermKind::AlphaPar:
      unguarded_refs(t->as_alpha_par().left, out);
      unguarded_refs(t->as_alpha_par().right, out);
      return;
  }
}

}  // namespace

GuardednessResult check_guarded(const Environment& env) {
  std::map<std::string, std::set<std::string>> graph;
  for (const auto& [name, body] : env.definitions()) {
    std::set<std::string> succ;
    unguarded_refs(body, succ);
    for (const std::string& s : succ)
      if (!env.has_definition(s))
        throw Error(ErrorCode::UnboundReference,
                    "process '" + s + "' referenced by " + name +
                        " is not defined");
    graph[name] = std::move(succ);
  }

  // Shortest cycle, lexicographically least among shortest: one BFS per
  // start node, nodes visited in sorted order.
  std::vector<std::string> best;
  for (const auto& [start, _] : graph) {
    std::map<std::string, std::string> parent;
    std::vector<std::string> frontier = {start};
    std::vector<std::string> found;
    while (!frontier.empty() && found.empty()) {
      std::vector<std::string> next;
      for (const std::string& node : frontier) {
        for (const std::string& succ : graph.at(node)) {
          if (succ == start) {
            found.clear();
            for (std::string cur = node; cur != start; cur = parent.at(cur))
              found.push_back(cur);
            found.push_back(start);
            std::reverse(found.begin(), found.end());
            break;
          }
          if (!parent.count(succ) && succ != start) {
            parent[succ] = node;
            next.push_back(succ);
          }
        }
        if (!found.empty()) break;
      }
      frontier = std::move(next);
    }
    if (!found.empty() &&
        (best.empty() || found.size() < best.size() ||
         (found.size() == best.size() && found < best)))
      best = std::move(found);
  }

  GuardednessResult result;
  if (!best.empty()) {
    result.ok = false;
    result.cycle = std::move(best);
  }
  return result;
}

}  // namespace cspauto
