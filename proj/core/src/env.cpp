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

#include "cspauto/env.hpp"

#include <algorithm>

#include "cspauto/error.hpp"
#include "cspauto/step.hpp"

namespace cspauto {

void Environment::declare_channel(const std::string& name,
                                  std::vector<std::vector<Value>> domains) {
  if (!is_lower_identifier(name))
    throw Error(ErrorCode::InvalidArgument,
                "channel name '" + name + "' is not a lowercase identifier");
  for (auto& d : domains) {
    normalize_value_set(d);
    if (d.empty())
      throw Error(ErrorCode::InvalidArgument,
                  "channel '" + name + "' declares an empty domain");
  }
  channels_[name] = ChannelDecl{std::move(domains)};
}

void Environment::define(const std::string& name, TermRef body) {
  if (!is_upper_identifier(name))
    throw Error(ErrorCode::InvalidArgument,
                "process name '" + name + "' is not an uppercase identifier");
  definitions_[name] = body;
}

bool Environment::has_channel(const std::string& name) const {
  return channels_.count(name) != 0;
}

bool Environment::has_definition(const std::string& name) const {
  return definitions_.count(name) != 0;
}

TermRef Environment::definition(const std::string& name) const {
  auto it = definitions_.find(name);
  if (it == definitions_.end())
    throw Error(ErrorCode::UnboundReference,
                "process '" + name + "' is not defined");
  return it->second;
}

const ChannelDecl& Environment::channel(const std::string& name) const {
  auto it = channels_.find(name);
  if (it == channels_.end())
    throw Error(ErrorCode::UnknownChannel,
                "channel '" + name + "' is not declared");
  return it->second;
}

std::vector<Event> Environment::channel_events(const std::string& name) const {
  const ChannelDecl& decl = channel(name);
  std::vector<std::vector<Value>> tuples = {{}};
  for (const auto& domain : decl.domains) {
    std::vector<std::vector<Value>> next;
    next.reserve(tuples.size() * domain.size());
    for (const auto& tuple : tuples) {
      for (const Value& v : domain) {
        auto extended = tuple;
        extended.push_back(v);
        next.push_back(std::move(extended));
      }
    }
    tuples = std::move(next);
  }
  std::vector<Event> events;
  events.reserve(tuples.size());
  for (auto& tuple : tuples)
    events.push_back(Event::visible(name, std::move(tuple)));
  return events;
}

namespace {

bool value_in(const std::vector<Value>& domain, const Value& v) {
  return std::binary_search(domain.begin(), domain.end(), v);
}

bool domain_subset(const std::vector<Value>& sub,
                   const std::vector<Value>& super) {
  return std::includes(super.begin(), super.end(), sub.begin(), sub.end());
}

using VarDomains = std::map<std::string, const std::vector<Value>*>;

void check_ground_event(const Environment& env, const Event& e,
                        const std::string& where) {
  const ChannelDecl& decl = env.channel(e.channel());
  if (decl.domains.size() != e.components().size())
    throw Error(ErrorCode::ArityMismatch,
                "event " + e.to_string() + " in " + where + " has " +
                    std::to_string(e.components().size()) +
                    " components, channel declares " +
                    std::to_string(decl.domains.size()));
  for (std::size_t i = 0; i < decl.domains.size(); ++i) {
    if (!value_in(decl.domains[i], e.components()[i]))
      throw Error(ErrorCode::DomainMismatch,
                  "component " + std::to_string(i) + " of " + e.to_string() +
                      " in " + where + " is outside the declared domain");
  }
}

// A set is printable iff, per channel, it contains either nothing or the
// channel's full event extension; the printer renders the group as the bare
// channel name.
void check_set_representable(const Environment& env, const EventSet& set,
                             const std::string& where) {
  std::map<std::string, std::size_t> counts;
  for (const Event& e : set) {
    check_ground_event(env, e, where);
    counts[e.channel()] += 1;
  }
  for (const auto& [channel, count] : counts) {
    std::size_t extension = 1;
    for (const auto& d : env.channel(channel).domains) extension *= d.size();
    if (count != extension)
      throw Error(ErrorCode::InvalidArgument,
                  where + " covers channel '" + channel +
                      "' only partially; definition sets must list whole "
                      "channels or plain events");
  }
}

void check_component(const std::string& channel,
                     const std::vector<Value>& domain, const ValueExpr& comp,
                     const VarDomains& vars, std::size_t index) {
  if (const Value* v = std::get_if<Value>(&comp)) {
    if (v->is_atom() && vars.count(v->atom_name()))
      throw Error(ErrorCode::InvalidArgument,
                  "atom '" + v->atom_name() + "' on channel '" + channel +
                      "' collides with a bound variable of the same name");
    if (!value_in(domain, *v))
      throw Error(ErrorCode::DomainMismatch,
                  "component " + std::to_string(index) + " of channel '" +
                      channel + "' is outside the declared domain");
    return;
  }
  const VarName& var = std::get<VarName>(comp);
  auto it = vars.find(var.name);
  if (it == vars.end())
    throw Error(ErrorCode::InvalidArgument,
                "variable '" + var.name + "' on channel '" + channel +
                    "' is not bound here");
  if (!domain_subset(*it->second, domain))
    throw Error(ErrorCode::DomainMismatch,
                "variable '" + var.name + "' ranges outside component " +
                    std::to_string(index) + " of channel '" + channel + "'");
}

void check_term(const Environment& env, TermRef t, VarDomains vars,
                const std::string& def_name) {
  switch (t->kind()) {
    case TermKind::Stop:
    case TermKind::Skip:
    case TermKind::Ref:
      return;
    case TermKind::Prefix: {
      const auto& d = t->as_prefix();
      const ChannelDecl& decl = env.channel(d.channel);
      if (decl.domains.size() != d.comps.size())
        throw Error(ErrorCode::ArityMismatch,
                    "channel '" + d.channel + "' in " + def_name + " used with " +
                        std::to_string(d.comps.size()) +
                        " components, declared with " +
                        std::to_string(decl.domains.size()));
      for (std::size_t i = 0; i < d.comps.size(); ++i)
        check_component(d.channel, decl.domains[i], d.comps[i], vars, i);
      check_term(env, d.cont, std::move(vars), def_name);
      return;
    }
    case TermKind::Input: {
      const auto& d = t->as_input();
      const ChannelDecl& decl = env.channel(d.channel);
      if (decl.domains.size() != d.comps.size())
        throw Error(ErrorCode::ArityMismatch,
                    "channel '" + d.channel + "' in " + def_name + " used with " +
                        std::to_string(d.comps.size()) +
                        " components, declared with " +
                        std::to_string(decl.domains.size()));
      for (std::size_t i = 0; i < d.comps.size(); ++i) {
        if (const ValueExpr* ve = std::get_if<ValueExpr>(&d.comps[i])) {
          check_component(d.channel, decl.domains[i], *ve, vars, i);
        } else {
          const Binder& b = std::get<Binder>(d.comps[i]);
          if (!domain_subset(b.domain, decl.domains[i]))
            throw Error(ErrorCode::DomainMismatch,
                        "binder '" + b.var + "' on channel '" + d.channel +
                            "' ranges outside the declared domain");
          vars[b.var] = &b.domain;
        }
      }
      check_term(env, d.cont, std::move(vars), def_name);
      return;
    }
    case TermKind::ExtChoice:
    case TermKind::IntChoice:
    case TermKind::SyncPar:
    case TermKind::Interleave: {
      const auto& d = t->as_pair();
      check_term(env, d.left, vars, def_name);
      check_term(env, d.right, std::move(vars), def_name);
      return;
    }
    case TermKind::GenPar: {
      const auto& d = t->as_gen_par();
      check_set_representable(env, d.sync, "synchronization set in " + def_name);
      check_term(env, d.left, vars, def_name);
      check_term(env, d.right, std::move(vars), def_name);
      return;
    }
    case TermKind::AlphaPar: {
      const auto& d = t->as_alpha_par();
      check_set_representable(env, d.left_alpha, "left alphabet in " + def_name);
      check_set_representable(env, d.right_alpha,
                              "right alphabet in " + def_name);
      check_term(env, d.left, vars, def_name);
      check_term(env, d.right, std::move(vars), def_name);
      return;
    }
  }
}

}  // namespace

void Environment::validate() const {
  for (const auto& [name, body] : definitions_) {
    auto free = free_variables(body);
    if (!free.empty())
      throw Error(ErrorCode::InvalidArgument,
                  "definition of " + name + " has unbound variable '" +
                      *free.begin() + "'");
    for (const std::string& used : referenced_names(body)) {
      if (!definitions_.count(used))
        throw Error(ErrorCode::UnboundReference,
                    "process '" + used + "' referenced by " + name +
                        " is not defined");
    }
    check_term(*this, body, {}, name);
  }
  GuardednessResult guarded = check_guarded(*this);
  if (!guarded.ok) {
    std::string cycle;
    for (const std::string& n : guarded.cycle) {
      if (!cycle.empty()) cycle += " -> ";
      cycle += n;
    }
    throw Error(ErrorCode::UnguardedRecursion,
                "unguarded recursion through " + cycle);
  }
}

}  // namespace cspauto
