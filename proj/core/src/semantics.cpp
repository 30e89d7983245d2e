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

#include "cspauto/semantics.hpp"

#include <algorithm>
#include <set>

#include "cspauto/error.hpp"

namespace cspauto {

bool trace_less(const Trace& a, const Trace& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string trace_to_string(const Trace& t) {
  std::string out = "<";
  for (std::size_t i = 0; i < t.size(); ++i) {
    if (i) out += ", ";
    out += t[i].to_string();
  }
  out += ">";
  return out;
}

std::vector<StateId> tau_closure(const Lts& lts, std::vector<StateId> states) {
  std::set<StateId> seen(states.begin(), states.end());
  std::vector<StateId> stack = std::move(states);
  while (!stack.empty()) {
    StateId s = stack.back();
    stack.pop_back();
    for (const LtsEdge& e : lts.out(s)) {
      if (!e.event.is_tau()) break;  // tau edges sort first
      if (seen.insert(e.target).second) stack.push_back(e.target);
    }
  }
  return {seen.begin(), seen.end()};
}

std::map<Event, std::vector<StateId>> closed_successors(
    const Lts& lts, const std::vector<StateId>& closed) {
  std::map<Event, std::set<StateId>> raw;
  for (StateId s : closed)
    for (const LtsEdge& e : lts.out(s))
      if (!e.event.is_tau()) raw[e.event].insert(e.target);
  std::map<Event, std::vector<StateId>> out;
  for (auto& [event, targets] : raw)
    out.emplace(event, tau_closure(lts, {targets.begin(), targets.end()}));
  return out;
}

std::vector<EventSet> antichain_of_maximal(std::vector<EventSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<EventSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      if (i != j && sets[i].is_subset_of(sets[j]) && sets[i] != sets[j])
        dominated = true;
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

std::vector<EventSet> antichain_of_minimal(std::vector<EventSet> sets) {
  std::sort(sets.begin(), sets.end());
  sets.erase(std::unique(sets.begin(), sets.end()), sets.end());
  std::vector<EventSet> out;
  for (std::size_t i = 0; i < sets.size(); ++i) {
    bool dominated = false;
    for (std::size_t j = 0; j < sets.size() && !dominated; ++j)
      if (i != j && sets[j].is_subset_of(sets[i]) && sets[i] != sets[j])
        dominated = true;
    if (!dominated) out.push_back(sets[i]);
  }
  return out;
}

RefusalSet::RefusalSet(EventSet sigma, std::vector<EventSet> maximal)
    : sigma_(std::move(sigma)),
      maximal_(antichain_of_maximal(std::move(maximal))) {
  if (maximal_.empty()) maximal_.push_back(EventSet{});  // always contains {}
}

bool RefusalSet::contains(const EventSet& refusal) const {
  return std::any_of(maximal_.begin(), maximal_.end(),
                     [&](const EventSet& m) { return refusal.is_subset_of(m); });
}

std::vector<EventSet> RefusalSet::enumerate() const {
  std::set<EventSet> members;
  for (const EventSet& m : maximal_) {
    // powerset of m
    const auto& items = m.items();
    std::size_t n = items.size();
    for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
      std::vector<Event> subset;
      for (std::size_t i = 0; i < n; ++i)
        if (mask & (std::size_t{1} << i)) subset.push_back(items[i]);
      members.insert(EventSet(std::move(subset)));
    }
  }
  return {members.begin(), members.end()};
}

FailureSet::FailureSet(
    EventSet sigma, std::map<Trace, std::vector<EventSet>, TraceLess> maximal)
    : sigma_(std::move(sigma)), maximal_(std::move(maximal)) {
  for (auto& [trace, refusals] : maximal_)
    refusals = antichain_of_maximal(std::move(refusals));
}

bool FailureSet::contains(const Trace& t, const EventSet& refusal) const {
  auto it = maximal_.find(t);
  if (it == maximal_.end()) return false;
  return std::any_of(
      it->second.begin(), it->second.end(),
      [&](const EventSet& m) { return refusal.is_subset_of(m); });
}

std::vector<Trace> traces_up_to(const Lts& lts, std::size_t depth) {
  std::vector<Trace> result = {{}};
  std::map<Trace, std::vector<StateId>, TraceLess> frontier;
  frontier.emplace(Trace{}, tau_closure(lts, {lts.initial()}));

  for (std::size_t len = 0; len < depth && !frontier.empty(); ++len) {
    std::map<Trace, std::vector<StateId>, TraceLess> next;
    for (const auto& [trace, states] : frontier) {
      for (auto& [event, targets] : closed_successors(lts, states)) {
        Trace extended = trace;
        extended.push_back(event);
        result.push_back(extended);
        next.emplace(std::move(extended), std::move(targets));
      }
    }
    frontier = std::move(next);
  }
  std::sort(result.begin(), result.end(), trace_less);
  result.erase(std::unique(result.begin(), result.end()), result.end());
  return result;
}

std::vector<StateId> states_after(const Lts& lts, const Trace& t) {
  std::vector<StateId> states = tau_closure(lts, {lts.initial()});
  for (const Event& event : t) {
    if (event.is_tau()) return {};
    auto succ = closed_successors(lts, states);
    auto it = succ.find(event);
    if (it == succ.end()) return {};
    states = std::move(it->second);
  }
  return states;
}

RefusalSet refusals_after(const Lts& lts, const Trace& t,
                          const EventSet& sigma) {
  std::vector<StateId> states = states_after(lts, t);
  if (states.empty())
    throw Error(ErrorCode::TraceNotFound,
                trace_to_string(t) + " is not a trace of the process");
  std::vector<EventSet> maximal;
  for (StateId s : states)
    if (lts.is_stable(s))
      maximal.push_back(sigma.set_difference(lts.visible_initials(s)));
  return RefusalSet(sigma, std::move(maximal));
}

FailureSet failures_up_to(const Lts& lts, std::size_t depth,
                          const EventSet& sigma) {
  std::map<Trace, std::vector<EventSet>, TraceLess> maximal;
  std::map<Trace, std::vector<StateId>, TraceLess> frontier;
  frontier.emplace(Trace{}, tau_closure(lts, {lts.initial()}));

  for (std::size_t len = 0; len <= depth && !frontier.empty(); ++len) {
    for (const auto& [trace, states] : frontier) {
      for (StateId s : states)
        if (lts.is_stable(s))
          maximal[trace].push_back(
              sigma.set_difference(lts.visible_initials(s)));
    }
    if (len == depth) break;
    std::map<Trace, std::vector<StateId>, TraceLess> next;
    for (const auto& [trace, states] : frontier) {
      for (auto& [event, targets] : closed_successors(lts, states)) {
        Trace extended = trace;
        extended.push_back(event);
        next.emplace(std::move(extended), std::move(targets));
      }
    }
    frontier = std::move(next);
  }
  return FailureSet(sigma, std::move(maximal));
}

bool is_deterministic(const Lts& lts) {
  for (StateId s = 0; s < lts.num_states(); ++s) {
    const auto& edges = lts.out(s);
    for (std::size_t i = 0; i < edges.size(); ++i) {
      if (edges[i].event.is_tau()) return false;
      if (i + 1 < edges.size() && edges[i + 1].event == edges[i].event &&
          edges[i + 1].target != edges[i].target)
        return false;
    }
  }
  return true;
}

}  // namespace cspauto
