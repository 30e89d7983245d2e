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

#include "oracles.hpp"

#include <algorithm>
#include <functional>
#include <unordered_map>

namespace cspauto::oracle {

namespace {

// Enumeration stays brute force over step(); caching the one-step results
// per interned term only avoids recomputing identical transition lists on
// highly branching loops.
class StepCache {
 public:
  explicit StepCache(const Environment& env) : env_(env) {}

  const std::vector<Transition>& get(TermRef t) {
    auto it = cache_.find(t);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(t, step(t, env_)).first->second;
  }

  const EventSet& refusal(TermRef t, const EventSet& sigma) {
    auto it = refusals_.find(t);
    if (it != refusals_.end()) return it->second;
    EventSet initials;
    for (const Transition& tr : get(t))
      if (tr.event.is_visible()) initials.insert(tr.event);
    return refusals_.emplace(t, sigma.set_difference(initials)).first->second;
  }

 private:
  const Environment& env_;
  std::unordered_map<TermRef, std::vector<Transition>> cache_;
  std::unordered_map<TermRef, EventSet> refusals_;
};

void walk_traces(TermRef t, StepCache& cache, std::size_t depth,
                 Trace& prefix, std::set<Trace, TraceLess>& out) {
  out.insert(prefix);
  for (const Transition& tr : cache.get(t)) {
    if (tr.event.is_tau()) {
      walk_traces(tr.target, cache, depth, prefix, out);
    } else if (depth > 0) {
      prefix.push_back(tr.event);
      walk_traces(tr.target, cache, depth - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

bool stable(TermRef t, StepCache& cache) {
  for (const Transition& tr : cache.get(t))
    if (tr.event.is_tau()) return false;
  return true;
}

void walk_failures(TermRef t, StepCache& cache, std::size_t depth,
                   const EventSet& sigma, Trace& prefix,
                   std::map<Trace, std::vector<EventSet>, TraceLess>& out) {
  if (stable(t, cache)) out[prefix].push_back(cache.refusal(t, sigma));
  for (const Transition& tr : cache.get(t)) {
    if (tr.event.is_tau()) {
      walk_failures(tr.target, cache, depth, sigma, prefix, out);
    } else if (depth > 0) {
      prefix.push_back(tr.event);
      walk_failures(tr.target, cache, depth - 1, sigma, prefix, out);
      prefix.pop_back();
    }
  }
}

void walk_restricted(TermRef t, StepCache& cache, const EventSet& allowed,
                     std::size_t depth, Trace& prefix,
                     std::set<Trace, TraceLess>& out) {
  out.insert(prefix);
  for (const Transition& tr : cache.get(t)) {
    if (tr.event.is_tau()) {
      walk_restricted(tr.target, cache, allowed, depth, prefix, out);
    } else if (tr.event.is_visible() && allowed.contains(tr.event) &&
               depth > 0) {
      prefix.push_back(tr.event);
      walk_restricted(tr.target, cache, allowed, depth - 1, prefix, out);
      prefix.pop_back();
    }
  }
}

void shuffle_two(const Trace& a, std::size_t i, const Trace& b, std::size_t j,
                 Trace& acc, std::set<Trace, TraceLess>& out) {
  if (i == a.size() && j == b.size()) {
    out.insert(acc);
    return;
  }
  if (i < a.size()) {
    acc.push_back(a[i]);
    shuffle_two(a, i + 1, b, j, acc, out);
    acc.pop_back();
  }
  if (j < b.size()) {
    acc.push_back(b[j]);
    shuffle_two(a, i, b, j + 1, acc, out);
    acc.pop_back();
  }
}

}  // namespace

std::set<Trace, TraceLess> traces(TermRef t, const Environment& env,
                                  std::size_t depth) {
  std::set<Trace, TraceLess> out;
  Trace prefix;
  StepCache cache(env);
  walk_traces(t, cache, depth, prefix, out);
  return out;
}

std::map<Trace, std::vector<EventSet>, TraceLess> failures(
    TermRef t, const Environment& env, std::size_t depth,
    const EventSet& sigma) {
  std::map<Trace, std::vector<EventSet>, TraceLess> out;
  Trace prefix;
  StepCache cache(env);
  walk_failures(t, cache, depth, sigma, prefix, out);
  for (auto& [trace, refusals] : out)
    refusals = antichain_of_maximal(std::move(refusals));
  return out;
}

std::set<Trace, TraceLess> restricted_traces(TermRef t, const Environment& env,
                                             const EventSet& allowed,
                                             std::size_t depth) {
  std::set<Trace, TraceLess> out;
  Trace prefix;
  StepCache cache(env);
  walk_restricted(t, cache, allowed, depth, prefix, out);
  return out;
}

std::set<Trace, TraceLess> shuffle_product(const std::set<Trace, TraceLess>& a,
                                           const std::set<Trace, TraceLess>& b,
                                           std::size_t depth) {
  std::set<Trace, TraceLess> out;
  for (const Trace& u : a) {
    for (const Trace& v : b) {
      if (u.size() + v.size() > depth) continue;
      Trace acc;
      shuffle_two(u, 0, v, 0, acc, out);
    }
  }
  return out;
}

bool traces_refines(TermRef spec, TermRef impl, const Environment& env,
                    std::size_t depth) {
  auto spec_traces = traces(spec, env, depth);
  for (const Trace& t : traces(impl, env, depth))
    if (!spec_traces.count(t)) return false;
  return true;
}

bool failures_refines(TermRef spec, TermRef impl, const Environment& env,
                      std::size_t depth, const EventSet& sigma) {
  if (!traces_refines(spec, impl, env, depth)) return false;
  auto spec_failures = failures(spec, env, depth, sigma);
  for (const auto& [trace, refusals] : failures(impl, env, depth, sigma)) {
    auto it = spec_failures.find(trace);
    for (const EventSet& refusal : refusals) {
      bool dominated =
          it != spec_failures.end() &&
          std::any_of(it->second.begin(), it->second.end(),
                      [&](const EventSet& spec_refusal) {
                        return refusal.is_subset_of(spec_refusal);
                      });
      if (!dominated) return false;
    }
  }
  return true;
}

std::set<Trace, TraceLess> maximal_traces(TermRef t, const Environment& env,
                                          std::size_t depth) {
  auto all = traces(t, env, depth);
  std::set<Trace, TraceLess> out;
  for (const Trace& candidate : all) {
    bool extended = std::any_of(all.begin(), all.end(), [&](const Trace& other) {
      return other.size() == candidate.size() + 1 &&
             std::equal(candidate.begin(), candidate.end(), other.begin());
    });
    if (!extended) out.insert(candidate);
  }
  return out;
}

const Environment& corpus_env() {
  static const Environment env = [] {
    Environment e;
    e.declare_channel("a");
    e.declare_channel("b");
    e.declare_channel("c");
    e.declare_channel("d", {{Value::integer(0), Value::integer(1)}});
    return e;
  }();
  return env;
}

// `budget` bounds the longest possible trace (tick included): prefixes
// spend one unit, parallel compositions split the budget between their
// sides, choices pass it through. Probing at depth >= budget is therefore
// exhaustive.
TermRef random_term(std::mt19937& rng, int budget) {
  auto pick = [&rng](int n) {
    return std::uniform_int_distribution<int>(0, n - 1)(rng);
  };
  auto event = [&]() -> Event {
    switch (pick(5)) {
      case 0: return Event::visible("a");
      case 1: return Event::visible("b");
      case 2: return Event::visible("c");
      case 3: return Event::visible("d", {Value::integer(0)});
      default: return Event::visible("d", {Value::integer(1)});
    }
  };
  if (budget <= 0) return Term::stop();
  switch (pick(10)) {
    case 0:
      return Term::stop();
    case 1:
      return Term::skip();
    case 2:
    case 3:
      return Term::prefix(event(), random_term(rng, budget - 1));
    case 4:
      return Term::input(
          "d", {},
          {Binder{"x", {Value::integer(0), Value::integer(1)}}},
          random_term(rng, budget - 1));
    case 5:
      return Term::ext_choice(random_term(rng, budget - 1),
                              random_term(rng, budget - 1));
    case 6:
      return Term::int_choice(random_term(rng, budget - 1),
                              random_term(rng, budget - 1));
    default: {
      int left = pick(budget + 1);
      int right = budget - left;
      switch (pick(4)) {
        case 0:
          return Term::sync_par(random_term(rng, left),
                                random_term(rng, right));
        case 1:
          return Term::interleave(random_term(rng, left),
                                  random_term(rng, right));
        default: {
          EventSet sync;
          if (pick(2)) sync.insert(Event::visible("a"));
          if (pick(2)) sync.insert(Event::visible("b"));
          return Term::gen_par(random_term(rng, left), sync,
                               random_term(rng, right));
        }
      }
    }
  }
}

namespace {

// Environments for round-trip testing are built from small fixed pools so
// that every generated construct is grammar-representable.
struct EnvBuilder {
  std::mt19937& rng;
  Environment env;
  std::vector<std::string> def_names;
  std::vector<std::string> channel_names;

  int pick(int n) { return std::uniform_int_distribution<int>(0, n - 1)(rng); }

  Event random_plain_event() {
    // channels with no components only
    std::vector<std::string> plain;
    for (const auto& [name, decl] : env.channels())
      if (decl.domains.empty()) plain.push_back(name);
    return Event::visible(plain[pick(static_cast<int>(plain.size()))]);
  }

  EventSet random_event_set() {
    EventSet set;
    for (const auto& [name, decl] : env.channels()) {
      if (pick(3) != 0) continue;
      for (Event& e : env.channel_events(name)) set.insert(std::move(e));
    }
    return set;
  }

  TermRef term(int depth, bool guarded,
               const std::map<std::string, std::vector<Value>>& scope) {
    if (depth <= 0) {
      if (guarded && pick(4) == 0)
        return Term::ref(def_names[pick(static_cast<int>(def_names.size()))]);
      return pick(5) == 0 ? Term::skip() : Term::stop();
    }
    switch (pick(8)) {
      case 0:
        return Term::stop();
      case 1:
        return pick(3) == 0 ? Term::skip() : Term::stop();
      case 2:
      case 3: {  // plain prefix, sometimes using a scoped variable on 'data'
        if (!scope.empty() && pick(2) == 0) {
          return Term::prefix("data", {ValueExpr(VarName{scope.begin()->first})},
                              term(depth - 1, true, scope));
        }
        return Term::prefix(random_plain_event(), term(depth - 1, true, scope));
      }
      case 4: {  // input prefix on 'data'
        std::string var = pick(2) ? "v" : "w";
        std::vector<Value> domain = {Value::integer(0), Value::integer(1)};
        if (pick(2)) domain.push_back(Value::integer(2));
        std::map<std::string, std::vector<Value>> inner = scope;
        inner[var] = domain;
        return Term::input("data", {}, {Binder{var, domain}},
                           term(depth - 1, true, inner));
      }
      case 5:
        return Term::ext_choice(term(depth - 1, guarded, scope),
                                term(depth - 1, guarded, scope));
      case 6:
        return Term::int_choice(term(depth - 1, guarded, scope),
                                term(depth - 1, guarded, scope));
      default: {
        switch (pick(4)) {
          case 0:
            return Term::sync_par(term(depth - 1, guarded, scope),
                                  term(depth - 1, guarded, scope));
          case 1:
            return Term::interleave(term(depth - 1, guarded, scope),
                                    term(depth - 1, guarded, scope));
          case 2:
            return Term::gen_par(term(depth - 1, guarded, scope),
                                 random_event_set(),
                                 term(depth - 1, guarded, scope));
          default:
            return Term::alpha_par(term(depth - 1, guarded, scope),
                                   random_event_set(), random_event_set(),
                                   term(depth - 1, guarded, scope));
        }
      }
    }
  }
};

}  // namespace

Environment random_env(std::mt19937& rng) {
  EnvBuilder b{rng, {}, {}, {}};
  b.env.declare_channel("go");
  b.env.declare_channel("halt");
  if (b.pick(2)) b.env.declare_channel("ping");
  b.env.declare_channel("data", {{Value::integer(0), Value::integer(1),
                                  Value::integer(2)}});
  if (b.pick(2))
    b.env.declare_channel("tag",
                          {{Value::atom("lo"), Value::atom("hi")},
                           {Value::integer(0), Value::integer(1)}});

  int defs = 1 + b.pick(3);
  const char* names[] = {"P", "Q", "R", "S"};
  for (int i = 0; i < defs; ++i) b.def_names.push_back(names[i]);
  for (int i = 0; i < defs; ++i)
    b.env.define(b.def_names[i], b.term(2 + b.pick(2), false, {}));
  return b.env;
}

}  // namespace cspauto::oracle
