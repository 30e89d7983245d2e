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

#include "cspauto/refinement.hpp"

#include <algorithm>
#include <queue>

#include "cspauto/error.hpp"

namespace cspauto {

std::string Verdict::describe() const {
  switch (kind_) {
    case Kind::Holds:
      return "holds";
    case Kind::FailsTraces:
      return "trace counterexample: after " + trace_to_string(witness_) +
             " the implementation can perform " + event_->to_string() +
             ", the specification cannot";
    case Kind::FailsFailures:
      return "failures counterexample: after " + trace_to_string(witness_) +
             " the implementation can refuse " + refusal_.to_string() +
             ", the specification cannot";
    case Kind::Deadlock:
      return "deadlock after " + trace_to_string(witness_);
    case Kind::Inconclusive:
      return "inconclusive: " + reason_;
  }
  return "";
}

NormalizedSpec normalize(const Lts& lts, SemanticModel model) {
  if (lts.truncated())
    throw Error(ErrorCode::SpecTruncated,
                "cannot normalize a truncated LTS; raise the limits");

  NormalizedSpec spec;
  spec.model_ = model;

  std::map<std::vector<StateId>, NodeId> index;
  std::vector<StateId> root = tau_closure(lts, {lts.initial()});
  index.emplace(root, 0);
  spec.nodes_.push_back(NormNode{root, {}, {}, {}});

  std::queue<NodeId> queue;
  queue.push(0);
  while (!queue.empty()) {
    NodeId id = queue.front();
    queue.pop();
    auto members = spec.nodes_[id].members;  // copy; nodes_ may reallocate
    std::map<Event, NodeId> successors;
    EventSet initials;
    for (auto& [event, targets] : closed_successors(lts, members)) {
      initials.insert(event);
      auto [it, inserted] =
          index.emplace(targets, static_cast<NodeId>(spec.nodes_.size()));
      if (inserted) {
        spec.nodes_.push_back(NormNode{std::move(targets), {}, {}, {}});
        queue.push(it->second);
      }
      successors.emplace(event, it->second);
    }
    std::vector<EventSet> acceptances;
    if (model == SemanticModel::Failures) {
      for (StateId s : members)
        if (lts.is_stable(s)) acceptances.push_back(lts.visible_initials(s));
      acceptances = antichain_of_minimal(std::move(acceptances));
    }
    spec.nodes_[id].initials = std::move(initials);
    spec.nodes_[id].successors = std::move(successors);
    spec.nodes_[id].acceptances = std::move(acceptances);
  }
  return spec;
}

namespace {

struct Violation {
  int kind;        // 0: trace violation, 1: failures violation
  Trace evidence;  // kind 0: witness + offending event; kind 1: witness
  EventSet refusal;

  // shortest first, then lexicographic, trace violations before failures
  // violations at the same evidence, then least refusal
  bool precedes(const Violation& other) const {
    if (evidence.size() != other.evidence.size())
      return evidence.size() < other.evidence.size();
    if (evidence != other.evidence) return evidence < other.evidence;
    if (kind != other.kind) return kind < other.kind;
    return refusal < other.refusal;
  }
};

struct SearchItem {
  Trace trace;
  StateId impl_state;
  NodeId spec_node;

  bool operator>(const SearchItem& other) const {
    if (trace.size() != other.trace.size())
      return trace.size() > other.trace.size();
    if (trace != other.trace) return trace > other.trace;
    if (impl_state != other.impl_state) return impl_state > other.impl_state;
    return spec_node > other.spec_node;
  }
};

// Shortest-trace-first product exploration of the implementation against
// the normalized specification. Collects every violation at a reachable
// pair and returns the least one.
Verdict product_check(const NormalizedSpec& spec, const Lts& impl,
                      const EventSet& sigma) {
  std::priority_queue<SearchItem, std::vector<SearchItem>,
                      std::greater<SearchItem>>
      heap;
  std::set<std::pair<StateId, NodeId>> settled;
  std::vector<Violation> violations;

  heap.push({{}, impl.initial(), spec.root()});
  while (!heap.empty()) {
    SearchItem item = heap.top();
    heap.pop();
    if (!settled.insert({item.impl_state, item.spec_node}).second) continue;

    const NormNode& node = spec.node(item.spec_node);
    for (const LtsEdge& edge : impl.out(item.impl_state)) {
      if (edge.event.is_tau()) {
        heap.push({item.trace, edge.target, item.spec_node});
        continue;
      }
      Trace extended = item.trace;
      extended.push_back(edge.event);
      auto succ = node.successors.find(edge.event);
      if (succ == node.successors.end()) {
        violations.push_back({0, std::move(extended), {}});
      } else {
        heap.push({std::move(extended), edge.target, succ->second});
      }
    }

    if (spec.model() == SemanticModel::Failures &&
        impl.is_stable(item.impl_state)) {
      EventSet initials = impl.visible_initials(item.impl_state);
      bool accepted = std::any_of(
          node.acceptances.begin(), node.acceptances.end(),
          [&](const EventSet& acc) { return acc.is_subset_of(initials); });
      if (!accepted)
        violations.push_back(
            {1, item.trace, sigma.set_difference(initials)});
    }
  }

  if (violations.empty()) return Verdict::holds();
  const Violation* best = &violations.front();
  for (const Violation& v : violations)
    if (v.precedes(*best)) best = &v;
  if (best->kind == 0) {
    Trace witness(best->evidence.begin(), best->evidence.end() - 1);
    return Verdict::fails_traces(std::move(witness), best->evidence.back());
  }
  return Verdict::fails_failures(best->evidence, best->refusal);
}

std::optional<Verdict> truncation_verdict(const Lts& spec, const Lts& impl) {
  if (spec.truncated())
    return Verdict::inconclusive(
        "specification LTS is truncated; raise the limits");
  if (impl.truncated())
    return Verdict::inconclusive(
        "implementation LTS is truncated; raise the limits");
  return std::nullopt;
}

}  // namespace

Verdict check_traces_refinement(const Lts& spec, const Lts& impl) {
  if (auto v = truncation_verdict(spec, impl)) return *v;
  return product_check(normalize(spec, SemanticModel::Traces), impl, {});
}

Verdict check_failures_refinement(const Lts& spec, const Lts& impl,
                                  const EventSet& sigma) {
  if (auto v = truncation_verdict(spec, impl)) return *v;
  return product_check(normalize(spec, SemanticModel::Failures), impl, sigma);
}

Verdict check_failures_refinement(const Lts& spec, const Lts& impl) {
  return check_failures_refinement(
      spec, impl, spec.label_alphabet().set_union(impl.label_alphabet()));
}

Verdict deadlock_free(const Lts& lts) {
  if (lts.truncated())
    return Verdict::inconclusive("LTS is truncated; raise the limits");

  // Shortest tau-erased trace per state, tick edges excluded so that
  // states reachable only through termination are never flagged.
  struct Item {
    Trace trace;
    StateId state;
    bool operator>(const Item& other) const {
      if (trace.size() != other.trace.size())
        return trace.size() > other.trace.size();
      if (trace != other.trace) return trace > other.trace;
      return state > other.state;
    }
  };
  std::priority_queue<Item, std::vector<Item>, std::greater<Item>> heap;
  std::set<StateId> settled;
  std::optional<Trace> witness;

  heap.push({{}, lts.initial()});
  while (!heap.empty()) {
    Item item = heap.top();
    heap.pop();
    if (!settled.insert(item.state).second) continue;
    if (lts.out(item.state).empty()) {
      if (!witness || trace_less(item.trace, *witness)) witness = item.trace;
      continue;
    }
    for (const LtsEdge& edge : lts.out(item.state)) {
      if (edge.event.is_tick()) continue;
      Trace extended = item.trace;
      if (!edge.event.is_tau()) extended.push_back(edge.event);
      heap.push({std::move(extended), edge.target});
    }
  }
  if (witness) return Verdict::deadlock(*witness);
  return Verdict::holds();
}

}  // namespace cspauto
