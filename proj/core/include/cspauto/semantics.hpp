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

#pragma once

#include <map>
#include <string>
#include <vector>

#include "cspauto/lts.hpp"

namespace cspauto {

/// A finite sequence of visible events, optionally ending in tick. Tau never
/// appears in a trace.
using Trace = std::vector<Event>;

/// Shortlex: shorter traces first, equal lengths lexicographically by the
/// canonical event order. This is the listing order everywhere.
bool trace_less(const Trace& a, const Trace& b);

struct TraceLess {
  bool operator()(const Trace& a, const Trace& b) const {
    return trace_less(a, b);
  }
};

std::string trace_to_string(const Trace& t);

/// A subset-closed family of refusal sets relative to a query universe
/// sigma, stored as the antichain of maximal refusals.
class RefusalSet {
 public:
  RefusalSet(EventSet sigma, std::vector<EventSet> maximal);

  const EventSet& sigma() const noexcept { return sigma_; }
  const std::vector<EventSet>& maximal() const noexcept { return maximal_; }

  /// Membership in the subset closure. The empty set is always a member.
  bool contains(const EventSet& refusal) const;

  /// Explicit enumeration of every member, sorted. Only for small sigma.
  std::vector<EventSet> enumerate() const;

 private:
  EventSet sigma_;
  std::vector<EventSet> maximal_;  // antichain, sorted
};

/// Stable failures up to a trace-length bound, stored as one maximal
/// refusal per (trace, stable state).
class FailureSet {
 public:
  FailureSet(EventSet sigma,
             std::map<Trace, std::vector<EventSet>, TraceLess> maximal);

  const EventSet& sigma() const noexcept { return sigma_; }
  const std::map<Trace, std::vector<EventSet>, TraceLess>& maximal() const {
    return maximal_;
  }

  /// True iff (t, refusal) is in the subset closure of the recorded
  /// maximal failures.
  bool contains(const Trace& t, const EventSet& refusal) const;

 private:
  EventSet sigma_;
  std::map<Trace, std::vector<EventSet>, TraceLess> maximal_;
};

/// Keeps only the maximal sets (discards every set that is a subset of
/// another), sorted canonically.
std::vector<EventSet> antichain_of_maximal(std::vector<EventSet> sets);

/// Keeps only the minimal sets (used for normalization acceptance sets).
std::vector<EventSet> antichain_of_minimal(std::vector<EventSet> sets);

/// Tau closure of a state set, sorted.
std::vector<StateId> tau_closure(const Lts& lts, std::vector<StateId> states);

/// The non-tau labels enabled from a tau-closed state set, each mapped to
/// the tau closure of its successor set.
std::map<Event, std::vector<StateId>> closed_successors(
    const Lts& lts, const std::vector<StateId>& closed);

/// All tau-erased traces of length <= depth from the initial state,
/// prefix-closed, in shortlex order. On a truncated LTS the result is a
/// lower bound; callers consult lts.truncated().
std::vector<Trace> traces_up_to(const Lts& lts, std::size_t depth);

/// The states reachable from the initial state by trace `t`, including the
/// tau closure. Empty iff t is not a trace of the LTS.
std::vector<StateId> states_after(const Lts& lts, const Trace& t);

/// Refusals after `t` relative to `sigma`: the union over stable states
/// reachable after t of the powerset of (sigma minus the state's visible
/// initials). Throws Error(TraceNotFound) if t is not a trace.
RefusalSet refusals_after(const Lts& lts, const Trace& t, const EventSet& sigma);

/// Stable failures for every trace of length <= depth.
FailureSet failures_up_to(const Lts& lts, std::size_t depth,
                          const EventSet& sigma);

/// True iff no reachable state has a tau edge or two same-label edges to
/// different targets.
bool is_deterministic(const Lts& lts);

}  // namespace cspauto
