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

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cspauto/semantics.hpp"

namespace cspauto {

enum class SemanticModel { Traces, Failures };

using NodeId = std::uint32_t;

struct NormNode {
  std::vector<StateId> members;  // sorted source states of this subset
  EventSet initials;             // enabled non-tau labels
  std::map<Event, NodeId> successors;
  // Minimal acceptance sets: the visible initials of the stable members,
  // reduced to an antichain. Populated for the failures model only.
  std::vector<EventSet> acceptances;
};

/// Tau-free deterministic equivalent of a specification LTS, produced by
/// tau-closure plus subset construction; the object refinement checking
/// explores against.
class NormalizedSpec {
 public:
  NodeId root() const noexcept { return 0; }
  std::size_t num_nodes() const noexcept { return nodes_.size(); }
  const NormNode& node(NodeId n) const { return nodes_[n]; }
  SemanticModel model() const noexcept { return model_; }

 private:
  friend NormalizedSpec normalize(const Lts&, SemanticModel);
  std::vector<NormNode> nodes_;
  SemanticModel model_ = SemanticModel::Traces;
};

/// Throws Error(SpecTruncated) if the LTS is not exact.
NormalizedSpec normalize(const Lts& lts, SemanticModel model);

/// Outcome of a refinement or liveness check.
class Verdict {
 public:
  enum class Kind { Holds, FailsTraces, FailsFailures, Deadlock, Inconclusive };

  static Verdict holds() { return Verdict(Kind::Holds); }
  static Verdict fails_traces(Trace witness, Event event) {
    Verdict v(Kind::FailsTraces);
    v.witness_ = std::move(witness);
    v.event_ = std::move(event);
    return v;
  }
  static Verdict fails_failures(Trace witness, EventSet refusal) {
    Verdict v(Kind::FailsFailures);
    v.witness_ = std::move(witness);
    v.refusal_ = std::move(refusal);
    return v;
  }
  static Verdict deadlock(Trace witness) {
    Verdict v(Kind::Deadlock);
    v.witness_ = std::move(witness);
    return v;
  }
  static Verdict inconclusive(std::string reason) {
    Verdict v(Kind::Inconclusive);
    v.reason_ = std::move(reason);
    return v;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_holds() const noexcept { return kind_ == Kind::Holds; }

  /// FailsTraces: the witness extended by event() is an implementation
  /// trace the specification lacks. FailsFailures: (witness, refusal) is an
  /// implementation failure the specification lacks. Deadlock: the witness
  /// reaches a state refusing everything.
  const Trace& witness() const { return witness_; }
  const Event& event() const { return *event_; }
  const EventSet& refusal() const { return refusal_; }
  const std::string& reason() const { return reason_; }

  std::string describe() const;

 private:
  explicit Verdict(Kind kind) : kind_(kind) {}

  Kind kind_;
  Trace witness_;
  std::optional<Event> event_;
  EventSet refusal_;
  std::string reason_;
};

/// Does impl traces-refine spec (every impl trace is a spec trace)?
/// Witnesses are shortest, then lexicographically least.
Verdict check_traces_refinement(const Lts& spec, const Lts& impl);

/// Does impl failures-refine spec? `sigma` is the refusal-reporting
/// universe; the overload without it uses the union of both label
/// alphabets.
Verdict check_failures_refinement(const Lts& spec, const Lts& impl,
                                  const EventSet& sigma);
Verdict check_failures_refinement(const Lts& spec, const Lts& impl);

/// Holds iff no reachable stable state refuses everything. Termination via
/// tick is proper: states reachable only by a tick edge do not count.
Verdict deadlock_free(const Lts& lts);

}  // namespace cspauto
