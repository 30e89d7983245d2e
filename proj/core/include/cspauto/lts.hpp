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
#include <vector>

#include "cspauto/step.hpp"

namespace cspauto {

using StateId = std::uint32_t;

struct LtsLimits {
  std::size_t max_states = 100000;
  std::size_t max_depth = 1000;
};

struct LtsEdge {
  Event event;
  StateId target;
  friend bool operator==(const LtsEdge&, const LtsEdge&) = default;
};

/// Explicit labelled transition system. States are hash-consed terms;
/// numbering and per-state edge order are deterministic for identical
/// (term, environment, limits) inputs.
class Lts {
 public:
  StateId initial() const noexcept { return 0; }
  std::size_t num_states() const noexcept { return states_.size(); }
  std::size_t num_transitions() const noexcept { return num_transitions_; }

  TermRef state_term(StateId s) const { return states_[s]; }

  /// Outgoing edges of `s`, sorted by (event, target).
  const std::vector<LtsEdge>& out(StateId s) const { return out_[s]; }

  bool truncated() const noexcept { return truncated_; }

  /// True iff `s` has no outgoing tau edge.
  bool is_stable(StateId s) const;

  /// Visible initial events of `s` (tau and tick excluded), sorted.
  EventSet visible_initials(StateId s) const;

  /// All event labels occurring on any transition (tau excluded).
  EventSet label_alphabet() const;

 private:
  friend Lts build_lts(TermRef, const Environment&, const LtsLimits&);

  std::vector<TermRef> states_;
  std::vector<std::vector<LtsEdge>> out_;
  std::size_t num_transitions_ = 0;
  bool truncated_ = false;
};

/// Breadth-first expansion of `t` under `env`, deduplicating states by term
/// identity. Stops at the limits and flags truncation; a non-truncated
/// result is exact.
Lts build_lts(TermRef t, const Environment& env, const LtsLimits& limits = {});

}  // namespace cspauto
