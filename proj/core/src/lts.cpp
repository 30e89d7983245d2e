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

#include "cspauto/lts.hpp"

#include <deque>
#include <unordered_map>

#include "cspauto/error.hpp"

namespace cspauto {

bool Lts::is_stable(StateId s) const {
  // edges are sorted and tau orders first
  return out_[s].empty() || !out_[s].front().event.is_tau();
}

EventSet Lts::visible_initials(StateId s) const {
  EventSet initials;
  for (const LtsEdge& e : out_[s])
    if (e.event.is_visible()) initials.insert(e.event);
  return initials;
}

EventSet Lts::label_alphabet() const {
  EventSet labels;
  for (const auto& edges : out_)
    for (const LtsEdge& e : edges)
      if (e.event.is_visible()) labels.insert(e.event);
  return labels;
}

Lts build_lts(TermRef t, const Environment& env, const LtsLimits& limits) {
  if (limits.max_states == 0 || limits.max_depth == 0)
    throw Error(ErrorCode::InvalidArgument, "limits must be positive");

  Lts lts;
  std::unordered_map<TermRef, StateId> index;
  std::vector<std::size_t> depth;

  lts.states_.push_back(t);
  lts.out_.emplace_back();
  index.emplace(t, 0);
  depth.push_back(0);

  std::deque<StateId> queue = {0};
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();

    auto transitions = step(lts.states_[s], env);
    if (depth[s] >= limits.max_depth) {
      if (!transitions.empty()) lts.truncated_ = true;
      continue;
    }
    for (const Transition& tr : transitions) {
      StateId target;
      auto it = index.find(tr.target);
      if (it != index.end()) {
        target = it->second;
      } else {
        if (lts.states_.size() >= limits.max_states) {
          lts.truncated_ = true;
          continue;
        }
        target = static_cast<StateId>(lts.states_.size());
        lts.states_.push_back(tr.target);
        lts.out_.emplace_back();
        index.emplace(tr.target, target);
        depth.push_back(depth[s] + 1);
        queue.push_back(target);
      }
      lts.out_[s].push_back({tr.event, target});
      ++lts.num_transitions_;
    }
  }
  return lts;
}

}  // namespace cspauto
