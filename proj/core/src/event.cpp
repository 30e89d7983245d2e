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

#include "cspauto/event.hpp"

#include <algorithm>

namespace cspauto {

std::string Event::to_string() const {
  switch (kind_) {
    case Kind::Tau:
      return "τ";
    case Kind::Tick:
      return "✓";
    case Kind::Visible:
      break;
  }
  std::string out = channel_;
  for (const Value& v : components_) {
    out += '.';
    out += v.to_string();
  }
  return out;
}

EventSet::EventSet(std::initializer_list<Event> events)
    : EventSet(std::vector<Event>(events)) {}

EventSet::EventSet(std::vector<Event> events) : items_(std::move(events)) {
  std::sort(items_.begin(), items_.end());
  items_.erase(std::unique(items_.begin(), items_.end()), items_.end());
}

bool EventSet::contains(const Event& e) const {
  return std::binary_search(items_.begin(), items_.end(), e);
}

void EventSet::insert(const Event& e) {
  auto it = std::lower_bound(items_.begin(), items_.end(), e);
  if (it == items_.end() || *it != e) items_.insert(it, e);
}

EventSet EventSet::set_union(const EventSet& other) const {
  std::vector<Event> out;
  out.reserve(items_.size() + other.items_.size());
  std::set_union(items_.begin(), items_.end(), other.items_.begin(),
                 other.items_.end(), std::back_inserter(out));
  EventSet result;
  result.items_ = std::move(out);
  return result;
}

EventSet EventSet::set_intersection(const EventSet& other) const {
  std::vector<Event> out;
  std::set_intersection(items_.begin(), items_.end(), other.items_.begin(),
                        other.items_.end(), std::back_inserter(out));
  EventSet result;
  result.items_ = std::move(out);
  return result;
}

EventSet EventSet::set_difference(const EventSet& other) const {
  std::vector<Event> out;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(),
                      other.items_.end(), std::back_inserter(out));
  EventSet result;
  result.items_ = std::move(out);
  return result;
}

bool EventSet::is_subset_of(const EventSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(),
                       items_.begin(), items_.end());
}

std::string EventSet::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const Event& e : items_) {
    if (!first) out += ", ";
    first = false;
    out += e.to_string();
  }
  out += "}";
  return out;
}

}  // namespace cspauto
