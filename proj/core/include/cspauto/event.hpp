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

#include <compare>
#include <string>
#include <vector>

#include "cspauto/value.hpp"

namespace cspauto {

/// An event label: the internal event tau, the termination event tick, or a
/// visible communication (channel name plus value components).
///
/// The canonical order is tau < every visible event < tick; visible events
/// compare by channel name, then component list.
class Event {
 public:
  enum class Kind { Tau, Visible, Tick };

  static Event tau() { return Event(Kind::Tau); }
  static Event tick() { return Event(Kind::Tick); }
  static Event visible(std::string channel, std::vector<Value> components = {}) {
    Event e(Kind::Visible);
    e.channel_ = std::move(channel);
    e.components_ = std::move(components);
    return e;
  }

  Kind kind() const noexcept { return kind_; }
  bool is_tau() const noexcept { return kind_ == Kind::Tau; }
  bool is_tick() const noexcept { return kind_ == Kind::Tick; }
  bool is_visible() const noexcept { return kind_ == Kind::Visible; }

  const std::string& channel() const { return channel_; }
  const std::vector<Value>& components() const { return components_; }

  /// "spoofing.engine_cu.2"; tau prints as "τ" and tick as "✓".
  std::string to_string() const;

  friend bool operator==(const Event& a, const Event& b) {
    return a.kind_ == b.kind_ && a.channel_ == b.channel_ &&
           a.components_ == b.components_;
  }

  friend std::strong_ordering operator<=>(const Event& a, const Event& b) {
    if (a.kind_ != b.kind_)
      return static_cast<int>(a.kind_) <=> static_cast<int>(b.kind_);
    if (auto c = a.channel_ <=> b.channel_; c != 0) return c;
    return a.components_ <=> b.components_;
  }

 private:
  explicit Event(Kind kind) : kind_(kind) {}

  Kind kind_;
  std::string channel_;
  std::vector<Value> components_;
};

/// A finite set of events kept as a sorted, duplicate-free vector.
class EventSet {
 public:
  EventSet() = default;
  EventSet(std::initializer_list<Event> events);
  explicit EventSet(std::vector<Event> events);

  bool contains(const Event& e) const;
  void insert(const Event& e);

  bool empty() const noexcept { return items_.empty(); }
  std::size_t size() const noexcept { return items_.size(); }

  auto begin() const noexcept { return items_.begin(); }
  auto end() const noexcept { return items_.end(); }

  const std::vector<Event>& items() const noexcept { return items_; }

  EventSet set_union(const EventSet& other) const;
  EventSet set_intersection(const EventSet& other) const;
  EventSet set_difference(const EventSet& other) const;
  bool is_subset_of(const EventSet& other) const;

  /// "{a, b.1, spoofing.engine_cu.2}"
  std::string to_string() const;

  friend bool operator==(const EventSet&, const EventSet&) = default;
  friend std::strong_ordering operator<=>(const EventSet& a, const EventSet& b) {
    return a.items_ <=> b.items_;
  }

 private:
  std::vector<Event> items_;
};

}  // namespace cspauto
