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
#include <optional>
#include <string>
#include <vector>

#include "cspauto/term.hpp"

namespace cspauto {

/// Declared component domains of a channel. A plain event is a channel with
/// zero components.
struct ChannelDecl {
  std::vector<std::vector<Value>> domains;  // each sorted, unique, nonempty
  friend bool operator==(const ChannelDecl&, const ChannelDecl&) = default;
};

/// Named process definitions plus channel declarations. Guardedness of all
/// recursion is part of validity and is required before LTS expansion.
class Environment {
 public:
  void declare_channel(const std::string& name,
                       std::vector<std::vector<Value>> domains = {});
  void define(const std::string& name, TermRef body);

  const std::map<std::string, ChannelDecl>& channels() const {
    return channels_;
  }
  const std::map<std::string, TermRef>& definitions() const {
    return definitions_;
  }

  bool has_channel(const std::string& name) const;
  bool has_definition(const std::string& name) const;

  /// Throws Error(UnboundReference) for undefined names.
  TermRef definition(const std::string& name) const;
  const ChannelDecl& channel(const std::string& name) const;

  /// Full validation: closed definitions, declared channels, arity and
  /// domain conformance, guarded recursion, and grammar-representable
  /// synchronization sets. Throws Error on the first violation.
  void validate() const;

  /// The set of all visible events admitted by a channel declaration
  /// (the full cross product of its domains).
  std::vector<Event> channel_events(const std::string& name) const;

  friend bool operator==(const Environment&, const Environment&) = default;

 private:
  std::map<std::string, ChannelDecl> channels_;
  std::map<std::string, TermRef> definitions_;
};

}  // namespace cspauto
