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

#include <cstddef>
#include <map>
#include <set>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "cspauto/event.hpp"

namespace cspauto {

class Term;

/// Process terms are hash-consed: every constructor returns a pointer into a
/// process-wide pool, and two structurally equal terms are the same pointer.
/// Pointer equality is therefore structural equality.
using TermRef = const Term*;

/// A reference to a variable bound by an enclosing input-prefix binder.
struct VarName {
  std::string name;
  friend bool operator==(const VarName&, const VarName&) = default;
  friend auto operator<=>(const VarName&, const VarName&) = default;
};

/// A ground value or a bound-variable reference in component position.
using ValueExpr = std::variant<Value, VarName>;

/// `?x : {v1, ..., vn}` — binds `x` over a finite domain.
struct Binder {
  std::string var;
  std::vector<Value> domain;  // sorted, duplicate-free, nonempty
  friend bool operator==(const Binder&, const Binder&) = default;
  friend auto operator<=>(const Binder&, const Binder&) = default;
};

/// One component of a communication: a ground/output expression or a binder.
using EventComp = std::variant<ValueExpr, Binder>;

enum class TermKind {
  Stop,
  Skip,
  Prefix,
  Input,
  ExtChoice,
  IntChoice,
  SyncPar,
  GenPar,
  AlphaPar,
  Interleave,
  Ref,
};

struct PrefixData {
  std::string channel;
  std::vector<ValueExpr> comps;
  TermRef cont;
  friend bool operator==(const PrefixData&, const PrefixData&) = default;
};

struct InputData {
  std::string channel;
  std::vector<EventComp> comps;  // at least one Binder
  TermRef cont;
  friend bool operator==(const InputData&, const InputData&) = default;
};

struct PairData {
  TermRef left;
  TermRef right;
  friend bool operator==(const PairData&, const PairData&) = default;
};

struct GenParData {
  TermRef left;
  EventSet sync;
  TermRef right;
  friend bool operator==(const GenParData&, const GenParData&) = default;
};

struct AlphaParData {
  TermRef left;
  EventSet left_alpha;
  EventSet right_alpha;
  TermRef right;
  friend bool operator==(const AlphaParData&, const AlphaParData&) = default;
};

struct RefData {
  std::string name;
  friend bool operator==(const RefData&, const RefData&) = default;
};

class Term {
 public:
  using Payload = std::variant<std::monostate, PrefixData, InputData, PairData,
                               GenParData, AlphaParData, RefData>;

  // Interning constructors.
  static TermRef stop();
  static TermRef skip();
  static TermRef prefix(const Event& event, TermRef cont);
  static TermRef prefix(std::string channel, std::vector<ValueExpr> comps,
                        TermRef cont);
  static TermRef input(std::string channel, std::vector<EventComp> comps,
                       TermRef cont);
  static TermRef input(std::string channel, std::vector<Value> fixed,
                       std::vector<Binder> binders, TermRef cont);
  static TermRef ext_choice(TermRef left, TermRef right);
  static TermRef int_choice(TermRef left, TermRef right);
  static TermRef sync_par(TermRef left, TermRef right);
  static TermRef gen_par(TermRef left, EventSet sync, TermRef right);
  static TermRef alpha_par(TermRef left, EventSet left_alpha,
                           EventSet right_alpha, TermRef right);
  static TermRef interleave(TermRef left, TermRef right);
  static TermRef ref(std::string name);

  /// Right-nested n-ary choices; the finite expansion of the indexed forms.
  /// An empty list yields Stop; a single element is returned unchanged.
  static TermRef ext_choice_all(std::span<const TermRef> branches);
  static TermRef int_choice_all(std::span<const TermRef> branches);

  TermKind kind() const noexcept { return kind_; }

  const PrefixData& as_prefix() const { return std::get<PrefixData>(data_); }
  const InputData& as_input() const { return std::get<InputData>(data_); }
  const PairData& as_pair() const { return std::get<PairData>(data_); }
  const GenParData& as_gen_par() const { return std::get<GenParData>(data_); }
  const AlphaParData& as_alpha_par() const {
    return std::get<AlphaParData>(data_);
  }
  const RefData& as_ref() const { return std::get<RefData>(data_); }

  std::size_t hash() const noexcept { return hash_; }

  /// Node-level equality: same kind and payload, children by identity.
  /// With interned children this is full structural equality.
  bool shallow_equals(const Term& other) const {
    return kind_ == other.kind_ && data_ == other.data_;
  }

  Term(const Term&) = delete;
  Term& operator=(const Term&) = delete;

 private:
  friend class TermPool;
  Term(TermKind kind, Payload data);

  TermKind kind_;
  Payload data_;
  std::size_t hash_;
};

/// Deterministic structural total order (independent of pool addresses);
/// used wherever term-valued output must be canonically sorted.
std::strong_ordering term_order(TermRef a, TermRef b);

/// Replaces in-scope variable references by ground values. Binders shadow:
/// a binder for `x` hides any outer binding of `x` in its own continuation.
TermRef substitute(TermRef t, const std::map<std::string, Value>& binding);

/// Variables occurring free in `t` (not bound by an enclosing binder).
std::set<std::string> free_variables(TermRef t);

/// Process names referenced (transitively through the term only, not
/// through the environment).
std::set<std::string> referenced_names(TermRef t);

}  // namespace cspauto
