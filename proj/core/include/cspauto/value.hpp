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
#include <cstdint>
#include <string>
#include <vector>

namespace cspauto {

/// An atomic communicated datum: a lowercase atom or a 32-bit integer.
/// Integers order before atoms; atoms order lexicographically.
class Value {
 public:
  static Value atom(std::string name) { return Value(std::move(name)); }
  static Value integer(std::int32_t n) { return Value(n); }

  bool is_atom() const noexcept { return is_atom_; }
  bool is_int() const noexcept { return !is_atom_; }

  const std::string& atom_name() const { return atom_; }
  std::int32_t int_value() const { return int_; }

  std::string to_string() const {
    return is_atom_ ? atom_ : std::to_string(int_);
  }

  friend bool operator==(const Value& a, const Value& b) {
    if (a.is_atom_ != b.is_atom_) return false;
    return a.is_atom_ ? a.atom_ == b.atom_ : a.int_ == b.int_;
  }

  friend std::strong_ordering operator<=>(const Value& a, const Value& b) {
    if (a.is_atom_ != b.is_atom_)
      return a.is_atom_ ? std::strong_ordering::greater
                        : std::strong_ordering::less;
    if (a.is_atom_) return a.atom_ <=> b.atom_;
    return a.int_ <=> b.int_;
  }

 private:
  explicit Value(std::string name) : is_atom_(true), atom_(std::move(name)) {}
  explicit Value(std::int32_t n) : is_atom_(false), int_(n) {}

  bool is_atom_;
  std::int32_t int_ = 0;
  std::string atom_;
};

/// Sorts and deduplicates in place; all finite value domains are kept in
/// this canonical form.
void normalize_value_set(std::vector<Value>& values);

/// True if `name` matches the atom/channel identifier syntax
/// [a-z][A-Za-z0-9_]*.
bool is_lower_identifier(std::string_view name);

/// True if `name` matches the process/set identifier syntax
/// [A-Z][A-Za-z0-9_]*.
bool is_upper_identifier(std::string_view name);

}  // namespace cspauto
