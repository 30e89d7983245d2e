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

#include <string>

#include "cspauto/env.hpp"

namespace cspauto {

/// Canonical .cspa rendering: channel declarations first, then definitions,
/// both sorted by name; minimal parentheses; contiguous integer sets print
/// as ranges. parse(print(env)) reproduces env exactly, and printing is
/// byte-stable under reparsing.
std::string print(const Environment& env);

/// One process expression in the same canonical form.
std::string print_term(TermRef t);

/// "{0..10}" or "{engine_cu, gearbox}".
std::string print_value_set(const std::vector<Value>& values);

}  // namespace cspauto
