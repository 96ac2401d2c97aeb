/*
 * Copyright 2026 The tcea Authors.
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#pragma once

#include <string>
#include <string_view>

#include "tcea/tree/activation_tree.hpp"

namespace tcea::tree {

// Parenthesized prefix notation, e.g. "(add (min (mul x m) x) x)".
// Terminals print as x, m, c; constants in shortest round-trip form.
std::string format(const ActivationTree& tree);

// Inverse of `format`. Throws ParseError carrying the character offset of
// the offending token (unknown operator, wrong argument count, stray input,
// constant outside the pool).
ActivationTree parse(std::string_view text);

// Conventional infix rendering for reports, e.g. "min(x*m, x) + x".
std::string format_infix(const ActivationTree& tree);

}  // namespace tcea::tree
