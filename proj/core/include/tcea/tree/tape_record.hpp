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

#include "tcea/numeric/tape.hpp"
#include "tcea/tree/activation_tree.hpp"

namespace tcea::tree {

// Records the safeguarded evaluation of `tree` on `tape`, one tape node per
// operator, with x, m, c as (equal-shaped) inputs. Unlike eval_with_grad_x
// this differentiates through m and c too when those nodes are
// differentiable.
numeric::Var record(numeric::Tape& tape, const ActivationTree& tree, numeric::Var x,
                    numeric::Var m, numeric::Var c);

}  // namespace tcea::tree
