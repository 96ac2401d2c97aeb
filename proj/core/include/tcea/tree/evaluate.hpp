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

#include <span>
#include <vector>

#include "tcea/tree/activation_tree.hpp"

namespace tcea::tree {

// Elementwise f(x_i, m_i, c_i). Throws DimensionError on a length mismatch.
std::vector<double> eval(const ActivationTree& tree, std::span<const double> x,
                         std::span<const double> m, std::span<const double> c);

double eval(const ActivationTree& tree, double x, double m, double c);

struct ValueAndGrad {
  std::vector<double> value;
  std::vector<double> grad_x;
};

// Values plus ∂f/∂x with m and c held fixed.
ValueAndGrad eval_with_grad_x(const ActivationTree& tree, std::span<const double> x,
                              std::span<const double> m, std::span<const double> c);

// Allocation-light variant used by the network: writes into `value` and,
// when non-empty, `grad_x`. All spans must share one length.
void eval_into(const ActivationTree& tree, std::span<const double> x, std::span<const double> m,
               std::span<const double> c, std::span<double> value, std::span<double> grad_x);

// Smallest distance, over every node of the tree evaluated at this point,
// between the node's input and a non-smooth point of its operator. Used to
// keep finite-difference checks away from kinks.
double kink_distance(const ActivationTree& tree, double x, double m, double c);

}  // namespace tcea::tree
