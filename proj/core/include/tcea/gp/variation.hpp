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

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "tcea/numeric/rng.hpp"
#include "tcea/tree/activation_tree.hpp"
#include "tcea/tree/random_tree.hpp"

namespace tcea::gp {

inline constexpr int kCrossoverRetries = 10;

// Draws k indices iid with probability proportional to exp(F_i / T).
// Throws SelectionError on an empty population and ConfigError for T <= 0.
std::vector<std::size_t> softmax_select(std::span<const double> fitness, std::size_t k,
                                        double temperature, numeric::RngStream& rng);

// Swaps uniformly chosen subtrees. When no pair of children within
// `max_depth` is found after the retry budget the parents are returned.
std::pair<tree::ActivationTree, tree::ActivationTree> crossover(
    const tree::ActivationTree& a, const tree::ActivationTree& b, std::size_t max_depth,
    numeric::RngStream& rng);

// Subtree replacement or point mutation with equal probability.
tree::ActivationTree mutate(const tree::ActivationTree& tree, std::size_t max_depth,
                            numeric::RngStream& rng, const tree::TerminalSet& terminals = {});

// Replaces one node by a different node of the same arity.
tree::ActivationTree point_mutation(const tree::ActivationTree& tree, numeric::RngStream& rng,
                                    const tree::TerminalSet& terminals = {});

// Replaces one subtree by a fresh grow tree that keeps depth <= max_depth.
tree::ActivationTree subtree_mutation(const tree::ActivationTree& tree, std::size_t max_depth,
                                      numeric::RngStream& rng,
                                      const tree::TerminalSet& terminals = {});

}  // namespace tcea::gp
