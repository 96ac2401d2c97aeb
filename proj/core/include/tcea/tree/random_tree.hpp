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
#include <vector>

#include "tcea/numeric/rng.hpp"
#include "tcea/tree/activation_tree.hpp"

namespace tcea::tree {

enum class InitMethod { Grow, Full };

// Channels the search may reference. Leaves are a channel with probability
// `channel_probability` (uniform over `channels`), otherwise a pool constant.
struct TerminalSet {
  std::vector<Channel> channels{Channel::X, Channel::M, Channel::C};
  double channel_probability = 0.7;

  bool allows(Channel channel) const noexcept;
  // Every leaf node this set can produce.
  std::vector<Node> leaves() const;
  // The full set minus one channel.
  static TerminalSet without(Channel channel);
};

Node random_leaf(numeric::RngStream& rng, const TerminalSet& terminals);
Node random_function(numeric::RngStream& rng);

// Grow: below max_depth a node is a leaf with probability
// |leaves| / (|leaves| + |operators|). Full: operators everywhere above the
// last level. The result never exceeds max_depth (which must be >= 1).
ActivationTree random_tree(numeric::RngStream& rng, std::size_t max_depth, InitMethod method,
                           const TerminalSet& terminals = {});

}  // namespace tcea::tree
