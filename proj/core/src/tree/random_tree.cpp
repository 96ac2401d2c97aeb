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

#include "tcea/tree/random_tree.hpp"

#include <algorithm>

#include "tcea/error.hpp"

namespace tcea::tree {

bool TerminalSet::allows(Channel channel) const noexcept {
  return std::find(channels.begin(), channels.end(), channel) != channels.end();
}

std::vector<Node> TerminalSet::leaves() const {
  std::vector<Node> out;
  for (Channel c : channels) out.push_back(Node::terminal(c));
  for (double v : kConstants) out.push_back(Node::constant(v));
  return out;
}

TerminalSet TerminalSet::without(Channel channel) {
  TerminalSet set;
  std::erase(set.channels, channel);
  return set;
}

Node random_leaf(numeric::RngStream& rng, const TerminalSet& terminals) {
  if (!terminals.channels.empty() && rng.bernoulli(terminals.channel_probability)) {
    return Node::terminal(terminals.channels[rng.below(terminals.channels.size())]);
  }
  return Node::constant(kConstants[rng.below(kConstants.size())]);
}

Node random_function(numeric::RngStream& rng) {
  const std::size_t total = kUnaryOps.size() + kBinaryOps.size();
  const std::size_t pick = rng.below(total);
  if (pick < kUnaryOps.size()) return Node::unary(kUnaryOps[pick]);
  return Node::binary(kBinaryOps[pick - kUnaryOps.size()]);
}

namespace {

void build(numeric::RngStream& rng, std::size_t level, std::size_t max_depth, InitMethod method,
           const TerminalSet& terminals, double leaf_probability, std::vector<Node>& out) {
  bool leaf = level >= max_depth;
  if (!leaf && method == InitMethod::Grow) leaf = rng.bernoulli(leaf_probability);
  if (leaf) {
    out.push_back(random_leaf(rng, terminals));
    return;
  }
  const Node fn = random_function(rng);
  out.push_back(fn);
  for (int k = 0; k < fn.arity(); ++k) {
    build(rng, level + 1, max_depth, method, terminals, leaf_probability, out);
  }
}

}  // namespace

ActivationTree random_tree(numeric::RngStream& rng, std::size_t max_depth, InitMethod method,
                           const TerminalSet& terminals) {
  if (max_depth < 1) throw ConfigError("random_tree: max_depth must be >= 1");
  const double n_leaves = static_cast<double>(terminals.channels.size() + kConstants.size());
  const double n_ops = static_cast<double>(kUnaryOps.size() + kBinaryOps.size());
  std::vector<Node> nodes;
  build(rng, 1, max_depth, method, terminals, n_leaves / (n_leaves + n_ops), nodes);
  return ActivationTree(std::move(nodes));
}

}  // namespace tcea::tree
