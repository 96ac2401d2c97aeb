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

#include "tcea/tree/activation_tree.hpp"

#include <algorithm>
#include <string>

#include "tcea/error.hpp"

namespace tcea::tree {

bool Node::operator==(const Node& other) const noexcept {
  if (kind != other.kind) return false;
  switch (kind) {
    case Kind::Terminal: return channel == other.channel;
    case Kind::Constant: return value == other.value;
    case Kind::Unary: return unary_op == other.unary_op;
    case Kind::Binary: return binary_op == other.binary_op;
  }
  return false;
}

bool is_pool_constant(double value) noexcept {
  return std::find(kConstants.begin(), kConstants.end(), value) != kConstants.end();
}

ActivationTree::ActivationTree(std::vector<Node> prefix) : nodes_(std::move(prefix)) {
  if (nodes_.empty()) throw Error("activation tree: empty node list");
  // Each node consumes one open slot and opens `arity` new ones.
  std::size_t open = 1;
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    if (open == 0) throw Error("activation tree: trailing nodes after a complete tree");
    const Node& node = nodes_[i];
    if (node.kind == Node::Kind::Constant && !is_pool_constant(node.value)) {
      throw Error("activation tree: constant " + std::to_string(node.value) + " not in pool");
    }
    open = open - 1 + static_cast<std::size_t>(node.arity());
  }
  if (open != 0) throw Error("activation tree: incomplete node list");
}

ActivationTree ActivationTree::terminal(Channel channel) {
  return ActivationTree(std::vector<Node>{Node::terminal(channel)});
}

ActivationTree ActivationTree::constant(double value) {
  return ActivationTree(std::vector<Node>{Node::constant(value)});
}

ActivationTree ActivationTree::unary(UnaryOp op, const ActivationTree& child) {
  std::vector<Node> nodes;
  nodes.reserve(child.size() + 1);
  nodes.push_back(Node::unary(op));
  nodes.insert(nodes.end(), child.nodes_.begin(), child.nodes_.end());
  return ActivationTree(std::move(nodes));
}

ActivationTree ActivationTree::binary(BinaryOp op, const ActivationTree& left,
                                      const ActivationTree& right) {
  std::vector<Node> nodes;
  nodes.reserve(left.size() + right.size() + 1);
  nodes.push_back(Node::binary(op));
  nodes.insert(nodes.end(), left.nodes_.begin(), left.nodes_.end());
  nodes.insert(nodes.end(), right.nodes_.begin(), right.nodes_.end());
  return ActivationTree(std::move(nodes));
}

std::size_t ActivationTree::subtree_end(std::size_t index) const {
  if (index >= nodes_.size()) throw Error("activation tree: node index out of range");
  std::size_t open = 1;
  std::size_t i = index;
  while (open > 0) {
    open = open - 1 + static_cast<std::size_t>(nodes_[i].arity());
    ++i;
  }
  return i;
}

ActivationTree ActivationTree::subtree(std::size_t index) const {
  const std::size_t end = subtree_end(index);
  return ActivationTree(std::vector<Node>(nodes_.begin() + static_cast<std::ptrdiff_t>(index),
                                          nodes_.begin() + static_cast<std::ptrdiff_t>(end)));
}

ActivationTree ActivationTree::replace_subtree(std::size_t index,
                                               const ActivationTree& replacement) const {
  const std::size_t end = subtree_end(index);
  std::vector<Node> nodes;
  nodes.reserve(nodes_.size() - (end - index) + replacement.size());
  nodes.insert(nodes.end(), nodes_.begin(), nodes_.begin() + static_cast<std::ptrdiff_t>(index));
  nodes.insert(nodes.end(), replacement.nodes_.begin(), replacement.nodes_.end());
  nodes.insert(nodes.end(), nodes_.begin() + static_cast<std::ptrdiff_t>(end), nodes_.end());
  return ActivationTree(std::move(nodes));
}

ActivationTree ActivationTree::replace_node(std::size_t index, const Node& replacement) const {
  if (index >= nodes_.size()) throw Error("activation tree: node index out of range");
  if (replacement.arity() != nodes_[index].arity()) {
    throw Error("activation tree: replacement node changes arity");
  }
  std::vector<Node> nodes = nodes_;
  nodes[index] = replacement;
  return ActivationTree(std::move(nodes));
}

std::vector<std::size_t> ActivationTree::node_levels() const {
  std::vector<std::size_t> levels(nodes_.size());
  // Stack of levels for the slots still waiting to be filled.
  std::vector<std::size_t> pending{1};
  for (std::size_t i = 0; i < nodes_.size(); ++i) {
    const std::size_t level = pending.back();
    pending.pop_back();
    levels[i] = level;
    for (int k = 0; k < nodes_[i].arity(); ++k) pending.push_back(level + 1);
  }
  return levels;
}

std::size_t ActivationTree::depth() const {
  const auto levels = node_levels();
  return *std::max_element(levels.begin(), levels.end());
}

bool ActivationTree::references(Channel channel) const noexcept {
  return std::any_of(nodes_.begin(), nodes_.end(), [channel](const Node& n) {
    return n.kind == Node::Kind::Terminal && n.channel == channel;
  });
}

TreeStats stats(const ActivationTree& tree) {
  TreeStats s;
  s.size = tree.size();
  s.depth = tree.depth();
  s.channels_used = static_cast<std::size_t>(
      std::count_if(kAllChannels.begin(), kAllChannels.end(),
                    [&](Channel c) { return tree.references(c); }));
  return s;
}

}  // namespace tcea::tree
