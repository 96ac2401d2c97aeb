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
#include <cstdint>
#include <vector>

#include "tcea/tree/operators.hpp"

namespace tcea::tree {

struct Node {
  enum class Kind : std::uint8_t { Terminal, Constant, Unary, Binary };

  Kind kind = Kind::Terminal;
  Channel channel = Channel::X;
  double value = 0.0;
  UnaryOp unary_op = UnaryOp::Identity;
  BinaryOp binary_op = BinaryOp::Add;

  static Node terminal(Channel c) noexcept { return Node{Kind::Terminal, c, 0.0, {}, {}}; }
  static Node constant(double v) noexcept { return Node{Kind::Constant, {}, v, {}, {}}; }
  static Node unary(UnaryOp op) noexcept { return Node{Kind::Unary, {}, 0.0, op, {}}; }
  static Node binary(BinaryOp op) noexcept { return Node{Kind::Binary, {}, 0.0, {}, op}; }

  int arity() const noexcept {
    return kind == Kind::Unary ? 1 : (kind == Kind::Binary ? 2 : 0);
  }
  bool is_leaf() const noexcept { return arity() == 0; }

  bool operator==(const Node& other) const noexcept;
};

// N(T): node count. H(T): longest root-to-leaf path counted in nodes, so a
// lone terminal has depth 1. D(T): distinct channels among {x, m, c}.
struct TreeStats {
  std::size_t size = 1;
  std::size_t depth = 1;
  std::size_t channels_used = 0;
};

// Multivariate activation f(x, m, c) stored as a prefix-order node list. A
// subtree is the contiguous range [i, subtree_end(i)). Trees are immutable
// values; the edit operations return new trees.
class ActivationTree {
 public:
  ActivationTree() : nodes_{Node::terminal(Channel::X)} {}
  // Throws Error unless `prefix` encodes exactly one well-formed tree whose
  // constants belong to the fixed pool.
  explicit ActivationTree(std::vector<Node> prefix);

  static ActivationTree terminal(Channel channel);
  static ActivationTree constant(double value);
  static ActivationTree unary(UnaryOp op, const ActivationTree& child);
  static ActivationTree binary(BinaryOp op, const ActivationTree& left, const ActivationTree& right);

  const std::vector<Node>& nodes() const noexcept { return nodes_; }
  const Node& root() const noexcept { return nodes_.front(); }
  std::size_t size() const noexcept { return nodes_.size(); }

  std::size_t subtree_end(std::size_t index) const;
  ActivationTree subtree(std::size_t index) const;
  ActivationTree replace_subtree(std::size_t index, const ActivationTree& replacement) const;
  // Swaps the node at `index` for another of the same arity.
  ActivationTree replace_node(std::size_t index, const Node& replacement) const;

  // Level of every node, root = 1.
  std::vector<std::size_t> node_levels() const;
  std::size_t depth() const;
  bool references(Channel channel) const noexcept;

  bool operator==(const ActivationTree& other) const noexcept { return nodes_ == other.nodes_; }

 private:
  std::vector<Node> nodes_;
};

TreeStats stats(const ActivationTree& tree);

bool is_pool_constant(double value) noexcept;

}  // namespace tcea::tree
