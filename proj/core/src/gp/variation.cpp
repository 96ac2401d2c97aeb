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

#include "tcea/gp/variation.hpp"

#include <algorithm>
#include <cmath>

#include "tcea/error.hpp"

namespace tcea::gp {

using tree::ActivationTree;
using tree::Node;

std::vector<std::size_t> softmax_select(std::span<const double> fitness, std::size_t k,
                                        double temperature, numeric::RngStream& rng) {
  if (fitness.empty()) throw SelectionError("softmax_select: empty population");
  if (!(temperature > 0.0)) throw ConfigError("softmax_select: temperature must be positive");
  const double peak = *std::max_element(fitness.begin(), fitness.end());
  std::vector<double> cumulative(fitness.size());
  double sum = 0.0;
  for (std::size_t i = 0; i < fitness.size(); ++i) {
    sum += std::exp((fitness[i] - peak) / temperature);
    cumulative[i] = sum;
  }
  std::vector<std::size_t> picks(k);
  for (auto& pick : picks) {
    const double u = rng.uniform() * sum;
    const auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
    pick = std::min<std::size_t>(static_cast<std::size_t>(it - cumulative.begin()),
                                 fitness.size() - 1);
  }
  return picks;
}

std::pair<ActivationTree, ActivationTree> crossover(const ActivationTree& a,
                                                    const ActivationTree& b,
                                                    std::size_t max_depth,
                                                    numeric::RngStream& rng) {
  for (int attempt = 0; attempt < kCrossoverRetries; ++attempt) {
    const std::size_t i = rng.below(a.size());
    const std::size_t j = rng.below(b.size());
    ActivationTree child_a = a.replace_subtree(i, b.subtree(j));
    ActivationTree child_b = b.replace_subtree(j, a.subtree(i));
    if (child_a.depth() <= max_depth && child_b.depth() <= max_depth) {
      return {std::move(child_a), std::move(child_b)};
    }
  }
  return {a, b};
}

ActivationTree point_mutation(const ActivationTree& tree, numeric::RngStream& rng,
                              const tree::TerminalSet& terminals) {
  const std::size_t index = rng.below(tree.size());
  const Node& current = tree.nodes()[index];
  std::vector<Node> options;
  switch (current.arity()) {
    case 0:
      for (const Node& leaf : terminals.leaves()) {
        if (!(leaf == current)) options.push_back(leaf);
      }
      break;
    case 1:
      for (tree::UnaryOp op : tree::kUnaryOps) {
        if (op != current.unary_op) options.push_back(Node::unary(op));
      }
      break;
    default:
      for (tree::BinaryOp op : tree::kBinaryOps) {
        if (op != current.binary_op) options.push_back(Node::binary(op));
      }
      break;
  }
  if (options.empty()) return tree;
  return tree.replace_node(index, options[rng.below(options.size())]);
}

ActivationTree subtree_mutation(const ActivationTree& tree, std::size_t max_depth,
                                numeric::RngStream& rng, const tree::TerminalSet& terminals) {
  const std::size_t index = rng.below(tree.size());
  const std::size_t level = tree.node_levels()[index];
  const std::size_t budget = max_depth >= level ? max_depth - level + 1 : 1;
  return tree.replace_subtree(index,
                              tree::random_tree(rng, budget, tree::InitMethod::Grow, terminals));
}

ActivationTree mutate(const ActivationTree& tree, std::size_t max_depth, numeric::RngStream& rng,
                      const tree::TerminalSet& terminals) {
  if (rng.bernoulli(0.5)) return subtree_mutation(tree, max_depth, rng, terminals);
  return point_mutation(tree, rng, terminals);
}

}  // namespace tcea::gp
