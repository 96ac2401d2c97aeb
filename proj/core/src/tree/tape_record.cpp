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

#include "tcea/tree/tape_record.hpp"

namespace tcea::tree {

namespace {

numeric::Var record_node(numeric::Tape& tape, const std::vector<Node>& nodes, std::size_t& index,
                         numeric::Var x, numeric::Var m, numeric::Var c) {
  const Node& node = nodes[index++];
  switch (node.kind) {
    case Node::Kind::Terminal:
      return node.channel == Channel::X ? x : (node.channel == Channel::M ? m : c);
    case Node::Kind::Constant: {
      const auto& shape = tape.value(x);
      return tape.constant(numeric::Matrix::Constant(shape.rows(), shape.cols(), node.value));
    }
    case Node::Kind::Unary: {
      const numeric::Var u = record_node(tape, nodes, index, x, m, c);
      const UnaryOp op = node.unary_op;
      return tape.unary(
          u, [op](double v) { return clamp_output(apply(op, v)); },
          [op](double v) { return output_clamped(apply(op, v)) ? 0.0 : derivative(op, v); });
    }
    case Node::Kind::Binary: {
      const numeric::Var a = record_node(tape, nodes, index, x, m, c);
      const numeric::Var b = record_node(tape, nodes, index, x, m, c);
      const BinaryOp op = node.binary_op;
      return tape.binary(
          a, b, [op](double p, double q) { return clamp_output(apply(op, p, q)); },
          [op](double p, double q) {
            return output_clamped(apply(op, p, q)) ? 0.0 : derivative_left(op, p, q);
          },
          [op](double p, double q) {
            return output_clamped(apply(op, p, q)) ? 0.0 : derivative_right(op, p, q);
          });
    }
  }
  return x;
}

}  // namespace

numeric::Var record(numeric::Tape& tape, const ActivationTree& tree, numeric::Var x,
                    numeric::Var m, numeric::Var c) {
  std::size_t index = 0;
  return record_node(tape, tree.nodes(), index, x, m, c);
}

}  // namespace tcea::tree
