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

#include "tcea/tree/evaluate.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tcea/error.hpp"

namespace tcea::tree {

namespace {

struct Inputs {
  std::span<const double> x;
  std::span<const double> m;
  std::span<const double> c;
};

double clamp_grad(double g) noexcept { return std::clamp(g, -kOutputClamp, kOutputClamp); }

// Evaluates the subtree at `index` into val (and grad when want_grad).
// Returns one past the subtree's last node.
std::size_t eval_node(const std::vector<Node>& nodes, std::size_t index, const Inputs& in,
                      std::span<double> val, std::span<double> grad, bool want_grad) {
  const Node& node = nodes[index];
  const std::size_t n = val.size();
  switch (node.kind) {
    case Node::Kind::Terminal: {
      const auto& src = node.channel == Channel::X ? in.x : (node.channel == Channel::M ? in.m : in.c);
      std::copy(src.begin(), src.end(), val.begin());
      if (want_grad) std::fill(grad.begin(), grad.end(), node.channel == Channel::X ? 1.0 : 0.0);
      return index + 1;
    }
    case Node::Kind::Constant: {
      std::fill(val.begin(), val.end(), node.value);
      if (want_grad) std::fill(grad.begin(), grad.end(), 0.0);
      return index + 1;
    }
    case Node::Kind::Unary: {
      const std::size_t end = eval_node(nodes, index + 1, in, val, grad, want_grad);
      for (std::size_t i = 0; i < n; ++i) {
        const double u = val[i];
        const double raw = apply(node.unary_op, u);
        val[i] = clamp_output(raw);
        if (want_grad) {
          grad[i] = output_clamped(raw) ? 0.0 : clamp_grad(derivative(node.unary_op, u) * grad[i]);
        }
      }
      return end;
    }
    case Node::Kind::Binary: {
      std::vector<double> right(n);
      std::vector<double> right_grad(want_grad ? n : 0);
      const std::size_t mid = eval_node(nodes, index + 1, in, val, grad, want_grad);
      const std::size_t end = eval_node(nodes, mid, in, right, right_grad, want_grad);
      for (std::size_t i = 0; i < n; ++i) {
        const double a = val[i];
        const double b = right[i];
        const double raw = apply(node.binary_op, a, b);
        val[i] = clamp_output(raw);
        if (want_grad) {
          grad[i] = output_clamped(raw)
                        ? 0.0
                        : clamp_grad(derivative_left(node.binary_op, a, b) * grad[i] +
                                     derivative_right(node.binary_op, a, b) * right_grad[i]);
        }
      }
      return end;
    }
  }
  return index + 1;
}

void check_lengths(std::size_t x, std::size_t m, std::size_t c) {
  if (x != m || x != c) throw DimensionError("tree eval: x, m, c lengths differ");
}

}  // namespace

void eval_into(const ActivationTree& tree, std::span<const double> x, std::span<const double> m,
               std::span<const double> c, std::span<double> value, std::span<double> grad_x) {
  check_lengths(x.size(), m.size(), c.size());
  if (value.size() != x.size()) throw DimensionError("tree eval: output length differs");
  const bool want_grad = !grad_x.empty();
  if (want_grad && grad_x.size() != x.size()) throw DimensionError("tree eval: gradient length differs");
  eval_node(tree.nodes(), 0, Inputs{x, m, c}, value, grad_x, want_grad);
}

std::vector<double> eval(const ActivationTree& tree, std::span<const double> x,
                         std::span<const double> m, std::span<const double> c) {
  check_lengths(x.size(), m.size(), c.size());
  std::vector<double> out(x.size());
  eval_into(tree, x, m, c, out, {});
  return out;
}

double eval(const ActivationTree& tree, double x, double m, double c) {
  double out = 0.0;
  eval_into(tree, std::span<const double>(&x, 1), std::span<const double>(&m, 1),
            std::span<const double>(&c, 1), std::span<double>(&out, 1), {});
  return out;
}

ValueAndGrad eval_with_grad_x(const ActivationTree& tree, std::span<const double> x,
                              std::span<const double> m, std::span<const double> c) {
  check_lengths(x.size(), m.size(), c.size());
  ValueAndGrad out{std::vector<double>(x.size()), std::vector<double>(x.size())};
  eval_into(tree, x, m, c, out.value, out.grad_x);
  return out;
}

namespace {

double kink_node(const std::vector<Node>& nodes, std::size_t& index, double x, double m, double c,
                 double& nearest) {
  const Node& node = nodes[index++];
  switch (node.kind) {
    case Node::Kind::Terminal:
      return node.channel == Channel::X ? x : (node.channel == Channel::M ? m : c);
    case Node::Kind::Constant: return node.value;
    case Node::Kind::Unary: {
      const double u = kink_node(nodes, index, x, m, c, nearest);
      nearest = std::min(nearest, kink_distance(node.unary_op, u));
      const double raw = apply(node.unary_op, u);
      nearest = std::min(nearest, std::abs(std::abs(raw) - kOutputClamp));
      return clamp_output(raw);
    }
    case Node::Kind::Binary: {
      const double a = kink_node(nodes, index, x, m, c, nearest);
      const double b = kink_node(nodes, index, x, m, c, nearest);
      nearest = std::min(nearest, kink_distance(node.binary_op, a, b));
      const double raw = apply(node.binary_op, a, b);
      nearest = std::min(nearest, std::abs(std::abs(raw) - kOutputClamp));
      return clamp_output(raw);
    }
  }
  return 0.0;
}

}  // namespace

double kink_distance(const ActivationTree& tree, double x, double m, double c) {
  double nearest = std::numeric_limits<double>::infinity();
  std::size_t index = 0;
  kink_node(tree.nodes(), index, x, m, c, nearest);
  return nearest;
}

}  // namespace tcea::tree
