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
#include <functional>
#include <span>
#include <vector>

#include "tcea/numeric/matrix.hpp"

namespace tcea::numeric {

// Handle to a node recorded on a Tape.
struct Var {
  std::size_t id = 0;
};

// Reverse-mode differentiation over matrix-valued nodes.
//
// Nodes are appended in evaluation order; `backward` walks them in reverse
// and accumulates adjoints. Leaves created with `leaf` are differentiable,
// `constant` and `stop_gradient` nodes are not: they never receive an
// adjoint and never forward one upstream. A node that only depends on
// non-differentiable inputs is itself non-differentiable.
//
// A tape is single-owner scratch space; create one per worker.
class Tape {
 public:
  using UnaryFn = std::function<double(double)>;
  using BinaryFn = std::function<double(double, double)>;

  Var leaf(Matrix value);
  Var constant(Matrix value);
  Var stop_gradient(Var a);

  Var add(Var a, Var b);
  Var sub(Var a, Var b);
  // Elementwise product.
  Var mul(Var a, Var b);
  Var matmul(Var a, Var b);
  // a · bᵀ
  Var matmul_transposed(Var a, Var b);
  // Adds a 1 × cols row to every row of `a`.
  Var add_row(Var a, Var row);
  Var scale(Var a, double s);
  Var add_scalar(Var a, double s);

  // Elementwise y = f(a) with derivative df.
  Var unary(Var a, const UnaryFn& f, const UnaryFn& df);
  // Elementwise y = f(a, b) with partials dfa, dfb.
  Var binary(Var a, Var b, const BinaryFn& f, const BinaryFn& dfa, const BinaryFn& dfb);
  // Elementwise map whose values and local derivatives dy/da were computed
  // by the caller.
  Var pointwise(Var a, Matrix value, Matrix local_grad);

  // Divides each row by its sum.
  Var row_normalize(Var a);
  // Clamps into [lo, hi]; derivative is 1 strictly inside, 0 outside.
  Var clip(Var a, double lo, double hi);
  // Sum of all entries as a 1 × 1 node.
  Var sum(Var a);
  // Mean softmax cross-entropy of `logits` (batch × classes) against
  // integer labels, as a 1 × 1 node.
  Var softmax_cross_entropy(Var logits, std::span<const int> labels);

  const Matrix& value(Var v) const { return nodes_.at(v.id).value; }
  // Adjoint after `backward`; a zero matrix for non-differentiable nodes.
  Matrix grad(Var v) const;
  bool differentiable(Var v) const { return nodes_.at(v.id).differentiable; }
  std::size_t size() const noexcept { return nodes_.size(); }

  // Seeds d(output)/d(output) = 1 and propagates. `output` must be 1 × 1.
  void backward(Var output);

 private:
  struct Node {
    Matrix value;
    Matrix adjoint;
    bool differentiable = false;
    std::function<void(Tape&, const Matrix&)> propagate;
  };

  Var push(Matrix value, bool differentiable, std::function<void(Tape&, const Matrix&)> propagate);
  void accumulate(Var target, const Matrix& contribution);
  bool any_differentiable(std::initializer_list<Var> vars) const;

  std::vector<Node> nodes_;
};

}  // namespace tcea::numeric
