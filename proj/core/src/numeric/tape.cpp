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

#include "tcea/numeric/tape.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <utility>

#include "tcea/error.hpp"

namespace tcea::numeric {

Var Tape::push(Matrix value, bool differentiable,
               std::function<void(Tape&, const Matrix&)> propagate) {
  Node node;
  node.value = std::move(value);
  node.differentiable = differentiable;
  if (differentiable) node.propagate = std::move(propagate);
  nodes_.push_back(std::move(node));
  return Var{nodes_.size() - 1};
}

bool Tape::any_differentiable(std::initializer_list<Var> vars) const {
  return std::any_of(vars.begin(), vars.end(),
                     [this](Var v) { return nodes_.at(v.id).differentiable; });
}

void Tape::accumulate(Var target, const Matrix& contribution) {
  Node& node = nodes_[target.id];
  if (!node.differentiable) return;
  if (node.adjoint.size() == 0) {
    node.adjoint = contribution;
  } else {
    node.adjoint += contribution;
  }
}

Matrix Tape::grad(Var v) const {
  const Node& node = nodes_.at(v.id);
  if (node.adjoint.size() == 0) return Matrix::Zero(node.value.rows(), node.value.cols());
  return node.adjoint;
}

Var Tape::leaf(Matrix value) { return push(std::move(value), true, [](Tape&, const Matrix&) {}); }

Var Tape::constant(Matrix value) { return push(std::move(value), false, nullptr); }

Var Tape::stop_gradient(Var a) { return push(value(a), false, nullptr); }

Var Tape::add(Var a, Var b) {
  require_same_shape(value(a), value(b), "tape add");
  return push(value(a) + value(b), any_differentiable({a, b}),
              [a, b](Tape& t, const Matrix& g) {
                t.accumulate(a, g);
                t.accumulate(b, g);
              });
}

Var Tape::sub(Var a, Var b) {
  require_same_shape(value(a), value(b), "tape sub");
  return push(value(a) - value(b), any_differentiable({a, b}),
              [a, b](Tape& t, const Matrix& g) {
                t.accumulate(a, g);
                t.accumulate(b, -g);
              });
}

Var Tape::mul(Var a, Var b) {
  require_same_shape(value(a), value(b), "tape mul");
  return push(value(a).cwiseProduct(value(b)), any_differentiable({a, b}),
              [a, b](Tape& t, const Matrix& g) {
                if (t.differentiable(a)) t.accumulate(a, g.cwiseProduct(t.value(b)));
                if (t.differentiable(b)) t.accumulate(b, g.cwiseProduct(t.value(a)));
              });
}

Var Tape::matmul(Var a, Var b) {
  Matrix out = numeric::matmul(value(a), value(b));
  return push(std::move(out), any_differentiable({a, b}), [a, b](Tape& t, const Matrix& g) {
    if (t.differentiable(a)) t.accumulate(a, g * t.value(b).transpose());
    if (t.differentiable(b)) t.accumulate(b, t.value(a).transpose() * g);
  });
}

Var Tape::matmul_transposed(Var a, Var b) {
  Matrix out = numeric::matmul_transposed(value(a), value(b));
  return push(std::move(out), any_differentiable({a, b}), [a, b](Tape& t, const Matrix& g) {
    if (t.differentiable(a)) t.accumulate(a, g * t.value(b));
    if (t.differentiable(b)) t.accumulate(b, g.transpose() * t.value(a));
  });
}

Var Tape::add_row(Var a, Var row) {
  const Matrix& av = value(a);
  const Matrix& rv = value(row);
  if (rv.rows() != 1 || rv.cols() != av.cols()) {
    throw DimensionError("tape add_row: row must be 1x" + std::to_string(av.cols()));
  }
  Matrix out = av.rowwise() + rv.row(0);
  return push(std::move(out), any_differentiable({a, row}), [a, row](Tape& t, const Matrix& g) {
    t.accumulate(a, g);
    if (t.differentiable(row)) t.accumulate(row, g.colwise().sum());
  });
}

Var Tape::scale(Var a, double s) {
  return push(value(a) * s, differentiable(a),
              [a, s](Tape& t, const Matrix& g) { t.accumulate(a, g * s); });
}

Var Tape::add_scalar(Var a, double s) {
  Matrix out = value(a).array() + s;
  return push(std::move(out), differentiable(a),
              [a](Tape& t, const Matrix& g) { t.accumulate(a, g); });
}

Var Tape::unary(Var a, const UnaryFn& f, const UnaryFn& df) {
  const Matrix& av = value(a);
  Matrix out = av.unaryExpr(f);
  Matrix local = differentiable(a) ? Matrix(av.unaryExpr(df)) : Matrix();
  return pointwise(a, std::move(out), std::move(local));
}

Var Tape::binary(Var a, Var b, const BinaryFn& f, const BinaryFn& dfa, const BinaryFn& dfb) {
  const Matrix& av = value(a);
  const Matrix& bv = value(b);
  require_same_shape(av, bv, "tape binary");
  Matrix out = av.binaryExpr(bv, f);
  Matrix da = differentiable(a) ? Matrix(av.binaryExpr(bv, dfa)) : Matrix();
  Matrix db = differentiable(b) ? Matrix(av.binaryExpr(bv, dfb)) : Matrix();
  return push(std::move(out), any_differentiable({a, b}),
              [a, b, da = std::move(da), db = std::move(db)](Tape& t, const Matrix& g) {
                if (t.differentiable(a)) t.accumulate(a, g.cwiseProduct(da));
                if (t.differentiable(b)) t.accumulate(b, g.cwiseProduct(db));
              });
}

Var Tape::pointwise(Var a, Matrix out, Matrix local_grad) {
  require_same_shape(value(a), out, "tape pointwise");
  if (differentiable(a)) require_same_shape(out, local_grad, "tape pointwise gradient");
  return push(std::move(out), differentiable(a),
              [a, local = std::move(local_grad)](Tape& t, const Matrix& g) {
                t.accumulate(a, g.cwiseProduct(local));
              });
}

Var Tape::row_normalize(Var a) {
  const Matrix& av = value(a);
  Eigen::VectorXd sums = av.rowwise().sum();
  Matrix out = av.array().colwise() / sums.array();
  Matrix y = differentiable(a) ? out : Matrix();
  return push(std::move(out), differentiable(a),
              [a, sums = std::move(sums), y = std::move(y)](Tape& t, const Matrix& g) {
                // y_ij = a_ij / s_i  =>  dL/da_ij = (g_ij - sum_k g_ik y_ik) / s_i
                Eigen::VectorXd inner = g.cwiseProduct(y).rowwise().sum();
                Matrix d = (g.colwise() - inner).array().colwise() / sums.array();
                t.accumulate(a, d);
              });
}

Var Tape::clip(Var a, double lo, double hi) {
  return unary(
      a, [lo, hi](double v) { return std::clamp(v, lo, hi); },
      [lo, hi](double v) { return (v > lo && v < hi) ? 1.0 : 0.0; });
}

Var Tape::sum(Var a) {
  Matrix out(1, 1);
  out(0, 0) = value(a).sum();
  return push(std::move(out), differentiable(a), [a](Tape& t, const Matrix& g) {
    const Matrix& av = t.value(a);
    t.accumulate(a, Matrix::Constant(av.rows(), av.cols(), g(0, 0)));
  });
}

Var Tape::softmax_cross_entropy(Var logits, std::span<const int> labels) {
  const Matrix& z = value(logits);
  if (static_cast<std::size_t>(z.rows()) != labels.size()) {
    throw DimensionError("softmax_cross_entropy: label count does not match batch size");
  }
  const auto batch = static_cast<double>(z.rows());
  Matrix probs(z.rows(), z.cols());
  double loss = 0.0;
  for (Eigen::Index i = 0; i < z.rows(); ++i) {
    const double peak = z.row(i).maxCoeff();
    auto shifted = (z.row(i).array() - peak).eval();
    const double log_norm = std::log(shifted.exp().sum());
    probs.row(i) = (shifted - log_norm).exp().matrix();
    const int y = labels[static_cast<std::size_t>(i)];
    if (y < 0 || y >= z.cols()) throw DimensionError("softmax_cross_entropy: label out of range");
    loss -= shifted(y) - log_norm;
  }
  Matrix out(1, 1);
  out(0, 0) = loss / batch;
  std::vector<int> ys(labels.begin(), labels.end());
  return push(std::move(out), differentiable(logits),
              [logits, probs = std::move(probs), ys = std::move(ys), batch](Tape& t,
                                                                           const Matrix& g) {
                Matrix d = probs;
                for (std::size_t i = 0; i < ys.size(); ++i) {
                  d(static_cast<Eigen::Index>(i), ys[i]) -= 1.0;
                }
                t.accumulate(logits, d * (g(0, 0) / batch));
              });
}

void Tape::backward(Var output) {
  Node& out = nodes_.at(output.id);
  if (out.value.rows() != 1 || out.value.cols() != 1) {
    throw DimensionError("backward: output must be a 1x1 node");
  }
  for (Node& node : nodes_) node.adjoint.resize(0, 0);
  if (!out.differentiable) return;
  out.adjoint = Matrix::Ones(1, 1);
  for (std::size_t i = output.id + 1; i-- > 0;) {
    Node& node = nodes_[i];
    if (!node.differentiable || node.adjoint.size() == 0 || !node.propagate) continue;
    // Callbacks only write to adjoints of earlier nodes, so `node` stays put.
    node.propagate(*this, node.adjoint);
  }
}

}  // namespace tcea::numeric
