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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "tcea/error.hpp"
#include "tcea/numeric/adam.hpp"
#include "tcea/numeric/finite_difference.hpp"
#include "tcea/numeric/matrix.hpp"
#include "tcea/numeric/rng.hpp"
#include "tcea/numeric/tape.hpp"
#include "tcea/tree/operators.hpp"

using namespace tcea;
using namespace tcea::numeric;

namespace {

Matrix random_matrix(RngStream& rng, Eigen::Index r, Eigen::Index c, double lo = -2.0,
                     double hi = 2.0) {
  Matrix m(r, c);
  for (Eigen::Index i = 0; i < r; ++i)
    for (Eigen::Index j = 0; j < c; ++j) m(i, j) = rng.uniform(lo, hi);
  return m;
}

Matrix naive_matmul(const Matrix& a, const Matrix& b) {
  Matrix out = Matrix::Zero(a.rows(), b.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < b.cols(); ++j)
      for (Eigen::Index k = 0; k < a.cols(); ++k) out(i, j) += a(i, k) * b(k, j);
  return out;
}

bool close_rel(double a, double b, double rel, double abs_floor) {
  return std::abs(a - b) <= std::max(abs_floor, rel * std::max(std::abs(a), std::abs(b)));
}

// Scalar reference Adam, written out from the update equations.
struct ScalarAdam {
  double m = 0.0, v = 0.0;
  double step(double p, double g, int t, double lr, double wd) {
    p -= lr * wd * p;
    m = 0.9 * m + 0.1 * g;
    v = 0.999 * v + 0.001 * g * g;
    const double mh = m / (1.0 - std::pow(0.9, t));
    const double vh = v / (1.0 - std::pow(0.999, t));
    return p - lr * mh / (std::sqrt(vh) + 1e-8);
  }
};

}  // namespace

TEST_CASE("matmul examples") {
  const Matrix a = from_rows({{1, 2}, {3, 4}});
  CHECK(matmul(a, from_rows({{1, 0}, {0, 1}})) == a);
  CHECK(matmul(from_rows({{1, 2}}), from_rows({{3}, {4}}))(0, 0) == 11.0);
}

TEST_CASE("matmul matches a triple-loop oracle") {
  RngStream rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix a = random_matrix(rng, 3, 4);
    const Matrix b = random_matrix(rng, 4, 2);
    const Matrix got = matmul(a, b);
    const Matrix want = naive_matmul(a, b);
    for (Eigen::Index i = 0; i < got.rows(); ++i)
      for (Eigen::Index j = 0; j < got.cols(); ++j) CHECK(std::abs(got(i, j) - want(i, j)) <= 1e-12);
  }
}

TEST_CASE("matmul rejects bad shapes and non-finite input") {
  CHECK_THROWS_AS(matmul(Matrix::Zero(2, 3), Matrix::Zero(2, 3)), DimensionError);
  Matrix bad = Matrix::Zero(1, 1);
  bad(0, 0) = std::nan("");
  CHECK_THROWS_AS(matmul(bad, bad), NumericError);
}

TEST_CASE("rng streams are deterministic and children are independent") {
  RngStream a(42), b(42);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
  const RngStream parent(42);
  CHECK(parent.child("x").next_u64() == parent.child("x").next_u64());
  CHECK(parent.child("x").next_u64() != parent.child("y").next_u64());
  CHECK(parent.child(1).next_u64() != parent.child(2).next_u64());

  RngStream u(3);
  double sum = 0.0;
  for (int i = 0; i < 10000; ++i) {
    const double v = u.uniform();
    CHECK(v >= 0.0);
    CHECK(v < 1.0);
    sum += v;
  }
  CHECK(std::abs(sum / 10000.0 - 0.5) < 0.02);
  for (int i = 0; i < 1000; ++i) CHECK(u.below(7) < 7u);
}

TEST_CASE("adam examples") {
  SUBCASE("zero gradient is a fixed point") {
    Matrix p = from_rows({{1.5, -2.0}});
    const Matrix before = p;
    AdamState s = AdamState::zeros_like(p);
    for (long t = 1; t <= 5; ++t) adam_step(p, Matrix::Zero(1, 2), s, t, 1e-3, 0.0);
    CHECK(p == before);
  }
  SUBCASE("first step has magnitude lr") {
    Matrix p = from_rows({{1.0}});
    AdamState s = AdamState::zeros_like(p);
    adam_step(p, from_rows({{1.0}}), s, 1, 1e-3, 0.0);
    CHECK(p(0, 0) == doctest::Approx(0.999).epsilon(1e-9));
  }
  SUBCASE("two steps match a scalar reference") {
    Matrix p = from_rows({{0.7}});
    AdamState s = AdamState::zeros_like(p);
    ScalarAdam ref;
    double q = 0.7;
    for (int t = 1; t <= 2; ++t) {
      adam_step(p, from_rows({{0.3}}), s, t, 1e-2, 1e-4);
      q = ref.step(q, 0.3, t, 1e-2, 1e-4);
      CHECK(std::abs(p(0, 0) - q) <= 1e-12);
    }
  }
  SUBCASE("errors") {
    Matrix p = from_rows({{1.0}});
    AdamState s = AdamState::zeros_like(p);
    CHECK_THROWS_AS(adam_step(p, from_rows({{INFINITY}}), s, 1, 1e-3, 0.0), TrainingDivergence);
    CHECK_THROWS_AS(adam_step(p, from_rows({{1.0}}), s, 0, 1e-3, 0.0), ConfigError);
  }
}

TEST_CASE("finite differences") {
  const std::vector<double> x{3.0};
  const auto g = finite_difference_gradient([](std::span<const double> v) { return v[0] * v[0]; }, x);
  CHECK(std::abs(g[0] - 6.0) <= 1e-6);
  const std::vector<double> y{1.0, 2.0, 3.0};
  for (double v : finite_difference_gradient([](std::span<const double>) { return 4.0; }, y)) {
    CHECK(v == 0.0);
  }
  CHECK_THROWS_AS(finite_difference_gradient(
                      [](std::span<const double> v) { return v[0] > 3.0 ? NAN : 1.0; }, x),
                  OracleError);
}

TEST_CASE("linear model loss: tape matches finite differences") {
  // y = w0 * t + w1 on three points, squared error.
  const double ts[3] = {0.5, -1.0, 2.0};
  const double ys[3] = {1.0, 0.0, 3.5};
  auto loss = [&](std::span<const double> w) {
    double s = 0.0;
    for (int i = 0; i < 3; ++i) {
      const double r = w[0] * ts[i] + w[1] - ys[i];
      s += r * r;
    }
    return s;
  };
  const std::vector<double> w{0.3, -0.2};
  Tape tape;
  const Var wv = tape.leaf(from_rows({{w[0]}, {w[1]}}));
  const Var design = tape.constant(from_rows({{0.5, 1.0}, {-1.0, 1.0}, {2.0, 1.0}}));
  const Var target = tape.constant(from_rows({{1.0}, {0.0}, {3.5}}));
  const Var r = tape.sub(tape.matmul(design, wv), target);
  const Var out = tape.sum(tape.mul(r, r));
  CHECK(tape.value(out)(0, 0) == doctest::Approx(loss(w)).epsilon(1e-12));
  tape.backward(out);
  const Matrix g = tape.grad(wv);
  const auto fd = finite_difference_gradient(loss, w);
  for (int i = 0; i < 2; ++i) CHECK(close_rel(g(i, 0), fd[static_cast<std::size_t>(i)], 1e-4, 1e-6));
}

namespace {

// Sum of a tape expression built by `build` from one leaf; returns analytic
// and finite-difference gradients for the leaf.
template <typename Build>
void check_primitive(const Matrix& x0, Build build, double rel = 1e-4) {
  Tape tape;
  const Var x = tape.leaf(x0);
  const Var out = tape.sum(build(tape, x));
  tape.backward(out);
  const Matrix g = tape.grad(x);
  std::vector<double> flat(x0.data(), x0.data() + x0.size());
  auto f = [&](std::span<const double> v) {
    Matrix m(x0.rows(), x0.cols());
    std::copy(v.begin(), v.end(), m.data());
    Tape t;
    return t.value(t.sum(build(t, t.leaf(m))))(0, 0);
  };
  const auto fd = finite_difference_gradient(f, flat);
  for (std::size_t i = 0; i < fd.size(); ++i) {
    CHECK(close_rel(g.data()[i], fd[i], rel, 1e-6));
  }
}

}  // namespace

TEST_CASE("tape primitives match finite differences") {
  RngStream rng(5);
  const Matrix other = random_matrix(rng, 3, 4);
  const Matrix right = random_matrix(rng, 4, 2);
  const Matrix row = random_matrix(rng, 1, 4);
  for (int trial = 0; trial < 100; ++trial) {
    const Matrix x0 = random_matrix(rng, 3, 4);
    check_primitive(x0, [&](Tape& t, Var x) { return t.add(x, t.constant(other)); });
    check_primitive(x0, [&](Tape& t, Var x) { return t.mul(x, t.mul(x, t.constant(other))); });
    check_primitive(x0, [&](Tape& t, Var x) { return t.matmul(x, t.constant(right)); });
    check_primitive(x0, [&](Tape& t, Var x) {
      return t.matmul_transposed(t.constant(other), x);
    });
    check_primitive(x0, [&](Tape& t, Var x) { return t.add_row(x, t.constant(row)); });
    check_primitive(x0, [&](Tape& t, Var x) {
      return t.mul(t.row_normalize(t.add_scalar(t.mul(x, x), 0.5)), t.constant(other));
    });
    check_primitive(x0, [&](Tape& t, Var x) {
      const std::vector<int> labels{0, 3, 1};
      return t.softmax_cross_entropy(x, labels);
    });
  }
}

TEST_CASE("tape adjoints for every operator match finite differences away from kinks") {
  RngStream rng(9);
  for (tree::UnaryOp op : tree::kUnaryOps) {
    int checked = 0;
    while (checked < 100) {
      const double u = rng.uniform(-3.0, 3.0);
      if (tree::kink_distance(op, u) < 1e-3) continue;
      ++checked;
      Tape tape;
      const Var x = tape.leaf(from_rows({{u}}));
      const Var y = tape.unary(
          x, [op](double v) { return tree::apply(op, v); },
          [op](double v) { return tree::derivative(op, v); });
      tape.backward(tape.sum(y));
      const std::vector<double> p{u};
      const auto fd = finite_difference_gradient(
          [op](std::span<const double> v) { return tree::apply(op, v[0]); }, p);
      CHECK_MESSAGE(close_rel(tape.grad(x)(0, 0), fd[0], 1e-4, 1e-6), tree::name(op), " at ", u);
    }
  }
  for (tree::BinaryOp op : tree::kBinaryOps) {
    int checked = 0;
    while (checked < 100) {
      const double a = rng.uniform(-3.0, 3.0);
      const double b = rng.uniform(-3.0, 3.0);
      if (tree::kink_distance(op, a, b) < 1e-3) continue;
      if (op == tree::BinaryOp::Div && std::abs(b) < 0.05) continue;
      ++checked;
      Tape tape;
      const Var va = tape.leaf(from_rows({{a}}));
      const Var vb = tape.leaf(from_rows({{b}}));
      const Var y = tape.binary(
          va, vb, [op](double p, double q) { return tree::apply(op, p, q); },
          [op](double p, double q) { return tree::derivative_left(op, p, q); },
          [op](double p, double q) { return tree::derivative_right(op, p, q); });
      tape.backward(tape.sum(y));
      const std::vector<double> p{a, b};
      const auto fd = finite_difference_gradient(
          [op](std::span<const double> v) { return tree::apply(op, v[0], v[1]); }, p);
      CHECK(close_rel(tape.grad(va)(0, 0), fd[0], 1e-4, 1e-6));
      CHECK(close_rel(tape.grad(vb)(0, 0), fd[1], 1e-4, 1e-6));
    }
  }
}

TEST_CASE("stop-gradient blocks every upstream adjoint") {
  Tape tape;
  const Var x = tape.leaf(from_rows({{1.0, 2.0}}));
  const Var blocked = tape.stop_gradient(tape.mul(x, x));
  const Var out = tape.sum(tape.mul(blocked, tape.constant(from_rows({{3.0, 4.0}}))));
  tape.backward(out);
  CHECK(tape.grad(x) == Matrix::Zero(1, 2));
  CHECK_FALSE(tape.differentiable(blocked));

  Tape mixed;
  const Var y = mixed.leaf(from_rows({{2.0}}));
  const Var sum = mixed.sum(mixed.add(mixed.stop_gradient(mixed.mul(y, y)), y));
  mixed.backward(sum);
  CHECK(mixed.grad(y)(0, 0) == 1.0);
}

TEST_CASE("identical seeds give bit-identical matrices") {
  RngStream a(77), b(77);
  CHECK(random_matrix(a, 5, 5) == random_matrix(b, 5, 5));
}
