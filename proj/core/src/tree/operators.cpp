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

#include "tcea/tree/operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace tcea::tree {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

double sigmoid(double u) noexcept {
  if (u >= 0.0) return 1.0 / (1.0 + std::exp(-u));
  const double e = std::exp(u);
  return e / (1.0 + e);
}

double sign_or_zero(double u) noexcept { return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0); }

double guarded_denominator(double b) noexcept { return b + (b >= 0.0 ? kGuard : -kGuard); }

}  // namespace

std::string_view name(Channel channel) noexcept {
  switch (channel) {
    case Channel::X: return "x";
    case Channel::M: return "m";
    case Channel::C: return "c";
  }
  return "?";
}

std::string_view name(UnaryOp op) noexcept {
  switch (op) {
    case UnaryOp::Identity: return "id";
    case UnaryOp::Negate: return "neg";
    case UnaryOp::Abs: return "abs";
    case UnaryOp::Square: return "square";
    case UnaryOp::Cube: return "cube";
    case UnaryOp::Sqrt: return "sqrt";
    case UnaryOp::Exp: return "exp";
    case UnaryOp::LogAbs: return "logabs";
    case UnaryOp::Sin: return "sin";
    case UnaryOp::Cos: return "cos";
    case UnaryOp::Tanh: return "tanh";
    case UnaryOp::Sigmoid: return "sigmoid";
    case UnaryOp::Relu: return "relu";
    case UnaryOp::LeakyRelu: return "leakyrelu";
    case UnaryOp::Elu: return "elu";
    case UnaryOp::Softplus: return "softplus";
  }
  return "?";
}

std::string_view name(BinaryOp op) noexcept {
  switch (op) {
    case BinaryOp::Add: return "add";
    case BinaryOp::Sub: return "sub";
    case BinaryOp::Mul: return "mul";
    case BinaryOp::Div: return "div";
    case BinaryOp::Max: return "max";
    case BinaryOp::Min: return "min";
  }
  return "?";
}

std::optional<Channel> parse_channel(std::string_view token) noexcept {
  for (Channel c : kAllChannels) {
    if (name(c) == token) return c;
  }
  return std::nullopt;
}

std::optional<UnaryOp> parse_unary(std::string_view token) noexcept {
  for (UnaryOp op : kUnaryOps) {
    if (name(op) == token) return op;
  }
  return std::nullopt;
}

std::optional<BinaryOp> parse_binary(std::string_view token) noexcept {
  for (BinaryOp op : kBinaryOps) {
    if (name(op) == token) return op;
  }
  return std::nullopt;
}

double apply(UnaryOp op, double u) noexcept {
  switch (op) {
    case UnaryOp::Identity: return u;
    case UnaryOp::Negate: return -u;
    case UnaryOp::Abs: return std::abs(u);
    case UnaryOp::Square: return u * u;
    case UnaryOp::Cube: return u * u * u;
    case UnaryOp::Sqrt: return std::sqrt(std::abs(u));
    case UnaryOp::Exp: return std::exp(std::clamp(u, -kExpClamp, kExpClamp));
    case UnaryOp::LogAbs: return std::log(std::abs(u) + kGuard);
    case UnaryOp::Sin: return std::sin(u);
    case UnaryOp::Cos: return std::cos(u);
    case UnaryOp::Tanh: return std::tanh(u);
    case UnaryOp::Sigmoid: return sigmoid(u);
    case UnaryOp::Relu: return u > 0.0 ? u : 0.0;
    case UnaryOp::LeakyRelu: return u > 0.0 ? u : kLeakySlope * u;
    case UnaryOp::Elu: return u > 0.0 ? u : kEluAlpha * std::expm1(u);
    case UnaryOp::Softplus: return u > 30.0 ? u : std::log1p(std::exp(u));
  }
  return 0.0;
}

double derivative(UnaryOp op, double u) noexcept {
  switch (op) {
    case UnaryOp::Identity: return 1.0;
    case UnaryOp::Negate: return -1.0;
    case UnaryOp::Abs: return sign_or_zero(u);
    case UnaryOp::Square: return 2.0 * u;
    case UnaryOp::Cube: return 3.0 * u * u;
    case UnaryOp::Sqrt: return u == 0.0 ? 0.0 : sign_or_zero(u) / (2.0 * std::sqrt(std::abs(u)));
    case UnaryOp::Exp: return std::abs(u) < kExpClamp ? std::exp(u) : 0.0;
    case UnaryOp::LogAbs: return sign_or_zero(u) / (std::abs(u) + kGuard);
    case UnaryOp::Sin: return std::cos(u);
    case UnaryOp::Cos: return -std::sin(u);
    case UnaryOp::Tanh: {
      const double t = std::tanh(u);
      return 1.0 - t * t;
    }
    case UnaryOp::Sigmoid: {
      const double s = sigmoid(u);
      return s * (1.0 - s);
    }
    case UnaryOp::Relu: return u > 0.0 ? 1.0 : 0.0;
    case UnaryOp::LeakyRelu: return u > 0.0 ? 1.0 : kLeakySlope;
    case UnaryOp::Elu: return u > 0.0 ? 1.0 : kEluAlpha * std::exp(u);
    case UnaryOp::Softplus: return sigmoid(u);
  }
  return 0.0;
}

double apply(BinaryOp op, double a, double b) noexcept {
  switch (op) {
    case BinaryOp::Add: return a + b;
    case BinaryOp::Sub: return a - b;
    case BinaryOp::Mul: return a * b;
    case BinaryOp::Div: return a / guarded_denominator(b);
    case BinaryOp::Max: return a >= b ? a : b;
    case BinaryOp::Min: return a <= b ? a : b;
  }
  return 0.0;
}

double derivative_left(BinaryOp op, double a, double b) noexcept {
  switch (op) {
    case BinaryOp::Add: return 1.0;
    case BinaryOp::Sub: return 1.0;
    case BinaryOp::Mul: return b;
    case BinaryOp::Div: return 1.0 / guarded_denominator(b);
    case BinaryOp::Max: return a >= b ? 1.0 : 0.0;
    case BinaryOp::Min: return a <= b ? 1.0 : 0.0;
  }
  return 0.0;
}

double derivative_right(BinaryOp op, double a, double b) noexcept {
  switch (op) {
    case BinaryOp::Add: return 1.0;
    case BinaryOp::Sub: return -1.0;
    case BinaryOp::Mul: return a;
    case BinaryOp::Div: {
      const double den = guarded_denominator(b);
      return -a / (den * den);
    }
    case BinaryOp::Max: return a >= b ? 0.0 : 1.0;
    case BinaryOp::Min: return a <= b ? 0.0 : 1.0;
  }
  return 0.0;
}

double kink_distance(UnaryOp op, double u) noexcept {
  switch (op) {
    case UnaryOp::Abs:
    case UnaryOp::Sqrt:
    case UnaryOp::LogAbs:
    case UnaryOp::Relu:
    case UnaryOp::LeakyRelu:
      return std::abs(u);
    case UnaryOp::Exp: return std::min(std::abs(u - kExpClamp), std::abs(u + kExpClamp));
    default: return kInf;
  }
}

double kink_distance(BinaryOp op, double a, double b) noexcept {
  switch (op) {
    case BinaryOp::Div: return std::abs(b);
    case BinaryOp::Max:
    case BinaryOp::Min:
      return std::abs(a - b);
    default: return kInf;
  }
}

}  // namespace tcea::tree
