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

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>

namespace tcea::tree {

enum class Channel : std::uint8_t { X, M, C };

enum class UnaryOp : std::uint8_t {
  Identity,
  Negate,
  Abs,
  Square,
  Cube,
  Sqrt,
  Exp,
  LogAbs,
  Sin,
  Cos,
  Tanh,
  Sigmoid,
  Relu,
  LeakyRelu,
  Elu,
  Softplus,
};

enum class BinaryOp : std::uint8_t { Add, Sub, Mul, Div, Max, Min };

inline constexpr std::array<Channel, 3> kAllChannels{Channel::X, Channel::M, Channel::C};

inline constexpr std::array<UnaryOp, 16> kUnaryOps{
    UnaryOp::Identity, UnaryOp::Negate, UnaryOp::Abs,     UnaryOp::Square,
    UnaryOp::Cube,     UnaryOp::Sqrt,   UnaryOp::Exp,     UnaryOp::LogAbs,
    UnaryOp::Sin,      UnaryOp::Cos,    UnaryOp::Tanh,    UnaryOp::Sigmoid,
    UnaryOp::Relu,     UnaryOp::LeakyRelu, UnaryOp::Elu,  UnaryOp::Softplus};

inline constexpr std::array<BinaryOp, 6> kBinaryOps{BinaryOp::Add, BinaryOp::Sub, BinaryOp::Mul,
                                                    BinaryOp::Div, BinaryOp::Max, BinaryOp::Min};

// Fixed terminal constants.
inline constexpr std::array<double, 9> kConstants{0.0, 0.1, -0.1, 0.5, -0.5, 1.0, -1.0, 2.0, -2.0};

// Numerical safeguards.
inline constexpr double kExpClamp = 20.0;
inline constexpr double kGuard = 1e-6;       // log |u| + guard, division denominator offset
inline constexpr double kOutputClamp = 1e12; // every node output is clamped to ±this
inline constexpr double kLeakySlope = 0.01;
inline constexpr double kEluAlpha = 1.0;

std::string_view name(Channel channel) noexcept;
std::string_view name(UnaryOp op) noexcept;
std::string_view name(BinaryOp op) noexcept;

std::optional<Channel> parse_channel(std::string_view token) noexcept;
std::optional<UnaryOp> parse_unary(std::string_view token) noexcept;
std::optional<BinaryOp> parse_binary(std::string_view token) noexcept;

// Value and derivative of one safeguarded operator application, before the
// shared output clamp. Derivatives follow the subgradient conventions:
// relu'(0) = 0, |.|'(0) = 0, leaky'(0) = slope, min/max ties go to the left
// argument.
double apply(UnaryOp op, double u) noexcept;
double derivative(UnaryOp op, double u) noexcept;
double apply(BinaryOp op, double a, double b) noexcept;
// ∂/∂a and ∂/∂b.
double derivative_left(BinaryOp op, double a, double b) noexcept;
double derivative_right(BinaryOp op, double a, double b) noexcept;

// Clamps a node output into ±kOutputClamp (NaN cannot arise from finite
// inputs after the operator guards).
inline double clamp_output(double v) noexcept {
  return v > kOutputClamp ? kOutputClamp : (v < -kOutputClamp ? -kOutputClamp : v);
}
inline bool output_clamped(double raw) noexcept { return raw > kOutputClamp || raw < -kOutputClamp; }

// Distance from u to the nearest point where the operator is not smooth
// (infinity when it is smooth everywhere).
double kink_distance(UnaryOp op, double u) noexcept;
double kink_distance(BinaryOp op, double a, double b) noexcept;

}  // namespace tcea::tree
