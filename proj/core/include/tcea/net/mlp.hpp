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
#include <string>
#include <variant>
#include <vector>

#include "tcea/net/channelprop.hpp"
#include "tcea/numeric/rng.hpp"
#include "tcea/tree/activation_tree.hpp"

namespace tcea::net {

enum class Baseline { Relu, Swish, LeakyRelu, Elu };

const char* to_string(Baseline baseline) noexcept;
// Accepts ReLU, Swish, LeakyReLU, ELU (case-insensitive).
Baseline parse_baseline(const std::string& name);

// Hidden-layer nonlinearity: an evolved tree f(z, m, c) or a fixed baseline
// g(z) that ignores the channels.
using Activation = std::variant<tree::ActivationTree, Baseline>;

std::string describe(const Activation& activation);

// How hidden layers obtain their missingness/confidence channels.
enum class ChannelMode {
  // ChannelProp through each layer's weights.
  Propagate,
  // Every hidden unit gets the per-sample mean of the input-layer channels.
  UniformBroadcast,
};

struct MLPConfig {
  std::vector<std::size_t> hidden_widths{64, 64};
  Activation activation = Baseline::Relu;
  double channelprop_epsilon = kChannelPropEpsilon;
  double lr = 1e-3;
  double weight_decay = 1e-4;
  std::size_t batch_size = 32;
  std::uint64_t seed = 0;
  ChannelMode channel_mode = ChannelMode::Propagate;
  // Backpropagate through ChannelProp and the m, c arguments of the tree.
  bool differentiate_channels = false;

  // Throws ConfigError on empty/zero widths, epsilon <= 0, lr < 0, batch 0.
  void validate() const;
};

struct Layer {
  Matrix weights;  // d_out × d_in
  Matrix bias;     // 1 × d_out
};

// Per-hidden-layer state after the activation, plus the output logits.
struct ForwardTrace {
  std::vector<ThreeChannelState> hidden;
  Matrix logits;
};

class Mlp {
 public:
  // Glorot-uniform weights, zero biases.
  Mlp(std::size_t input_width, std::size_t classes, MLPConfig config, numeric::RngStream& rng);
  Mlp(std::vector<Layer> layers, MLPConfig config);

  const MLPConfig& config() const noexcept { return config_; }
  const std::vector<Layer>& layers() const noexcept { return layers_; }
  std::vector<Layer>& mutable_layers() noexcept { return layers_; }
  std::size_t input_width() const noexcept;
  std::size_t classes() const noexcept;

  // Throws DimensionError when the input width does not match and
  // NumericError when an activation produces a non-finite value.
  ForwardTrace forward(const ThreeChannelState& input) const;
  Matrix logits(const ThreeChannelState& input) const { return forward(input).logits; }

 private:
  std::vector<Layer> layers_;
  MLPConfig config_;
};

// Hidden-layer channels for layer `index` given the previous layer's
// channels (ChannelProp) or the input-layer channels (UniformBroadcast).
PropagatedChannels hidden_channels(const MLPConfig& config, const Matrix& weights,
                                   const Matrix& prev_missingness, const Matrix& prev_confidence,
                                   const ThreeChannelState& input);

// Applies the activation elementwise; `grad` (optional) receives dvalue/dz.
void apply_activation(const Activation& activation, const Matrix& z, const Matrix& missingness,
                      const Matrix& confidence, Matrix& value, Matrix* grad);

Matrix softmax_rows(const Matrix& logits);
Matrix predict_proba(const Mlp& model, const ThreeChannelState& input);
std::vector<int> predict(const Mlp& model, const ThreeChannelState& input);

}  // namespace tcea::net
