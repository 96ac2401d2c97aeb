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

#include "tcea/net/mlp.hpp"

#include <algorithm>
#include <cctype>
#include <cmath>

#include "tcea/error.hpp"
#include "tcea/tree/evaluate.hpp"
#include "tcea/tree/format.hpp"

namespace tcea::net {

const char* to_string(Baseline baseline) noexcept {
  switch (baseline) {
    case Baseline::Relu: return "ReLU";
    case Baseline::Swish: return "Swish";
    case Baseline::LeakyRelu: return "LeakyReLU";
    case Baseline::Elu: return "ELU";
  }
  return "?";
}

Baseline parse_baseline(const std::string& name) {
  std::string lower = name;
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return std::tolower(ch); });
  if (lower == "relu") return Baseline::Relu;
  if (lower == "swish") return Baseline::Swish;
  if (lower == "leakyrelu" || lower == "leaky_relu") return Baseline::LeakyRelu;
  if (lower == "elu") return Baseline::Elu;
  throw ConfigError("unknown baseline activation '" + name + "'");
}

std::string describe(const Activation& activation) {
  if (const auto* tree = std::get_if<tree::ActivationTree>(&activation)) return tree::format(*tree);
  return to_string(std::get<Baseline>(activation));
}

void MLPConfig::validate() const {
  if (hidden_widths.empty()) throw ConfigError("mlp: at least one hidden layer required");
  if (std::any_of(hidden_widths.begin(), hidden_widths.end(), [](std::size_t w) { return w == 0; })) {
    throw ConfigError("mlp: hidden widths must be positive");
  }
  if (!(channelprop_epsilon > 0.0)) throw ConfigError("mlp: channelprop epsilon must be positive");
  if (!(lr >= 0.0)) throw ConfigError("mlp: learning rate must be non-negative");
  if (!(weight_decay >= 0.0)) throw ConfigError("mlp: weight decay must be non-negative");
  if (batch_size == 0) throw ConfigError("mlp: batch size must be positive");
}

Mlp::Mlp(std::size_t input_width, std::size_t classes, MLPConfig config, numeric::RngStream& rng)
    : config_(std::move(config)) {
  config_.validate();
  if (input_width == 0 || classes < 2) throw ConfigError("mlp: need inputs and >= 2 classes");
  std::vector<std::size_t> widths{input_width};
  widths.insert(widths.end(), config_.hidden_widths.begin(), config_.hidden_widths.end());
  widths.push_back(classes);
  for (std::size_t l = 0; l + 1 < widths.size(); ++l) {
    const auto fan_in = static_cast<Eigen::Index>(widths[l]);
    const auto fan_out = static_cast<Eigen::Index>(widths[l + 1]);
    const double limit = std::sqrt(6.0 / static_cast<double>(fan_in + fan_out));
    Layer layer;
    layer.weights.resize(fan_out, fan_in);
    for (Eigen::Index i = 0; i < layer.weights.size(); ++i) {
      layer.weights.data()[i] = rng.uniform(-limit, limit);
    }
    layer.bias = Matrix::Zero(1, fan_out);
    layers_.push_back(std::move(layer));
  }
}

Mlp::Mlp(std::vector<Layer> layers, MLPConfig config)
    : layers_(std::move(layers)), config_(std::move(config)) {
  config_.validate();
  if (layers_.size() != config_.hidden_widths.size() + 1) {
    throw DimensionError("mlp: layer count does not match hidden widths");
  }
  for (std::size_t l = 0; l < layers_.size(); ++l) {
    const Layer& layer = layers_[l];
    if (layer.bias.rows() != 1 || layer.bias.cols() != layer.weights.rows()) {
      throw DimensionError("mlp: bias shape mismatch in layer " + std::to_string(l));
    }
    if (l > 0 && layer.weights.cols() != layers_[l - 1].weights.rows()) {
      throw DimensionError("mlp: layer " + std::to_string(l) + " input width mismatch");
    }
  }
}

std::size_t Mlp::input_width() const noexcept {
  return static_cast<std::size_t>(layers_.front().weights.cols());
}

std::size_t Mlp::classes() const noexcept {
  return static_cast<std::size_t>(layers_.back().weights.rows());
}

PropagatedChannels hidden_channels(const MLPConfig& config, const Matrix& weights,
                                   const Matrix& prev_missingness, const Matrix& prev_confidence,
                                   const ThreeChannelState& input) {
  if (config.channel_mode == ChannelMode::Propagate) {
    return channelprop(weights, prev_missingness, prev_confidence, config.channelprop_epsilon);
  }
  const Eigen::Index width = weights.rows();
  PropagatedChannels out;
  Eigen::VectorXd mean_m = input.missingness.rowwise().mean();
  Eigen::VectorXd mean_c = input.confidence.rowwise().mean();
  out.missingness = mean_m.replicate(1, width);
  out.confidence = mean_c.replicate(1, width);
  return out;
}

namespace {

double swish(double z) { return z / (1.0 + std::exp(-z)); }

double swish_grad(double z) {
  const double s = 1.0 / (1.0 + std::exp(-z));
  return s + z * s * (1.0 - s);
}

}  // namespace

void apply_activation(const Activation& activation, const Matrix& z, const Matrix& missingness,
                      const Matrix& confidence, Matrix& value, Matrix* grad) {
  value.resize(z.rows(), z.cols());
  if (grad != nullptr) grad->resize(z.rows(), z.cols());
  const auto n = static_cast<std::size_t>(z.size());
  if (const auto* tree = std::get_if<tree::ActivationTree>(&activation)) {
    numeric::require_same_shape(z, missingness, "tree activation (m)");
    numeric::require_same_shape(z, confidence, "tree activation (c)");
    tree::eval_into(*tree, std::span<const double>(z.data(), n),
                    std::span<const double>(missingness.data(), n),
                    std::span<const double>(confidence.data(), n), std::span<double>(value.data(), n),
                    grad != nullptr ? std::span<double>(grad->data(), n) : std::span<double>());
    return;
  }
  const Baseline baseline = std::get<Baseline>(activation);
  for (std::size_t i = 0; i < n; ++i) {
    const double u = z.data()[i];
    double v = 0.0;
    double g = 0.0;
    switch (baseline) {
      case Baseline::Relu:
        v = tree::apply(tree::UnaryOp::Relu, u);
        g = tree::derivative(tree::UnaryOp::Relu, u);
        break;
      case Baseline::LeakyRelu:
        v = tree::apply(tree::UnaryOp::LeakyRelu, u);
        g = tree::derivative(tree::UnaryOp::LeakyRelu, u);
        break;
      case Baseline::Elu:
        v = tree::apply(tree::UnaryOp::Elu, u);
        g = tree::derivative(tree::UnaryOp::Elu, u);
        break;
      case Baseline::Swish:
        v = swish(u);
        g = swish_grad(u);
        break;
    }
    value.data()[i] = v;
    if (grad != nullptr) grad->data()[i] = g;
  }
}

ForwardTrace Mlp::forward(const ThreeChannelState& input) const {
  input.validate();
  if (static_cast<std::size_t>(input.width()) != input_width()) {
    throw DimensionError("mlp forward: input width " + std::to_string(input.width()) +
                         ", expected " + std::to_string(input_width()));
  }
  ForwardTrace trace;
  const Matrix* h = &input.values;
  const Matrix* m = &input.missingness;
  const Matrix* c = &input.confidence;
  for (std::size_t l = 0; l + 1 < layers_.size(); ++l) {
    const Layer& layer = layers_[l];
    Matrix z = (*h * layer.weights.transpose()).rowwise() + layer.bias.row(0);
    PropagatedChannels channels = hidden_channels(config_, layer.weights, *m, *c, input);
    ThreeChannelState state;
    apply_activation(config_.activation, z, channels.missingness, channels.confidence,
                     state.values, nullptr);
    numeric::require_finite(state.values, "mlp forward activation");
    state.missingness = std::move(channels.missingness);
    state.confidence = std::move(channels.confidence);
    trace.hidden.push_back(std::move(state));
    h = &trace.hidden.back().values;
    m = &trace.hidden.back().missingness;
    c = &trace.hidden.back().confidence;
  }
  const Layer& out = layers_.back();
  trace.logits = (*h * out.weights.transpose()).rowwise() + out.bias.row(0);
  numeric::require_finite(trace.logits, "mlp logits");
  return trace;
}

Matrix softmax_rows(const Matrix& logits) {
  Matrix probs(logits.rows(), logits.cols());
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    auto e = (logits.row(i).array() - logits.row(i).maxCoeff()).exp();
    probs.row(i) = (e / e.sum()).matrix();
  }
  return probs;
}

Matrix predict_proba(const Mlp& model, const ThreeChannelState& input) {
  return softmax_rows(model.logits(input));
}

std::vector<int> predict(const Mlp& model, const ThreeChannelState& input) {
  const Matrix logits = model.logits(input);
  std::vector<int> out(static_cast<std::size_t>(logits.rows()));
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    Eigen::Index best = 0;
    logits.row(i).maxCoeff(&best);
    out[static_cast<std::size_t>(i)] = static_cast<int>(best);
  }
  return out;
}

}  // namespace tcea::net
