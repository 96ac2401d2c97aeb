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

#include "tcea/net/train.hpp"

#include <cmath>
#include <numeric>
#include <sstream>

#include "tcea/error.hpp"
#include "tcea/numeric/adam.hpp"
#include "tcea/numeric/tape.hpp"
#include "tcea/tree/tape_record.hpp"

namespace tcea::net {

using numeric::Tape;
using numeric::Var;

ThreeChannelState as_state(const data::ChannelSplit& split) {
  return ThreeChannelState{split.x, split.m, split.c};
}

double accuracy(const Mlp& model, const data::ChannelSplit& split) {
  if (split.rows() == 0) return 0.0;
  const std::vector<int> pred = predict(model, as_state(split));
  std::size_t hits = 0;
  for (std::size_t i = 0; i < pred.size(); ++i) hits += pred[i] == split.y[i] ? 1 : 0;
  return static_cast<double>(hits) / static_cast<double>(pred.size());
}

namespace {

struct TapeChannels {
  Var missingness;
  Var confidence;
};

// ChannelProp recorded on the tape so gradients reach W through |W|.
TapeChannels channelprop_on_tape(Tape& tape, Var weights, Var missingness, Var confidence,
                                 double epsilon) {
  const Var abs_w = tape.unary(
      weights, [](double w) { return std::abs(w); },
      [](double w) { return w > 0.0 ? 1.0 : (w < 0.0 ? -1.0 : 0.0); });
  const Var routing = tape.row_normalize(tape.add_scalar(abs_w, epsilon));
  const Var conf = tape.clip(tape.matmul_transposed(confidence, routing), 0.0, 1.0);
  const Var observed_in = tape.add_scalar(tape.scale(missingness, -1.0), 1.0);
  const Var observed = tape.clip(tape.matmul_transposed(observed_in, routing), 0.0, 1.0);
  return {tape.add_scalar(tape.scale(observed, -1.0), 1.0), conf};
}

}  // namespace

BatchGradients loss_and_gradients(const Mlp& model, const ThreeChannelState& batch,
                                  std::span<const int> labels) {
  const MLPConfig& config = model.config();
  const auto& layers = model.layers();
  Tape tape;
  Var h = tape.constant(batch.values);
  Matrix m = batch.missingness;
  Matrix c = batch.confidence;
  Var m_var = tape.constant(batch.missingness);
  Var c_var = tape.constant(batch.confidence);
  std::vector<Var> w_vars;
  std::vector<Var> b_vars;

  for (std::size_t l = 0; l < layers.size(); ++l) {
    const Var w = tape.leaf(layers[l].weights);
    const Var b = tape.leaf(layers[l].bias);
    w_vars.push_back(w);
    b_vars.push_back(b);
    const Var z = tape.add_row(tape.matmul_transposed(h, w), b);
    if (l + 1 == layers.size()) {
      h = z;
      break;
    }
    const auto* tree = std::get_if<tree::ActivationTree>(&config.activation);
    if (config.differentiate_channels) {
      if (config.channel_mode == ChannelMode::Propagate) {
        auto channels = channelprop_on_tape(tape, w, m_var, c_var, config.channelprop_epsilon);
        m_var = channels.missingness;
        c_var = channels.confidence;
      } else {
        auto channels = hidden_channels(config, layers[l].weights, m, c, batch);
        m_var = tape.constant(std::move(channels.missingness));
        c_var = tape.constant(std::move(channels.confidence));
      }
      if (tree != nullptr) {
        h = tree::record(tape, *tree, z, m_var, c_var);
      } else {
        Matrix value;
        Matrix grad;
        apply_activation(config.activation, tape.value(z), tape.value(m_var), tape.value(c_var),
                         value, &grad);
        h = tape.pointwise(z, std::move(value), std::move(grad));
      }
    } else {
      auto channels = hidden_channels(config, layers[l].weights, m, c, batch);
      Matrix value;
      Matrix grad;
      apply_activation(config.activation, tape.value(z), channels.missingness,
                       channels.confidence, value, &grad);
      h = tape.pointwise(z, std::move(value), std::move(grad));
      m = std::move(channels.missingness);
      c = std::move(channels.confidence);
    }
  }

  const Var loss = tape.softmax_cross_entropy(h, labels);
  BatchGradients out;
  out.loss = tape.value(loss)(0, 0);
  if (!std::isfinite(out.loss)) throw TrainingDivergence("training loss is not finite");
  tape.backward(loss);
  for (std::size_t l = 0; l < layers.size(); ++l) {
    out.weights.push_back(tape.grad(w_vars[l]));
    out.biases.push_back(tape.grad(b_vars[l]));
  }
  return out;
}

double mean_cross_entropy(const Mlp& model, const ThreeChannelState& batch,
                          std::span<const int> labels,
                          const std::vector<PropagatedChannels>* fixed_channels) {
  const MLPConfig& config = model.config();
  const auto& layers = model.layers();
  Matrix h = batch.values;
  Matrix m = batch.missingness;
  Matrix c = batch.confidence;
  for (std::size_t l = 0; l + 1 < layers.size(); ++l) {
    Matrix z = (h * layers[l].weights.transpose()).rowwise() + layers[l].bias.row(0);
    PropagatedChannels channels = fixed_channels != nullptr
                                      ? (*fixed_channels)[l]
                                      : hidden_channels(config, layers[l].weights, m, c, batch);
    apply_activation(config.activation, z, channels.missingness, channels.confidence, h, nullptr);
    m = std::move(channels.missingness);
    c = std::move(channels.confidence);
  }
  const Matrix logits = (h * layers.back().weights.transpose()).rowwise() + layers.back().bias.row(0);
  double loss = 0.0;
  for (Eigen::Index i = 0; i < logits.rows(); ++i) {
    const double peak = logits.row(i).maxCoeff();
    const double log_norm = std::log((logits.row(i).array() - peak).exp().sum()) + peak;
    loss -= logits(i, labels[static_cast<std::size_t>(i)]) - log_norm;
  }
  return loss / static_cast<double>(logits.rows());
}

namespace {

ThreeChannelState gather(const data::ChannelSplit& split, std::span<const std::size_t> rows,
                         std::vector<int>& labels) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto d = split.x.cols();
  ThreeChannelState state{Matrix(n, d), Matrix(n, d), Matrix(n, d)};
  labels.resize(rows.size());
  for (Eigen::Index r = 0; r < n; ++r) {
    const auto i = static_cast<Eigen::Index>(rows[static_cast<std::size_t>(r)]);
    state.values.row(r) = split.x.row(i);
    state.missingness.row(r) = split.m.row(i);
    state.confidence.row(r) = split.c.row(i);
    labels[static_cast<std::size_t>(r)] = split.y[static_cast<std::size_t>(i)];
  }
  return state;
}

}  // namespace

TrainedModel train(const MLPConfig& config, const data::ChannelizedDataset& dataset,
                   Horizon horizon, numeric::RngStream rng) {
  config.validate();
  if (dataset.train.rows() == 0 || dataset.val.rows() == 0) {
    throw ConfigError("train: train and validation splits must be non-empty");
  }
  if (horizon.max_epochs == 0) throw ConfigError("train: max_epochs must be positive");

  numeric::RngStream init_rng = rng.child("init");
  numeric::RngStream order_rng = rng.child("order");
  Mlp model(dataset.width(), dataset.class_count, config, init_rng);

  std::vector<numeric::AdamState> weight_state;
  std::vector<numeric::AdamState> bias_state;
  for (const Layer& layer : model.layers()) {
    weight_state.push_back(numeric::AdamState::zeros_like(layer.weights));
    bias_state.push_back(numeric::AdamState::zeros_like(layer.bias));
  }

  TrainedModel result{model, -1.0, 0, 0, false};
  std::vector<std::size_t> order(dataset.train.rows());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::vector<int> labels;
  std::size_t since_best = 0;
  long step = 0;

  for (std::size_t epoch = 1; epoch <= horizon.max_epochs; ++epoch) {
    order_rng.shuffle(order.begin(), order.end());
    for (std::size_t start = 0; start < order.size(); start += config.batch_size) {
      const std::size_t stop = std::min(order.size(), start + config.batch_size);
      const ThreeChannelState batch =
          gather(dataset.train, std::span<const std::size_t>(order).subspan(start, stop - start),
                 labels);
      const BatchGradients grads = loss_and_gradients(model, batch, labels);
      ++step;
      auto& layers = model.mutable_layers();
      for (std::size_t l = 0; l < layers.size(); ++l) {
        numeric::adam_step(layers[l].weights, grads.weights[l], weight_state[l], step, config.lr,
                           config.weight_decay);
        numeric::adam_step(layers[l].bias, grads.biases[l], bias_state[l], step, config.lr,
                           config.weight_decay);
      }
    }
    result.epochs_run = epoch;
    const double val_acc = accuracy(model, dataset.val);
    if (val_acc > result.best_val_accuracy) {
      result.best_val_accuracy = val_acc;
      result.best_epoch = epoch;
      result.model = model;
      since_best = 0;
    } else if (++since_best >= horizon.patience) {
      result.stopped_early = true;
      break;
    }
  }
  return result;
}

std::string dump_model(const TrainedModel& trained) {
  const Mlp& model = trained.model;
  const MLPConfig& config = model.config();
  std::ostringstream out;
  out.precision(17);
  out << "tcea-model 1\n";
  out << "activation " << describe(config.activation) << '\n';
  out << "hidden_widths";
  for (std::size_t w : config.hidden_widths) out << ' ' << w;
  out << '\n';
  out << "channel_mode "
      << (config.channel_mode == ChannelMode::Propagate ? "propagate" : "uniform_broadcast")
      << '\n';
  out << "channelprop_epsilon " << config.channelprop_epsilon << '\n';
  out << "best_val_accuracy " << trained.best_val_accuracy << '\n';
  out << "epochs_run " << trained.epochs_run << '\n';
  for (std::size_t l = 0; l < model.layers().size(); ++l) {
    const Layer& layer = model.layers()[l];
    out << "layer " << l << ' ' << layer.weights.rows() << ' ' << layer.weights.cols() << '\n';
    for (Eigen::Index i = 0; i < layer.weights.rows(); ++i) {
      for (Eigen::Index j = 0; j < layer.weights.cols(); ++j) {
        out << (j == 0 ? "" : " ") << layer.weights(i, j);
      }
      out << '\n';
    }
    out << "bias";
    for (Eigen::Index j = 0; j < layer.bias.cols(); ++j) out << ' ' << layer.bias(0, j);
    out << '\n';
  }
  return out.str();
}

}  // namespace tcea::net
