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
#include <span>
#include <string>
#include <vector>

#include "tcea/data/channelize.hpp"
#include "tcea/net/mlp.hpp"
#include "tcea/numeric/rng.hpp"

namespace tcea::net {

// Epoch budget and early-stopping patience.
struct Horizon {
  std::size_t max_epochs = 100;
  std::size_t patience = 10;

  // Truncated budget used to score GP candidates.
  static constexpr Horizon fitness() { return {30, 5}; }
  // Budget for final models and baselines.
  static constexpr Horizon full() { return {100, 10}; }
};

struct TrainedModel {
  Mlp model;
  double best_val_accuracy = 0.0;
  std::size_t epochs_run = 0;
  std::size_t best_epoch = 0;
  bool stopped_early = false;
};

ThreeChannelState as_state(const data::ChannelSplit& split);
double accuracy(const Mlp& model, const data::ChannelSplit& split);

struct BatchGradients {
  double loss = 0.0;
  std::vector<Matrix> weights;
  std::vector<Matrix> biases;
};

// Mean softmax cross-entropy of one batch and its gradients with respect to
// every weight and bias. Throws TrainingDivergence when the loss is not
// finite.
BatchGradients loss_and_gradients(const Mlp& model, const ThreeChannelState& batch,
                                  std::span<const int> labels);

// Mean cross-entropy only. When `fixed_channels` is given, hidden layer l
// uses (*fixed_channels)[l] instead of recomputing its channels, which lets
// a finite-difference oracle hold the detached m, c paths constant.
double mean_cross_entropy(const Mlp& model, const ThreeChannelState& batch,
                          std::span<const int> labels,
                          const std::vector<PropagatedChannels>* fixed_channels = nullptr);

// Minimizes softmax cross-entropy with Adam on shuffled mini-batches,
// evaluating validation accuracy after every epoch. Stops after `patience`
// epochs without a strict improvement and restores the best epoch's weights.
// Throws TrainingDivergence on a non-finite loss or gradient.
TrainedModel train(const MLPConfig& config, const data::ChannelizedDataset& dataset,
                   Horizon horizon, numeric::RngStream rng);

// Plain-text record of the configuration, activation formula and weights.
std::string dump_model(const TrainedModel& trained);

}  // namespace tcea::net
