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

#include "tcea/gp/fitness.hpp"

#include <spdlog/spdlog.h>

#include "tcea/error.hpp"
#include "tcea/tree/format.hpp"

namespace tcea::gp {

double fitness_total(double a_val, std::size_t n, std::size_t h, std::size_t d,
                     const FitnessWeights& weights) {
  if (h <= 1) return 0.0;
  return a_val + weights.lambda_d * static_cast<double>(d) -
         weights.lambda_s * static_cast<double>(n) -
         weights.lambda_h * static_cast<double>(h - 1);
}

FitnessBreakdown fitness(const tree::ActivationTree& tree,
                         const data::ChannelizedDataset& dataset, const EvalConfig& config,
                         numeric::RngStream rng) {
  const tree::TreeStats s = tree::stats(tree);
  FitnessBreakdown out;
  out.n = s.size;
  out.h = s.depth;
  out.d = s.channels_used;
  if (s.depth <= 1) {
    out.degenerate = true;
    return out;
  }
  net::MLPConfig network = config.network;
  network.activation = tree;
  try {
    out.a_val = net::train(network, dataset, config.horizon, rng).best_val_accuracy;
  } catch (const TrainingDivergence& e) {
    spdlog::debug("candidate {} diverged: {}", tree::format(tree), e.what());
    out.diverged = true;
  } catch (const NumericError& e) {
    spdlog::debug("candidate {} produced non-finite values: {}", tree::format(tree), e.what());
    out.diverged = true;
  }
  out.d_term = config.weights.lambda_d * static_cast<double>(out.d);
  out.s_term = config.weights.lambda_s * static_cast<double>(out.n);
  out.h_term = config.weights.lambda_h * static_cast<double>(out.h - 1);
  out.total = fitness_total(out.a_val, out.n, out.h, out.d, config.weights);
  return out;
}

}  // namespace tcea::gp
