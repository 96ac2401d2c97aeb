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

#include "tcea/data/channelize.hpp"
#include "tcea/net/mlp.hpp"
#include "tcea/net/train.hpp"
#include "tcea/numeric/rng.hpp"
#include "tcea/tree/activation_tree.hpp"

namespace tcea::gp {

struct FitnessWeights {
  double lambda_d = 0.01;    // per distinct channel referenced
  double lambda_s = 0.0001;  // per node
  double lambda_h = 0.0002;  // per level beyond the first
};

// Network and training settings used to score one candidate. The activation
// field of `network` is overwritten with the candidate tree.
struct EvalConfig {
  net::MLPConfig network;
  net::Horizon horizon = net::Horizon::fitness();
  FitnessWeights weights;
};

struct FitnessBreakdown {
  double a_val = 0.0;
  double d_term = 0.0;
  double s_term = 0.0;
  double h_term = 0.0;
  double total = 0.0;
  std::size_t n = 0;  // node count
  std::size_t h = 0;  // depth
  std::size_t d = 0;  // distinct channels
  bool degenerate = false;  // single-node tree, not trained
  bool diverged = false;    // training failed, a_val set to 0
};

// F = a_val + λ_d·D − λ_s·N − λ_h·(H − 1), or 0 when H = 1.
double fitness_total(double a_val, std::size_t n, std::size_t h, std::size_t d,
                     const FitnessWeights& weights);

FitnessBreakdown fitness(const tree::ActivationTree& tree,
                         const data::ChannelizedDataset& dataset, const EvalConfig& config,
                         numeric::RngStream rng);

}  // namespace tcea::gp
