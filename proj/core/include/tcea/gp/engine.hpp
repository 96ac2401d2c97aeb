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
#include <functional>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "tcea/data/channelize.hpp"
#include "tcea/gp/fitness.hpp"
#include "tcea/tree/activation_tree.hpp"
#include "tcea/tree/random_tree.hpp"

namespace tcea::gp {

struct GPConfig {
  std::size_t population_size = 100;
  std::size_t generations = 30;
  std::size_t max_depth = 3;
  double p_crossover = 0.7;
  double p_mutation = 0.15;
  std::size_t elite_size = 2;
  double selection_temperature = 1.0;
  tree::TerminalSet terminals;
  std::uint64_t seed = 0;
  std::size_t threads = 1;

  // Throws ConfigError when a field is out of range.
  void validate() const;
};

inline constexpr std::size_t kNoParent = static_cast<std::size_t>(-1);

struct Individual {
  tree::ActivationTree tree;
  std::optional<FitnessBreakdown> fitness;
  std::size_t generation = 0;
  std::size_t parent_a = kNoParent;  // index in the previous generation
  std::size_t parent_b = kNoParent;
};

struct HistoryRecord {
  std::size_t generation = 0;
  std::size_t index = 0;
  std::string formula;
  FitnessBreakdown fitness;
  std::size_t parent_a = kNoParent;
  std::size_t parent_b = kNoParent;
};

struct EvolutionResult {
  Individual best;
  std::vector<HistoryRecord> history;
  std::vector<double> best_per_generation;
  std::size_t trainings = 0;  // networks actually trained
};

// Called after every generation with (generation, best fitness so far).
using ProgressCallback = std::function<void(std::size_t, double)>;

// Ramped half-and-half over depths 2..max_depth (depth max_depth when it is
// below 2), alternating grow and full.
std::vector<tree::ActivationTree> initial_population(const GPConfig& config,
                                                     numeric::RngStream& rng);

// Runs the generational search and returns the best individual seen in any
// generation. Identical formulas are scored once per run.
EvolutionResult evolve(const data::ChannelizedDataset& dataset, const GPConfig& config,
                       const EvalConfig& eval, const ProgressCallback& progress = {});

// One row per individual: generation,index,formula,a_val,N,H,D,F,...
void write_history_csv(std::ostream& out, const std::vector<HistoryRecord>& history);

}  // namespace tcea::gp
