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
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "tcea/data/key_value.hpp"
#include "tcea/data/split.hpp"
#include "tcea/gp/engine.hpp"
#include "tcea/gp/fitness.hpp"
#include "tcea/missingness/inject.hpp"
#include "tcea/net/mlp.hpp"
#include "tcea/net/train.hpp"

namespace tcea::runner {

enum class Method { ThreeChannel, Relu, Swish, LeakyRelu, Elu };

// "3C-EA", "ReLU", "Swish", "LeakyReLU", "ELU".
const char* to_string(Method method) noexcept;
Method parse_method(const std::string& name);
inline constexpr Method kAllMethods[] = {Method::ThreeChannel, Method::Relu, Method::Swish,
                                         Method::LeakyRelu, Method::Elu};

enum class Ablation { Full, NoConfidence, NoFlag, NoChannelProp };

// "full", "no_confidence", "no_flag", "no_channelprop".
const char* to_string(Ablation ablation) noexcept;
Ablation parse_ablation(const std::string& name);

// Where the complete dataset comes from: a manifest file, or the built-in
// informative-mask generator.
struct DatasetSource {
  std::filesystem::path manifest;
  bool synthetic = false;
  std::size_t synthetic_rows = 1000;
  std::size_t synthetic_features = 6;
  std::uint64_t synthetic_seed = 7;
};

struct ExperimentConfig {
  DatasetSource dataset;
  std::optional<missingness::MissingnessSpec> missingness;
  data::SplitSpec split;
  double tau = 0.1;
  gp::GPConfig gp;
  gp::FitnessWeights weights;
  net::MLPConfig mlp;
  net::Horizon fitness_horizon = net::Horizon::fitness();
  net::Horizon full_horizon = net::Horizon::full();
  std::vector<Method> methods{std::begin(kAllMethods), std::end(kAllMethods)};
  std::optional<Ablation> ablation;
  std::size_t runs = 30;
  std::uint64_t base_seed = 0;
  bool keep_history = true;

  // Throws ConfigError on an inconsistent configuration.
  void validate() const;
};

// Reads dotted keys (dataset, missing.mechanism, gp.population, ...).
// Relative dataset paths resolve against `base_dir`. Unknown keys are a
// ConfigError so typos do not pass silently.
ExperimentConfig parse_experiment_config(const data::KeyValueFile& file,
                                         const std::filesystem::path& base_dir = {});
ExperimentConfig load_experiment_config(const std::filesystem::path& path);

// Inverse of parse_experiment_config; round-trips exactly.
data::KeyValueFile to_key_value(const ExperimentConfig& config);

}  // namespace tcea::runner
