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

#include "tcea/runner/config.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <set>

#include "tcea/error.hpp"

namespace tcea::runner {

namespace {

std::string lower(std::string s) {
  std::transform(s.begin(), s.end(), s.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  return s;
}

std::string shortest(double v) {
  std::array<char, 64> buf{};
  const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), v);
  return std::string(buf.data(), ptr);
}

std::size_t get_count(const data::KeyValueFile& f, const std::string& key, std::size_t fallback) {
  const long v = f.get_long(key, static_cast<long>(fallback));
  if (v < 0) throw ConfigError("key '" + key + "' must be non-negative");
  return static_cast<std::size_t>(v);
}

std::uint64_t get_seed(const data::KeyValueFile& f, const std::string& key,
                       std::uint64_t fallback) {
  const auto text = f.get(key);
  if (!text) return fallback;
  std::uint64_t v = 0;
  const auto [ptr, ec] = std::from_chars(text->data(), text->data() + text->size(), v);
  if (ec != std::errc() || ptr != text->data() + text->size()) {
    throw ConfigError("key '" + key + "': expected an unsigned integer, got '" + *text + "'");
  }
  return v;
}

const std::set<std::string>& known_keys() {
  static const std::set<std::string> keys{
      "dataset", "synthetic.rows", "synthetic.features", "synthetic.seed",
      "missing.mechanism", "missing.rate", "missing.mar_pivot_fraction", "missing.steepness",
      "split.train", "split.val", "split.test", "split.stratified", "tau",
      "gp.population", "gp.generations", "gp.max_depth", "gp.p_crossover", "gp.p_mutation",
      "gp.elite", "gp.temperature", "gp.threads",
      "fitness.lambda_d", "fitness.lambda_s", "fitness.lambda_h",
      "mlp.hidden", "mlp.lr", "mlp.weight_decay", "mlp.batch_size", "mlp.epsilon",
      "mlp.differentiate_channels",
      "train.fitness_epochs", "train.fitness_patience", "train.full_epochs",
      "train.full_patience",
      "methods", "ablation", "runs", "seed", "history"};
  return keys;
}

}  // namespace

const char* to_string(Method method) noexcept {
  switch (method) {
    case Method::ThreeChannel: return "3C-EA";
    case Method::Relu: return "ReLU";
    case Method::Swish: return "Swish";
    case Method::LeakyRelu: return "LeakyReLU";
    case Method::Elu: return "ELU";
  }
  return "?";
}

Method parse_method(const std::string& name) {
  const std::string key = lower(data::trim(name));
  for (Method m : kAllMethods) {
    if (lower(to_string(m)) == key) return m;
  }
  throw ConfigError("unknown method '" + name + "'");
}

const char* to_string(Ablation ablation) noexcept {
  switch (ablation) {
    case Ablation::Full: return "full";
    case Ablation::NoConfidence: return "no_confidence";
    case Ablation::NoFlag: return "no_flag";
    case Ablation::NoChannelProp: return "no_channelprop";
  }
  return "?";
}

Ablation parse_ablation(const std::string& name) {
  const std::string key = lower(data::trim(name));
  for (Ablation a : {Ablation::Full, Ablation::NoConfidence, Ablation::NoFlag,
                     Ablation::NoChannelProp}) {
    if (key == to_string(a)) return a;
  }
  throw ConfigError("unknown ablation variant '" + name + "'");
}

void ExperimentConfig::validate() const {
  if (runs == 0) throw ConfigError("runs must be at least 1");
  if (methods.empty()) throw ConfigError("at least one method is required");
  if (!dataset.synthetic && dataset.manifest.empty()) {
    throw ConfigError("dataset manifest path is required");
  }
  if (missingness) missingness->validate();
  split.validate();
  if (!(tau > 0.0 && tau <= 1.0)) throw ConfigError("tau must lie in (0, 1]");
  gp.validate();
  mlp.validate();
  if (fitness_horizon.max_epochs == 0 || full_horizon.max_epochs == 0) {
    throw ConfigError("training horizons need at least one epoch");
  }
  if (ablation && std::find(methods.begin(), methods.end(), Method::ThreeChannel) == methods.end()) {
    throw ConfigError("an ablation variant requires the 3C-EA method");
  }
}

ExperimentConfig parse_experiment_config(const data::KeyValueFile& f,
                                         const std::filesystem::path& base_dir) {
  for (const auto& [key, value] : f.entries()) {
    if (known_keys().count(key) == 0) throw ConfigError("unknown configuration key '" + key + "'");
  }
  ExperimentConfig cfg;

  const std::string dataset = f.require("dataset");
  if (lower(dataset) == "synthetic") {
    cfg.dataset.synthetic = true;
  } else {
    std::filesystem::path p(dataset);
    cfg.dataset.manifest = p.is_absolute() || base_dir.empty() ? p : base_dir / p;
  }
  cfg.dataset.synthetic_rows = get_count(f, "synthetic.rows", cfg.dataset.synthetic_rows);
  cfg.dataset.synthetic_features =
      get_count(f, "synthetic.features", cfg.dataset.synthetic_features);
  cfg.dataset.synthetic_seed = get_seed(f, "synthetic.seed", cfg.dataset.synthetic_seed);

  const std::string mechanism = lower(f.get_or("missing.mechanism", "none"));
  if (mechanism != "none") {
    missingness::MissingnessSpec spec;
    spec.mechanism = missingness::parse_mechanism(mechanism);
    spec.rate = f.get_double("missing.rate", spec.rate);
    spec.mar_pivot_fraction = f.get_double("missing.mar_pivot_fraction", spec.mar_pivot_fraction);
    spec.steepness = f.get_double("missing.steepness", spec.steepness);
    cfg.missingness = spec;
  }

  cfg.split.train_fraction = f.get_double("split.train", cfg.split.train_fraction);
  cfg.split.val_fraction = f.get_double("split.val", cfg.split.val_fraction);
  cfg.split.test_fraction = f.get_double("split.test", cfg.split.test_fraction);
  cfg.split.stratified = f.get_bool("split.stratified", cfg.split.stratified);
  cfg.tau = f.get_double("tau", cfg.tau);

  cfg.gp.population_size = get_count(f, "gp.population", cfg.gp.population_size);
  cfg.gp.generations = get_count(f, "gp.generations", cfg.gp.generations);
  cfg.gp.max_depth = get_count(f, "gp.max_depth", cfg.gp.max_depth);
  cfg.gp.p_crossover = f.get_double("gp.p_crossover", cfg.gp.p_crossover);
  cfg.gp.p_mutation = f.get_double("gp.p_mutation", cfg.gp.p_mutation);
  cfg.gp.elite_size = get_count(f, "gp.elite", cfg.gp.elite_size);
  cfg.gp.selection_temperature = f.get_double("gp.temperature", cfg.gp.selection_temperature);
  cfg.gp.threads = get_count(f, "gp.threads", cfg.gp.threads);

  cfg.weights.lambda_d = f.get_double("fitness.lambda_d", cfg.weights.lambda_d);
  cfg.weights.lambda_s = f.get_double("fitness.lambda_s", cfg.weights.lambda_s);
  cfg.weights.lambda_h = f.get_double("fitness.lambda_h", cfg.weights.lambda_h);

  if (const auto hidden = f.get("mlp.hidden")) {
    cfg.mlp.hidden_widths.clear();
    for (const std::string& w : data::split_list(*hidden)) {
      std::size_t v = 0;
      const auto [ptr, ec] = std::from_chars(w.data(), w.data() + w.size(), v);
      if (ec != std::errc() || ptr != w.data() + w.size()) {
        throw ConfigError("mlp.hidden: bad width '" + w + "'");
      }
      cfg.mlp.hidden_widths.push_back(v);
    }
  }
  cfg.mlp.lr = f.get_double("mlp.lr", cfg.mlp.lr);
  cfg.mlp.weight_decay = f.get_double("mlp.weight_decay", cfg.mlp.weight_decay);
  cfg.mlp.batch_size = get_count(f, "mlp.batch_size", cfg.mlp.batch_size);
  cfg.mlp.channelprop_epsilon = f.get_double("mlp.epsilon", cfg.mlp.channelprop_epsilon);
  cfg.mlp.differentiate_channels =
      f.get_bool("mlp.differentiate_channels", cfg.mlp.differentiate_channels);

  cfg.fitness_horizon.max_epochs =
      get_count(f, "train.fitness_epochs", cfg.fitness_horizon.max_epochs);
  cfg.fitness_horizon.patience =
      get_count(f, "train.fitness_patience", cfg.fitness_horizon.patience);
  cfg.full_horizon.max_epochs = get_count(f, "train.full_epochs", cfg.full_horizon.max_epochs);
  cfg.full_horizon.patience = get_count(f, "train.full_patience", cfg.full_horizon.patience);

  if (const auto methods = f.get("methods")) {
    cfg.methods.clear();
    for (const std::string& m : data::split_list(*methods)) {
      const Method method = parse_method(m);
      if (std::find(cfg.methods.begin(), cfg.methods.end(), method) == cfg.methods.end()) {
        cfg.methods.push_back(method);
      }
    }
  }
  if (const auto ablation = f.get("ablation")) cfg.ablation = parse_ablation(*ablation);
  cfg.runs = get_count(f, "runs", cfg.runs);
  cfg.base_seed = get_seed(f, "seed", cfg.base_seed);
  cfg.keep_history = f.get_bool("history", cfg.keep_history);
  cfg.validate();
  return cfg;
}

ExperimentConfig load_experiment_config(const std::filesystem::path& path) {
  return parse_experiment_config(data::KeyValueFile::read(path), path.parent_path());
}

data::KeyValueFile to_key_value(const ExperimentConfig& cfg) {
  data::KeyValueFile f;
  if (cfg.dataset.synthetic) {
    f.set("dataset", "synthetic");
    f.set("synthetic.rows", std::to_string(cfg.dataset.synthetic_rows));
    f.set("synthetic.features", std::to_string(cfg.dataset.synthetic_features));
    f.set("synthetic.seed", std::to_string(cfg.dataset.synthetic_seed));
  } else {
    f.set("dataset", cfg.dataset.manifest.string());
  }
  if (cfg.missingness) {
    f.set("missing.mechanism", missingness::to_string(cfg.missingness->mechanism));
    f.set("missing.rate", shortest(cfg.missingness->rate));
    f.set("missing.mar_pivot_fraction", shortest(cfg.missingness->mar_pivot_fraction));
    f.set("missing.steepness", shortest(cfg.missingness->steepness));
  } else {
    f.set("missing.mechanism", "none");
  }
  f.set("split.train", shortest(cfg.split.train_fraction));
  f.set("split.val", shortest(cfg.split.val_fraction));
  f.set("split.test", shortest(cfg.split.test_fraction));
  f.set("split.stratified", cfg.split.stratified ? "true" : "false");
  f.set("tau", shortest(cfg.tau));
  f.set("gp.population", std::to_string(cfg.gp.population_size));
  f.set("gp.generations", std::to_string(cfg.gp.generations));
  f.set("gp.max_depth", std::to_string(cfg.gp.max_depth));
  f.set("gp.p_crossover", shortest(cfg.gp.p_crossover));
  f.set("gp.p_mutation", shortest(cfg.gp.p_mutation));
  f.set("gp.elite", std::to_string(cfg.gp.elite_size));
  f.set("gp.temperature", shortest(cfg.gp.selection_temperature));
  f.set("gp.threads", std::to_string(cfg.gp.threads));
  f.set("fitness.lambda_d", shortest(cfg.weights.lambda_d));
  f.set("fitness.lambda_s", shortest(cfg.weights.lambda_s));
  f.set("fitness.lambda_h", shortest(cfg.weights.lambda_h));
  std::string hidden;
  for (std::size_t w : cfg.mlp.hidden_widths) {
    hidden += (hidden.empty() ? "" : ",") + std::to_string(w);
  }
  f.set("mlp.hidden", hidden);
  f.set("mlp.lr", shortest(cfg.mlp.lr));
  f.set("mlp.weight_decay", shortest(cfg.mlp.weight_decay));
  f.set("mlp.batch_size", std::to_string(cfg.mlp.batch_size));
  f.set("mlp.epsilon", shortest(cfg.mlp.channelprop_epsilon));
  f.set("mlp.differentiate_channels", cfg.mlp.differentiate_channels ? "true" : "false");
  f.set("train.fitness_epochs", std::to_string(cfg.fitness_horizon.max_epochs));
  f.set("train.fitness_patience", std::to_string(cfg.fitness_horizon.patience));
  f.set("train.full_epochs", std::to_string(cfg.full_horizon.max_epochs));
  f.set("train.full_patience", std::to_string(cfg.full_horizon.patience));
  std::string methods;
  for (Method m : cfg.methods) methods += (methods.empty() ? "" : ",") + std::string(to_string(m));
  f.set("methods", methods);
  if (cfg.ablation) f.set("ablation", to_string(*cfg.ablation));
  f.set("runs", std::to_string(cfg.runs));
  f.set("seed", std::to_string(cfg.base_seed));
  f.set("history", cfg.keep_history ? "true" : "false");
  return f;
}

}  // namespace tcea::runner
