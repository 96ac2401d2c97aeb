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

#include "tcea/runner/experiment.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>

#include <spdlog/spdlog.h>

#include "tcea/data/csv.hpp"
#include "tcea/data/split.hpp"
#include "tcea/data/synthetic.hpp"
#include "tcea/error.hpp"
#include "tcea/missingness/inject.hpp"
#include "tcea/net/train.hpp"
#include "tcea/tree/format.hpp"

namespace tcea::runner {

MethodSetup apply_ablation(Ablation variant, const data::ChannelizedDataset& dataset,
                           const tree::TerminalSet& terminals) {
  MethodSetup setup{dataset, terminals, net::ChannelMode::Propagate};
  auto drop = [&](tree::Channel channel) {
    auto& ch = setup.terminals.channels;
    ch.erase(std::remove(ch.begin(), ch.end(), channel), ch.end());
  };
  switch (variant) {
    case Ablation::Full:
      break;
    case Ablation::NoConfidence:
      drop(tree::Channel::C);
      for (auto* split : {&setup.dataset.train, &setup.dataset.val, &setup.dataset.test}) {
        split->c.setOnes();
      }
      break;
    case Ablation::NoFlag:
      drop(tree::Channel::M);
      for (auto* split : {&setup.dataset.train, &setup.dataset.val, &setup.dataset.test}) {
        split->m.setZero();
      }
      break;
    case Ablation::NoChannelProp:
      setup.channel_mode = net::ChannelMode::UniformBroadcast;
      break;
  }
  return setup;
}

data::RawDataset load_source(const DatasetSource& source) {
  if (source.synthetic) {
    return data::make_informative_mask_dataset(source.synthetic_rows, source.synthetic_features,
                                               source.synthetic_seed);
  }
  return data::load_dataset(data::read_manifest(source.manifest));
}

PreparedRun prepare_run(const ExperimentConfig& config, const data::RawDataset& complete,
                        std::uint64_t seed) {
  const numeric::RngStream run_rng(seed);
  PreparedRun out;
  data::RawDataset raw = complete;
  if (config.missingness) {
    missingness::MissingnessSpec spec = *config.missingness;
    spec.seed = run_rng.child("inject").next_u64();
    auto injected = missingness::inject(complete, spec);
    out.realized_missing_rate = injected.realized_rate();
    raw = std::move(injected.data);
  }
  data::SplitSpec split_spec = config.split;
  split_spec.seed = seed;
  const data::SplitIndices split =
      data::stratified_split(raw.labels, raw.class_count(), split_spec, run_rng.child("split"));
  out.dataset = data::build_channels(raw, split, config.tau);
  return out;
}

namespace {

metrics::MetricReport test_report(const net::Mlp& model, const data::ChannelSplit& test,
                                  std::size_t classes) {
  const numeric::Matrix proba = net::predict_proba(model, net::as_state(test));
  return metrics::evaluate(test.y, proba, classes);
}

}  // namespace

metrics::MetricReport train_and_test(const net::MLPConfig& network, const net::Horizon& horizon,
                                     const data::ChannelizedDataset& dataset,
                                     std::uint64_t seed) {
  const net::TrainedModel trained =
      net::train(network, dataset, horizon, numeric::RngStream(seed).child("final"));
  return test_report(trained.model, dataset.test, dataset.class_count);
}

namespace {

RunRecord run_method(const ExperimentConfig& config, Method method, std::size_t run,
                     std::uint64_t seed, const PreparedRun& prepared) {
  RunRecord record;
  record.method = method;
  record.run = run;
  record.seed = seed;
  record.realized_missing_rate = prepared.realized_missing_rate;
  const auto start = std::chrono::steady_clock::now();
  try {
    net::MLPConfig network = config.mlp;
    network.seed = seed;
    if (method == Method::ThreeChannel) {
      const MethodSetup setup =
          apply_ablation(config.ablation.value_or(Ablation::Full), prepared.dataset,
                         config.gp.terminals);
      network.channel_mode = setup.channel_mode;
      gp::GPConfig gp = config.gp;
      gp.seed = seed;
      gp.terminals = setup.terminals;
      gp::EvalConfig eval{network, config.fitness_horizon, config.weights};
      gp::EvolutionResult evolved = gp::evolve(setup.dataset, gp, eval);
      record.formula = tree::format(evolved.best.tree);
      if (config.keep_history) record.history = std::move(evolved.history);
      network.activation = evolved.best.tree;
      record.report = train_and_test(network, config.full_horizon, setup.dataset, seed);
    } else {
      const net::Baseline baseline = method == Method::Relu        ? net::Baseline::Relu
                                     : method == Method::Swish     ? net::Baseline::Swish
                                     : method == Method::LeakyRelu ? net::Baseline::LeakyRelu
                                                                   : net::Baseline::Elu;
      network.activation = baseline;
      record.report = train_and_test(network, config.full_horizon, prepared.dataset, seed);
    }
  } catch (const Error& e) {
    record.failed = true;
    record.error = e.what();
    spdlog::warn("{} run {} (seed {}) failed: {}", to_string(method), run, seed, e.what());
  }
  record.wall_seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return record;
}

MetricSummary summarize(const std::vector<double>& values) {
  MetricSummary s;
  if (values.empty()) return s;
  double sum = 0.0;
  for (double v : values) sum += v;
  s.mean = sum / static_cast<double>(values.size());
  if (values.size() > 1) {
    double ss = 0.0;
    for (double v : values) ss += (v - s.mean) * (v - s.mean);
    s.std = std::sqrt(ss / static_cast<double>(values.size() - 1));
  }
  return s;
}

}  // namespace

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records,
                                    const std::vector<Method>& methods) {
  std::vector<AggregateRow> rows;
  for (Method method : methods) {
    std::vector<double> acc, prec, rec, spec, f1, auc;
    std::size_t failures = 0;
    for (const RunRecord& r : records) {
      if (r.method != method) continue;
      if (r.failed) {
        ++failures;
        continue;
      }
      acc.push_back(r.report.accuracy);
      prec.push_back(r.report.precision);
      rec.push_back(r.report.recall);
      spec.push_back(r.report.specificity);
      f1.push_back(r.report.f1);
      auc.push_back(r.report.auc);
    }
    if (failures > 0) {
      spdlog::warn("{}: {} failed run(s) excluded from the aggregate", to_string(method), failures);
    }
    rows.push_back(AggregateRow{method, acc.size(), summarize(acc), summarize(prec),
                                summarize(rec), summarize(spec), summarize(f1), summarize(auc)});
  }
  return rows;
}

ExperimentResult run_experiment(const ExperimentConfig& config, const data::RawDataset& complete) {
  config.validate();
  ExperimentResult result;
  for (std::size_t r = 0; r < config.runs; ++r) {
    const std::uint64_t seed = config.base_seed + r;
    const PreparedRun prepared = prepare_run(config, complete, seed);
    for (Method method : config.methods) {
      spdlog::info("run {}/{} seed {}: {}", r + 1, config.runs, seed, to_string(method));
      result.records.push_back(run_method(config, method, r, seed, prepared));
    }
  }
  result.aggregate = aggregate(result.records, config.methods);
  return result;
}

ExperimentResult run_experiment(const ExperimentConfig& config) {
  return run_experiment(config, load_source(config.dataset));
}

std::vector<SweepBlock> rate_sweep(const ExperimentConfig& config,
                                   const data::RawDataset& complete,
                                   const std::vector<double>& rates) {
  if (rates.empty()) throw ConfigError("rate_sweep: no rates given");
  std::vector<SweepBlock> blocks;
  for (double rate : rates) {
    ExperimentConfig cfg = config;
    missingness::MissingnessSpec spec = cfg.missingness.value_or(missingness::MissingnessSpec{});
    spec.rate = rate;
    cfg.missingness = spec;
    SweepBlock block;
    block.rate = rate;
    block.result = run_experiment(cfg, complete);
    double sum = 0.0;
    std::size_t runs = 0;
    for (const RunRecord& r : block.result.records) {
      if (r.method == cfg.methods.front()) {
        sum += r.realized_missing_rate;
        ++runs;
      }
    }
    block.mean_realized_rate = runs > 0 ? sum / static_cast<double>(runs) : 0.0;
    blocks.push_back(std::move(block));
  }
  return blocks;
}

std::vector<SweepBlock> rate_sweep(const ExperimentConfig& config,
                                   const std::vector<double>& rates) {
  return rate_sweep(config, load_source(config.dataset), rates);
}

}  // namespace tcea::runner
