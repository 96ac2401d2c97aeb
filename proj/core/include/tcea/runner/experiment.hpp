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
#include <optional>
#include <string>
#include <vector>

#include "tcea/data/channelize.hpp"
#include "tcea/data/raw_dataset.hpp"
#include "tcea/gp/engine.hpp"
#include "tcea/metrics/metrics.hpp"
#include "tcea/runner/config.hpp"

namespace tcea::runner {

struct RunRecord {
  Method method = Method::Relu;
  std::size_t run = 0;
  std::uint64_t seed = 0;
  std::string formula;  // 3C-EA winner, prefix notation
  metrics::MetricReport report;
  bool failed = false;
  std::string error;
  double realized_missing_rate = 0.0;
  double wall_seconds = 0.0;
  std::vector<gp::HistoryRecord> history;
};

struct MetricSummary {
  double mean = 0.0;
  double std = 0.0;  // sample standard deviation, 0 for a single run
};

struct AggregateRow {
  Method method = Method::Relu;
  std::size_t successes = 0;
  MetricSummary accuracy;
  MetricSummary precision;
  MetricSummary recall;
  MetricSummary specificity;
  MetricSummary f1;
  MetricSummary auc;
};

struct ExperimentResult {
  std::vector<RunRecord> records;
  std::vector<AggregateRow> aggregate;
};

// Everything a method needs after ablation wiring: the channelized data it
// sees, the GP terminal set and the network behaviour.
struct MethodSetup {
  data::ChannelizedDataset dataset;
  tree::TerminalSet terminals;
  net::ChannelMode channel_mode = net::ChannelMode::Propagate;
};

// full leaves everything unchanged; no_confidence drops terminal c and feeds
// c = 1; no_flag drops terminal m and feeds m = 0; no_channelprop replaces
// propagation with a uniform broadcast of the input-layer channel means.
MethodSetup apply_ablation(Ablation variant, const data::ChannelizedDataset& dataset,
                           const tree::TerminalSet& terminals = {});

data::RawDataset load_source(const DatasetSource& source);

// Injection (when configured), split and channelization for one run seed.
// Every method of that run consumes the returned data.
struct PreparedRun {
  data::ChannelizedDataset dataset;
  double realized_missing_rate = 0.0;
};
PreparedRun prepare_run(const ExperimentConfig& config, const data::RawDataset& complete,
                        std::uint64_t seed);

// Trains `activation` under the full horizon and evaluates it on test.
metrics::MetricReport train_and_test(const net::MLPConfig& network, const net::Horizon& horizon,
                                     const data::ChannelizedDataset& dataset,
                                     std::uint64_t seed);

// Runs r = 0..runs-1 with seed base_seed + r. A failing (method, run) pair
// is recorded as failed; aggregates cover the successes only.
ExperimentResult run_experiment(const ExperimentConfig& config);
ExperimentResult run_experiment(const ExperimentConfig& config, const data::RawDataset& complete);

std::vector<AggregateRow> aggregate(const std::vector<RunRecord>& records,
                                    const std::vector<Method>& methods);

struct SweepBlock {
  double rate = 0.0;
  double mean_realized_rate = 0.0;
  ExperimentResult result;
};

// run_experiment once per rate with the same base seed. The configuration
// must name a missingness mechanism (MCAR when absent).
std::vector<SweepBlock> rate_sweep(const ExperimentConfig& config,
                                   const std::vector<double>& rates);
std::vector<SweepBlock> rate_sweep(const ExperimentConfig& config,
                                   const data::RawDataset& complete,
                                   const std::vector<double>& rates);

}  // namespace tcea::runner
