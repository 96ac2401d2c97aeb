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

// Command-line front end: dataset checks, single searches, method
// comparisons, ablations, rate sweeps and formula evaluation.

#include <CLI11.hpp>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <spdlog/spdlog.h>

#include "tcea/error.hpp"
#include "tcea/gp/engine.hpp"
#include "tcea/net/train.hpp"
#include "tcea/runner/config.hpp"
#include "tcea/runner/experiment.hpp"
#include "tcea/runner/results.hpp"
#include "tcea/tree/format.hpp"

namespace fs = std::filesystem;
using namespace tcea;

namespace {

struct CommonOptions {
  std::string config;
  std::optional<std::uint64_t> seed;
  std::optional<std::size_t> runs;
  std::string out_dir = "results";
  std::optional<std::size_t> threads;
  std::optional<double> rate;
};

void add_common(CLI::App* cmd, CommonOptions& opt, bool with_runs, bool with_out) {
  cmd->add_option("--config", opt.config, "Experiment configuration file")->required();
  cmd->add_option("--seed", opt.seed, "Base seed (overrides the config)");
  if (with_runs) cmd->add_option("--runs", opt.runs, "Number of seeded runs");
  if (with_out) cmd->add_option("--out-dir", opt.out_dir, "Output directory");
  cmd->add_option("--threads", opt.threads, "Worker threads for fitness evaluation");
}

runner::ExperimentConfig load(const CommonOptions& opt) {
  runner::ExperimentConfig cfg = runner::load_experiment_config(opt.config);
  if (opt.seed) cfg.base_seed = *opt.seed;
  if (opt.runs) cfg.runs = *opt.runs;
  if (opt.threads) cfg.gp.threads = *opt.threads;
  if (opt.rate) {
    auto spec = cfg.missingness.value_or(missingness::MissingnessSpec{});
    spec.rate = *opt.rate;
    cfg.missingness = spec;
  }
  cfg.validate();
  return cfg;
}

void print_aggregate(const std::vector<runner::AggregateRow>& rows) {
  std::cout << "method      n   accuracy          f1                auc\n";
  for (const auto& row : rows) {
    std::cout << fmt::format("{:<10} {:>3}   {:.4f} ± {:.4f}   {:.4f} ± {:.4f}   {:.4f} ± {:.4f}\n",
                             runner::to_string(row.method), row.successes, row.accuracy.mean,
                             row.accuracy.std, row.f1.mean, row.f1.std, row.auc.mean,
                             row.auc.std);
  }
}

int cmd_prepare(const CommonOptions& opt) {
  const auto cfg = load(opt);
  const data::RawDataset raw = runner::load_source(cfg.dataset);
  std::cout << "dataset      " << raw.name << '\n'
            << "rows         " << raw.rows() << '\n'
            << "columns      " << raw.cols() << '\n'
            << "classes      " << raw.class_count() << '\n'
            << "missing      " << raw.missing_count() << '\n';
  const auto prepared = runner::prepare_run(cfg, raw, cfg.base_seed);
  const auto& d = prepared.dataset;
  std::cout << "encoded      " << d.width() << " features\n"
            << "split        " << d.train.rows() << " / " << d.val.rows() << " / "
            << d.test.rows() << '\n'
            << "injected     " << runner::format_double(prepared.realized_missing_rate) << '\n';
  return 0;
}

int cmd_evolve(const CommonOptions& opt) {
  const auto cfg = load(opt);
  const data::RawDataset raw = runner::load_source(cfg.dataset);
  const auto prepared = runner::prepare_run(cfg, raw, cfg.base_seed);
  const auto setup = runner::apply_ablation(cfg.ablation.value_or(runner::Ablation::Full),
                                            prepared.dataset, cfg.gp.terminals);
  gp::GPConfig gp = cfg.gp;
  gp.seed = cfg.base_seed;
  gp.terminals = setup.terminals;
  net::MLPConfig network = cfg.mlp;
  network.channel_mode = setup.channel_mode;
  const auto result = gp::evolve(setup.dataset, gp, gp::EvalConfig{network, cfg.fitness_horizon,
                                                                   cfg.weights});
  fs::create_directories(opt.out_dir);
  {
    std::ofstream out(fs::path(opt.out_dir) / "history.csv");
    gp::write_history_csv(out, result.history);
  }
  {
    std::ofstream out(fs::path(opt.out_dir) / "winner.txt");
    out << tree::format(result.best.tree) << '\n';
  }
  std::cout << "winner   " << tree::format(result.best.tree) << '\n'
            << "infix    " << tree::format_infix(result.best.tree) << '\n'
            << "fitness  " << runner::format_double(result.best.fitness->total) << '\n'
            << "a_val    " << runner::format_double(result.best.fitness->a_val) << '\n'
            << "trained  " << result.trainings << " networks\n";
  return 0;
}

int cmd_compare(const CommonOptions& opt) {
  const auto cfg = load(opt);
  const auto result = runner::run_experiment(cfg);
  runner::emit_results(result, cfg, opt.out_dir);
  print_aggregate(result.aggregate);
  return 0;
}

int cmd_ablate(const CommonOptions& opt, const std::vector<std::string>& variants) {
  runner::ExperimentConfig base = load(opt);
  base.methods = {runner::Method::ThreeChannel};
  const data::RawDataset raw = runner::load_source(base.dataset);
  for (const std::string& name : variants) {
    runner::ExperimentConfig cfg = base;
    cfg.ablation = runner::parse_ablation(name);
    const auto result = runner::run_experiment(cfg, raw);
    runner::emit_results(result, cfg, fs::path(opt.out_dir) / runner::to_string(*cfg.ablation));
    std::cout << "[" << runner::to_string(*cfg.ablation) << "]\n";
    print_aggregate(result.aggregate);
  }
  return 0;
}

int cmd_sweep(const CommonOptions& opt, const std::vector<double>& rates) {
  const auto cfg = load(opt);
  const auto blocks = runner::rate_sweep(cfg, rates);
  runner::emit_sweep(blocks, cfg, opt.out_dir);
  for (const auto& block : blocks) {
    std::cout << "[rate " << runner::format_double(block.rate) << ", realized "
              << fmt::format("{:.4f}", block.mean_realized_rate) << "]\n";
    print_aggregate(block.result.aggregate);
  }
  return 0;
}

int cmd_eval_formula(const CommonOptions& opt, const std::string& formula) {
  const auto cfg = load(opt);
  const tree::ActivationTree tree = tree::parse(formula);
  const data::RawDataset raw = runner::load_source(cfg.dataset);
  const auto prepared = runner::prepare_run(cfg, raw, cfg.base_seed);
  const auto setup = runner::apply_ablation(cfg.ablation.value_or(runner::Ablation::Full),
                                            prepared.dataset, cfg.gp.terminals);
  net::MLPConfig network = cfg.mlp;
  network.channel_mode = setup.channel_mode;
  network.activation = tree;
  const auto report =
      runner::train_and_test(network, cfg.full_horizon, setup.dataset, cfg.base_seed);
  std::cout << "formula      " << tree::format(tree) << '\n'
            << "infix        " << tree::format_infix(tree) << '\n'
            << "accuracy     " << runner::format_double(report.accuracy) << '\n'
            << "precision    " << runner::format_double(report.precision) << '\n'
            << "recall       " << runner::format_double(report.recall) << '\n'
            << "specificity  " << runner::format_double(report.specificity) << '\n'
            << "f1           " << runner::format_double(report.f1) << '\n'
            << "auc          " << runner::format_double(report.auc) << '\n';
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Evolved three-channel activations for tabular data with missing values"};
  app.require_subcommand(1);
  std::string log_level = "warn";
  app.add_option("--log-level", log_level, "trace, debug, info, warn, error or off");

  CommonOptions opt;
  std::vector<std::string> variants{"full", "no_confidence", "no_flag", "no_channelprop"};
  std::vector<double> rates{0.1, 0.2, 0.3, 0.4, 0.5};
  std::string formula;

  auto* prepare = app.add_subcommand("prepare", "Validate a dataset and dry-run channelization");
  add_common(prepare, opt, false, false);
  prepare->add_option("--rate", opt.rate, "Missingness rate override");

  auto* evolve = app.add_subcommand("evolve", "Run one GP search");
  add_common(evolve, opt, false, true);
  evolve->add_option("--rate", opt.rate, "Missingness rate override");

  auto* compare = app.add_subcommand("compare", "Compare 3C-EA against the baselines");
  add_common(compare, opt, true, true);
  compare->add_option("--rate", opt.rate, "Missingness rate override");

  auto* ablate = app.add_subcommand("ablate", "Run ablation variants of 3C-EA");
  add_common(ablate, opt, true, true);
  ablate->add_option("--rate", opt.rate, "Missingness rate override");
  ablate->add_option("--variant", variants, "Variants to run (default: all four)");

  auto* sweep = app.add_subcommand("sweep", "Repeat the comparison over missingness rates");
  add_common(sweep, opt, true, true);
  sweep->add_option("--rate", rates, "Rates to sweep (default: 0.1 to 0.5)");

  auto* eval = app.add_subcommand("eval-formula", "Train and test a saved formula");
  add_common(eval, opt, false, false);
  eval->add_option("--rate", opt.rate, "Missingness rate override");
  eval->add_option("--formula", formula, "Formula in prefix notation")->required();

  CLI11_PARSE(app, argc, argv);
  spdlog::set_level(spdlog::level::from_str(log_level));

  try {
    if (*prepare) return cmd_prepare(opt);
    if (*evolve) return cmd_evolve(opt);
    if (*compare) return cmd_compare(opt);
    if (*ablate) return cmd_ablate(opt, variants);
    if (*sweep) return cmd_sweep(opt, rates);
    if (*eval) return cmd_eval_formula(opt, formula);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 1;
}
