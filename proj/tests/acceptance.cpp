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

// Acceptance suite. Prints one PASS/FAIL line per criterion and exits
// nonzero when any fails. Pass criterion numbers as arguments to run a
// subset, e.g. `tcea_acceptance 1 4`.

#include <spdlog/spdlog.h>

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <memory>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "tcea/data/split.hpp"
#include "tcea/data/synthetic.hpp"
#include "tcea/error.hpp"
#include "tcea/gp/engine.hpp"
#include "tcea/gp/fitness.hpp"
#include "tcea/metrics/metrics.hpp"
#include "tcea/missingness/inject.hpp"
#include "tcea/net/channelprop.hpp"
#include "tcea/numeric/finite_difference.hpp"
#include "tcea/runner/config.hpp"
#include "tcea/runner/experiment.hpp"
#include "tcea/runner/results.hpp"
#include "tcea/tree/evaluate.hpp"
#include "tcea/tree/format.hpp"
#include "tcea/tree/random_tree.hpp"

using namespace tcea;
using numeric::Matrix;
using numeric::RngStream;
namespace fs = std::filesystem;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_double(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

fs::path source_path(const std::string& rel) { return fs::path(TCEA_SOURCE_DIR) / rel; }

// ---------------------------------------------------------------- 1

// Straight loops over the definition, no Eigen expressions.
net::PropagatedChannels naive_channelprop(const Matrix& w, const Matrix& m, const Matrix& c) {
  const Eigen::Index out = w.rows(), in = w.cols(), n = m.rows();
  Matrix a(out, in);
  for (Eigen::Index j = 0; j < out; ++j) {
    double sum = 0.0;
    for (Eigen::Index i = 0; i < in; ++i) sum += std::abs(w(j, i)) + 1e-8;
    for (Eigen::Index i = 0; i < in; ++i) a(j, i) = (std::abs(w(j, i)) + 1e-8) / sum;
  }
  net::PropagatedChannels p{Matrix(n, out), Matrix(n, out)};
  for (Eigen::Index r = 0; r < n; ++r) {
    for (Eigen::Index j = 0; j < out; ++j) {
      double conf = 0.0, obs = 0.0;
      for (Eigen::Index i = 0; i < in; ++i) {
        conf += c(r, i) * a(j, i);
        obs += (1.0 - m(r, i)) * a(j, i);
      }
      p.confidence(r, j) = std::clamp(conf, 0.0, 1.0);
      p.missingness(r, j) = 1.0 - std::clamp(obs, 0.0, 1.0);
    }
  }
  return p;
}

double unit_draw(RngStream& rng) {
  // Exact endpoints show up often in real masks.
  const auto k = rng.below(10);
  return k == 0 ? 0.0 : (k == 1 ? 1.0 : rng.uniform());
}

Outcome channelprop_suite() {
  const auto start = Clock::now();
  RngStream rng(20261016);
  std::size_t closure = 0, sum_rule = 0, constant = 0, oracle = 0;
  double worst_oracle = 0.0;
  for (int trial = 0; trial < 10000; ++trial) {
    const auto in = static_cast<Eigen::Index>(1 + rng.below(16));
    const auto out = static_cast<Eigen::Index>(1 + rng.below(16));
    const auto n = static_cast<Eigen::Index>(1 + rng.below(8));
    const double scale = std::pow(10.0, rng.uniform(-6.0, 4.0));
    Matrix w(out, in), m(n, in), c(n, in);
    for (Eigen::Index i = 0; i < w.size(); ++i) {
      w.data()[i] = rng.bernoulli(0.1) ? 0.0 : rng.uniform(-scale, scale);
    }
    for (Eigen::Index i = 0; i < m.size(); ++i) {
      m.data()[i] = unit_draw(rng);
      c.data()[i] = unit_draw(rng);
    }
    const auto p = net::channelprop(w, m, c);
    for (Eigen::Index i = 0; i < p.missingness.size(); ++i) {
      const double mo = p.missingness.data()[i], co = p.confidence.data()[i];
      closure += (mo >= 0.0 && mo <= 1.0 && co >= 0.0 && co <= 1.0) ? 0 : 1;
      const double o = 1.0 - mo;
      sum_rule += (mo + o == 1.0) ? 0 : 1;
    }
    const auto q = naive_channelprop(w, m, c);
    const double diff = std::max((p.missingness - q.missingness).cwiseAbs().maxCoeff(),
                                 (p.confidence - q.confidence).cwiseAbs().maxCoeff());
    worst_oracle = std::max(worst_oracle, diff);
    oracle += diff <= 1e-12 ? 0 : 1;

    const double alpha = unit_draw(rng), beta = unit_draw(rng);
    const auto flat = net::channelprop(w, Matrix::Constant(n, in, alpha), Matrix::Constant(n, in, beta));
    const double drift = std::max((flat.missingness.array() - alpha).abs().maxCoeff(),
                                  (flat.confidence.array() - beta).abs().maxCoeff());
    constant += drift <= 1e-9 ? 0 : 1;
  }
  // Equal weights over one observed and one missing input; then a dominant
  // weight that routes all confidence from the first input.
  const auto e1 = net::channelprop(numeric::from_rows({{1, 1}}), numeric::from_rows({{0, 1}}),
                                   numeric::from_rows({{1, 0}}));
  const auto e2 = net::channelprop(numeric::from_rows({{5, 0}}), numeric::from_rows({{0, 0}}),
                                   numeric::from_rows({{0.3, 0.9}}));
  const bool examples = std::abs(e1.confidence(0, 0) - 0.5) <= 1e-6 &&
                        std::abs(e1.missingness(0, 0) - 0.5) <= 1e-6 &&
                        std::abs(e2.confidence(0, 0) - 0.3) <= 1e-6 && e2.missingness(0, 0) == 0.0;
  const double secs = seconds_since(start);
  const bool pass = closure == 0 && sum_rule == 0 && constant == 0 && oracle == 0 && examples && secs < 10.0;
  return {pass, "closure_violations=" + std::to_string(closure) + " sum_violations=" +
                    std::to_string(sum_rule) + " constant_violations=" + std::to_string(constant) +
                    " oracle_max_diff=" + fmt_double(worst_oracle) +
                    " hand_examples=" + (examples ? "ok" : "bad") + " seconds=" + fmt_double(secs)};
}

// ---------------------------------------------------------------- 2

double fuzz_x(RngStream& rng) {
  switch (rng.below(8)) {
    case 0: return 0.0;
    case 1: return rng.bernoulli(0.5) ? 1e300 : -1e300;
    case 2: return rng.uniform(-1e-300, 1e-300);
    case 3: return rng.bernoulli(0.5) ? std::numeric_limits<double>::max() : -std::numeric_limits<double>::max();
    default: return rng.uniform(-1.0, 1.0) * std::pow(10.0, rng.uniform(-4.0, 9.0));
  }
}

Outcome tree_suite() {
  const auto start = Clock::now();
  RngStream rng(42);
  std::size_t evaluations = 0, nonfinite = 0;
  constexpr std::size_t kBatch = 1000;
  std::vector<double> x(kBatch), m(kBatch), c(kBatch);
  for (int t = 0; t < 1000; ++t) {
    const auto tree = tree::random_tree(rng, 1 + rng.below(5),
                                        t % 2 ? tree::InitMethod::Grow : tree::InitMethod::Full);
    for (std::size_t i = 0; i < kBatch; ++i) {
      x[i] = fuzz_x(rng);
      m[i] = unit_draw(rng);
      c[i] = unit_draw(rng);
    }
    const auto vg = tree::eval_with_grad_x(tree, x, m, c);
    for (std::size_t i = 0; i < kBatch; ++i) {
      nonfinite += std::isfinite(vg.value[i]) && std::isfinite(vg.grad_x[i]) ? 0 : 1;
    }
    evaluations += kBatch;
  }

  std::size_t trees = 0, points = 0, mismatches = 0;
  std::string first_bad;
  while (trees < 100) {
    const auto tree = tree::random_tree(rng, 1 + rng.below(5), rng.bernoulli(0.5) ? tree::InitMethod::Grow
                                                                                   : tree::InitMethod::Full);
    if (!tree.references(tree::Channel::X)) continue;
    ++trees;
    int checked = 0;
    for (int attempt = 0; attempt < 500 && checked < 10; ++attempt) {
      const double px = rng.uniform(-3, 3), pm = rng.uniform(), pc = rng.uniform();
      if (tree::kink_distance(tree, px, pm, pc) < 1e-3) continue;
      ++checked;
      ++points;
      const std::vector<double> vx{px}, vm{pm}, vc{pc};
      const double g = tree::eval_with_grad_x(tree, vx, vm, vc).grad_x[0];
      const auto fd = numeric::finite_difference_gradient(
          [&](std::span<const double> v) { return tree::eval(tree, v[0], pm, pc); }, vx);
      const double tol = std::max(1e-6, 1e-4 * std::max(std::abs(g), std::abs(fd[0])));
      if (std::abs(g - fd[0]) > tol) {
        ++mismatches;
        if (first_bad.empty()) first_bad = tree::format(tree) + " at x=" + fmt_double(px);
      }
    }
  }
  const double secs = seconds_since(start);
  const bool pass = evaluations >= 1000000 && nonfinite == 0 && mismatches == 0 && secs < 120.0;
  return {pass, "evaluations=" + std::to_string(evaluations) + " nonfinite=" + std::to_string(nonfinite) +
                    " fd_trees=" + std::to_string(trees) + " fd_points=" + std::to_string(points) +
                    " fd_mismatches=" + std::to_string(mismatches) +
                    (first_bad.empty() ? "" : " first=" + first_bad) + " seconds=" + fmt_double(secs)};
}

// ---------------------------------------------------------------- 3

// Size, depth and distinct channels read straight off the prefix text.
struct TextStats {
  std::size_t n = 0, h = 0, d = 0;
};

TextStats text_stats(const std::string& formula) {
  TextStats s;
  std::set<std::string> channels;
  std::size_t level = 0;
  bool after_open = false;
  std::string token;
  const auto flush = [&] {
    if (token.empty()) return;
    ++s.n;
    s.h = std::max(s.h, after_open ? level : level + 1);
    if (token == "x" || token == "m" || token == "c") channels.insert(token);
    after_open = false;
    token.clear();
  };
  for (char ch : formula) {
    if (ch == '(') {
      flush();
      ++level;
      after_open = true;
    } else if (ch == ')') {
      flush();
      --level;
    } else if (ch == ' ') {
      flush();
    } else {
      token += ch;
    }
  }
  flush();
  s.d = channels.size();
  return s;
}

data::ChannelizedDataset toy_dataset(std::uint64_t seed) {
  const auto raw = data::make_informative_mask_dataset(240, 4, seed);
  missingness::MissingnessSpec spec;
  spec.mechanism = missingness::Mechanism::MNAR;
  spec.rate = 0.4;
  spec.seed = seed + 1;
  const auto injected = missingness::inject(raw, spec);
  const auto split =
      data::stratified_split(injected.data.labels, 2, data::SplitSpec{}, RngStream(seed + 2));
  return data::build_channels(injected.data, split);
}

Outcome fitness_oracle() {
  const auto data = toy_dataset(5);
  gp::GPConfig cfg;
  cfg.population_size = 12;
  cfg.generations = 10;
  cfg.seed = 3;
  gp::EvalConfig eval;
  eval.network.hidden_widths = {8};
  eval.horizon = {6, 3};
  const auto result = gp::evolve(data, cfg, eval);

  std::size_t checked = 0, mismatches = 0, depth_one = 0, depth_one_nonzero = 0, stat_mismatch = 0;
  double worst = 0.0;
  for (const auto& h : result.history) {
    const TextStats s = text_stats(h.formula);
    stat_mismatch += (s.n == h.fitness.n && s.h == h.fitness.h && s.d == h.fitness.d) ? 0 : 1;
    ++checked;
    if (s.h == 1) {
      ++depth_one;
      depth_one_nonzero += h.fitness.total == 0.0 ? 0 : 1;
      continue;
    }
    const double oracle = h.fitness.a_val + 0.01 * static_cast<double>(s.d) -
                          0.0001 * static_cast<double>(s.n) - 0.0002 * static_cast<double>(s.h - 1);
    const double diff = std::abs(oracle - h.fitness.total);
    worst = std::max(worst, diff);
    mismatches += diff <= 1e-12 ? 0 : 1;
  }
  // Every lone terminal, scored directly.
  for (const char* f : {"x", "m", "c", "0", "1", "-1", "0.5", "2"}) {
    ++depth_one;
    depth_one_nonzero += gp::fitness(tree::parse(f), data, eval, RngStream(1)).total == 0.0 ? 0 : 1;
  }
  const bool pass = checked == cfg.population_size * cfg.generations && mismatches == 0 &&
                    stat_mismatch == 0 && depth_one_nonzero == 0;
  return {pass, "individuals=" + std::to_string(checked) + " total_mismatches=" + std::to_string(mismatches) +
                    " max_diff=" + fmt_double(worst) + " stat_mismatches=" + std::to_string(stat_mismatch) +
                    " depth_one=" + std::to_string(depth_one) +
                    " depth_one_nonzero=" + std::to_string(depth_one_nonzero)};
}

// ---------------------------------------------------------------- 4

Outcome figure_four() {
  const auto t = tree::parse("(add (min (mul x m) x) x)");
  std::size_t bad = 0, checked = 0;
  RngStream rng(4);
  for (int i = 0; i < 10000; ++i) {
    const double x = i == 0 ? 1.0 : rng.uniform(0.0, 1.0) * std::pow(10.0, rng.uniform(-6.0, 6.0));
    if (!(x > 0.0)) continue;
    const double c = rng.uniform();
    bad += tree::eval(t, x, 0.0, c) == x ? 0 : 1;
    bad += tree::eval(t, x, 1.0, c) == 2.0 * x ? 0 : 1;
    checked += 2;
  }
  return {bad == 0, "points=" + std::to_string(checked) + " mismatches=" + std::to_string(bad)};
}

// ---------------------------------------------------------------- 5

double pair_count_auc(const std::vector<double>& s, const std::vector<bool>& pos) {
  double wins = 0.0, pairs = 0.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!pos[i]) continue;
    for (std::size_t j = 0; j < s.size(); ++j) {
      if (pos[j]) continue;
      pairs += 1.0;
      wins += s[i] > s[j] ? 1.0 : (s[i] == s[j] ? 0.5 : 0.0);
    }
  }
  return wins / pairs;
}

Outcome metric_oracles() {
  RngStream rng(5);
  std::size_t mismatches = 0;
  double worst = 0.0;
  for (int trial = 0; trial < 1000; ++trial) {
    const std::size_t n = 2 + rng.below(49);
    std::vector<double> s(n);
    std::vector<bool> pos(n);
    const bool coarse = rng.bernoulli(0.5);
    for (std::size_t i = 0; i < n; ++i) {
      s[i] = coarse ? static_cast<double>(rng.below(6)) / 5.0 : rng.uniform();
      pos[i] = rng.bernoulli(rng.uniform(0.1, 0.9));
    }
    // At least one of each class.
    const std::size_t p = rng.below(n);
    pos[p] = true;
    pos[(p + 1 + rng.below(n - 1)) % n] = false;
    std::unique_ptr<bool[]> flags(new bool[n]);
    for (std::size_t i = 0; i < n; ++i) flags[i] = pos[i];
    const double auc = metrics::binary_auc(s, std::span<const bool>(flags.get(), n));
    const double diff = std::abs(auc - pair_count_auc(s, pos));
    worst = std::max(worst, diff);
    mismatches += diff <= 1e-12 ? 0 : 1;
  }
  metrics::ConfusionCounts cm(2);
  cm.add(0, 0, 4);
  cm.add(0, 1, 1);
  cm.add(1, 0, 2);
  cm.add(1, 1, 3);
  const auto sm = metrics::scalar_metrics(cm);
  const bool example = std::abs(sm.accuracy - 0.7) <= 1e-12 && std::abs(sm.precision - 0.75) <= 1e-12 &&
                       std::abs(sm.recall - 0.6) <= 1e-12 && std::abs(sm.specificity - 0.8) <= 1e-12;
  return {mismatches == 0 && example,
          "auc_instances=1000 auc_mismatches=" + std::to_string(mismatches) + " max_diff=" + fmt_double(worst) +
              " confusion_example=" + (example ? "ok" : "bad")};
}

// ---------------------------------------------------------------- 6, 7

runner::ExperimentConfig load_config(const std::string& name) {
  return runner::load_experiment_config(source_path("configs/" + name));
}

struct Comparison {
  double ea_mean = 0.0, relu_mean = 0.0;
  std::size_t ea_ok = 0, relu_ok = 0, channel_winners = 0;
};

Comparison compare(const runner::ExperimentResult& r) {
  Comparison c;
  for (const auto& rec : r.records) {
    if (rec.failed) continue;
    if (rec.method == runner::Method::ThreeChannel) {
      c.ea_mean += rec.report.accuracy;
      ++c.ea_ok;
      const auto t = tree::parse(rec.formula);
      c.channel_winners += t.references(tree::Channel::M) || t.references(tree::Channel::C) ? 1 : 0;
    } else if (rec.method == runner::Method::Relu) {
      c.relu_mean += rec.report.accuracy;
      ++c.relu_ok;
    }
  }
  if (c.ea_ok) c.ea_mean /= static_cast<double>(c.ea_ok);
  if (c.relu_ok) c.relu_mean /= static_cast<double>(c.relu_ok);
  return c;
}

Outcome gp_sanity() {
  const auto start = Clock::now();
  auto cfg = load_config("synthetic_mnar40.conf");
  cfg.methods = {runner::Method::ThreeChannel, runner::Method::Relu};
  cfg.runs = 10;
  const auto c = compare(runner::run_experiment(cfg));
  const double secs = seconds_since(start);
  const bool pass = c.ea_ok == 10 && c.relu_ok == 10 && c.channel_winners >= 8 &&
                    c.ea_mean - c.relu_mean >= 0.02 && secs < 1800.0;
  return {pass, "winners_with_m_or_c=" + std::to_string(c.channel_winners) + "/" + std::to_string(c.ea_ok) +
                    " ea_mean=" + fmt_double(c.ea_mean) + " relu_mean=" + fmt_double(c.relu_mean) +
                    " gap=" + fmt_double(c.ea_mean - c.relu_mean) + " seconds=" + fmt_double(secs)};
}

Outcome pima_directional() {
  const auto start = Clock::now();
  auto cfg = load_config("pima_mcar20.conf");
  cfg.methods = {runner::Method::ThreeChannel, runner::Method::Relu};
  cfg.runs = 10;
  const auto c = compare(runner::run_experiment(cfg));
  const double secs = seconds_since(start);
  const bool pass = c.ea_ok == 10 && c.relu_ok == 10 && c.ea_mean >= c.relu_mean - 0.01 && secs < 3600.0;
  return {pass, "ea_mean=" + fmt_double(c.ea_mean) + " relu_mean=" + fmt_double(c.relu_mean) +
                    " gap=" + fmt_double(c.ea_mean - c.relu_mean) + " seconds=" + fmt_double(secs)};
}

// ---------------------------------------------------------------- 8

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

std::string first_line(const fs::path& p) {
  std::ifstream in(p);
  std::string line;
  std::getline(in, line);
  return line;
}

Outcome rate_sweep_protocol() {
  auto cfg = load_config("pima_mcar20.conf");
  cfg.methods = {runner::Method::ThreeChannel, runner::Method::Relu};
  cfg.runs = 3;
  cfg.gp.population_size = 10;
  cfg.gp.generations = 3;
  const std::vector<double> rates{0.1, 0.3, 0.5};

  const fs::path root = fs::temp_directory_path() / "tcea_acceptance_sweep";
  fs::remove_all(root);
  const auto first = runner::rate_sweep(cfg, rates);
  runner::emit_sweep(first, cfg, root / "a");
  runner::emit_sweep(runner::rate_sweep(cfg, rates), cfg, root / "b");

  double worst_rate = 0.0;
  for (const auto& block : first) {
    for (const auto& rec : block.result.records) {
      worst_rate = std::max(worst_rate, std::abs(rec.realized_missing_rate - block.rate));
    }
  }

  std::size_t dirs = 0, schema_bad = 0;
  for (const auto& entry : fs::directory_iterator(root / "a")) {
    if (!entry.is_directory()) continue;
    ++dirs;
    schema_bad += first_line(entry.path() / "aggregate.csv") == runner::kAggregateHeader ? 0 : 1;
    schema_bad += fs::exists(entry.path() / "runs.csv") && fs::exists(entry.path() / "manifest.txt") ? 0 : 1;
  }
  schema_bad += first_line(root / "a" / "sweep.csv") == "rate,method,metric,mean,std" ? 0 : 1;

  std::size_t files = 0, differing = 0;
  for (const auto& entry : fs::recursive_directory_iterator(root / "a")) {
    if (!entry.is_regular_file() || entry.path().filename() == "timings.csv") continue;
    ++files;
    const auto twin = root / "b" / fs::relative(entry.path(), root / "a");
    differing += fs::exists(twin) && slurp(entry.path()) == slurp(twin) ? 0 : 1;
  }
  fs::remove_all(root);
  const bool pass = worst_rate <= 0.03 && dirs == rates.size() && schema_bad == 0 && files > 0 && differing == 0;
  return {pass, "max_rate_deviation=" + fmt_double(worst_rate) + " rate_dirs=" + std::to_string(dirs) +
                    " schema_problems=" + std::to_string(schema_bad) + " compared_files=" +
                    std::to_string(files) + " differing_files=" + std::to_string(differing)};
}

// ---------------------------------------------------------------- 9

bool has_token(const std::string& formula, const std::string& token) {
  std::string t;
  for (char ch : formula + " ") {
    if (ch == '(' || ch == ')' || ch == ' ') {
      if (t == token) return true;
      t.clear();
    } else {
      t += ch;
    }
  }
  return false;
}

Outcome ablation_containment() {
  const auto start = Clock::now();
  auto cfg = load_config("pima_ablation.conf");
  cfg.methods = {runner::Method::ThreeChannel};
  cfg.runs = 5;
  std::size_t winners = 0, leaks = 0, failed = 0;
  for (const auto& [variant, channel] : {std::pair{runner::Ablation::NoConfidence, "c"},
                                         std::pair{runner::Ablation::NoFlag, "m"}}) {
    cfg.ablation = variant;
    for (const auto& rec : runner::run_experiment(cfg).records) {
      if (rec.failed) {
        ++failed;
        continue;
      }
      ++winners;
      leaks += has_token(rec.formula, channel) ? 1 : 0;
    }
  }
  return {winners == 10 && leaks == 0 && failed == 0,
          "winners=" + std::to_string(winners) + " leaks=" + std::to_string(leaks) +
              " failed=" + std::to_string(failed) + " seconds=" + fmt_double(seconds_since(start))};
}

struct Criterion {
  const char* name;
  std::function<Outcome()> run;
};

}  // namespace

int main(int argc, char** argv) {
  spdlog::set_level(spdlog::level::warn);
  const std::vector<Criterion> criteria{
      {"channelprop_invariants", channelprop_suite},
      {"tree_totality_and_gradients", tree_suite},
      {"fitness_oracle", fitness_oracle},
      {"figure4_semantics", figure_four},
      {"metric_oracles", metric_oracles},
      {"gp_sanity_informative_mask", gp_sanity},
      {"pima_mcar20_directional", pima_directional},
      {"rate_sweep_protocol", rate_sweep_protocol},
      {"ablation_containment", ablation_containment},
  };
  std::set<std::size_t> selected;
  for (int i = 1; i < argc; ++i) selected.insert(std::stoul(argv[i]));

  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (!selected.empty() && !selected.count(i + 1)) continue;
    Outcome o;
    try {
      o = criteria[i].run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    failures += o.pass ? 0 : 1;
    std::printf("%s %zu %s: %s\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].name, o.detail.c_str());
    std::fflush(stdout);
  }
  return failures == 0 ? 0 : 1;
}
