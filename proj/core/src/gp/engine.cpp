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

#include "tcea/gp/engine.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <ostream>
#include <thread>

#include <spdlog/spdlog.h>

#include "tcea/error.hpp"
#include "tcea/gp/variation.hpp"
#include "tcea/tree/format.hpp"

namespace tcea::gp {

using tree::ActivationTree;

void GPConfig::validate() const {
  if (population_size == 0) throw ConfigError("gp: population_size must be positive");
  if (generations == 0) throw ConfigError("gp: generations must be positive");
  if (max_depth == 0) throw ConfigError("gp: max_depth must be positive");
  if (!(p_crossover >= 0.0 && p_crossover <= 1.0)) {
    throw ConfigError("gp: p_crossover must lie in [0, 1]");
  }
  if (!(p_mutation >= 0.0 && p_mutation <= 1.0)) {
    throw ConfigError("gp: p_mutation must lie in [0, 1]");
  }
  if (elite_size >= population_size) {
    throw ConfigError("gp: elite_size must be smaller than population_size");
  }
  if (!(selection_temperature > 0.0)) {
    throw ConfigError("gp: selection_temperature must be positive");
  }
  if (terminals.leaves().empty()) throw ConfigError("gp: terminal set is empty");
}

std::vector<ActivationTree> initial_population(const GPConfig& config, numeric::RngStream& rng) {
  const std::size_t low = std::min<std::size_t>(2, config.max_depth);
  const std::size_t levels = config.max_depth - low + 1;
  std::vector<ActivationTree> population;
  population.reserve(config.population_size);
  for (std::size_t i = 0; i < config.population_size; ++i) {
    const std::size_t depth = low + (i / 2) % levels;
    const auto method = i % 2 == 0 ? tree::InitMethod::Grow : tree::InitMethod::Full;
    population.push_back(tree::random_tree(rng, depth, method, config.terminals));
  }
  return population;
}

namespace {

struct Job {
  std::size_t index;
  std::string key;
};

// Scores every unevaluated individual. Duplicate formulas within the run are
// taken from `cache`; the rest are trained, in parallel when configured, and
// merged back by index.
std::size_t evaluate_generation(std::vector<Individual>& population, std::size_t generation,
                                const data::ChannelizedDataset& dataset, const GPConfig& config,
                                const EvalConfig& eval,
                                std::map<std::string, FitnessBreakdown>& cache,
                                const numeric::RngStream& run_rng) {
  std::vector<Job> jobs;
  std::map<std::string, std::size_t> pending;
  for (std::size_t i = 0; i < population.size(); ++i) {
    if (population[i].fitness) continue;
    std::string key = tree::format(population[i].tree);
    if (cache.count(key) != 0 || pending.count(key) != 0) continue;
    pending.emplace(key, jobs.size());
    jobs.push_back({i, std::move(key)});
  }

  std::vector<FitnessBreakdown> results(jobs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t j = next++; j < jobs.size(); j = next++) {
      const std::size_t i = jobs[j].index;
      const numeric::RngStream rng = run_rng.child(generation).child(i);
      results[j] = fitness(population[i].tree, dataset, eval, rng);
    }
  };
  const std::size_t threads = std::max<std::size_t>(1, std::min(config.threads, jobs.size()));
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::size_t trained = 0;
  for (std::size_t j = 0; j < jobs.size(); ++j) {
    if (!results[j].degenerate) ++trained;
    cache.emplace(jobs[j].key, results[j]);
  }
  for (Individual& ind : population) {
    if (!ind.fitness) ind.fitness = cache.at(tree::format(ind.tree));
  }
  return trained;
}

}  // namespace

EvolutionResult evolve(const data::ChannelizedDataset& dataset, const GPConfig& config,
                       const EvalConfig& eval, const ProgressCallback& progress) {
  config.validate();
  const numeric::RngStream run_rng(config.seed);
  numeric::RngStream init_rng = run_rng.child("init");
  numeric::RngStream variation_rng = run_rng.child("variation");
  const numeric::RngStream eval_rng = run_rng.child("fitness");

  std::vector<Individual> population;
  for (ActivationTree& t : initial_population(config, init_rng)) {
    population.push_back(Individual{std::move(t), std::nullopt, 0, kNoParent, kNoParent});
  }

  EvolutionResult result;
  std::map<std::string, FitnessBreakdown> cache;
  bool have_best = false;

  for (std::size_t gen = 0; gen < config.generations; ++gen) {
    result.trainings += evaluate_generation(population, gen, dataset, config, eval, cache, eval_rng);

    std::vector<double> scores(population.size());
    for (std::size_t i = 0; i < population.size(); ++i) {
      const Individual& ind = population[i];
      scores[i] = ind.fitness->total;
      result.history.push_back(HistoryRecord{gen, i, tree::format(ind.tree), *ind.fitness,
                                             ind.parent_a, ind.parent_b});
      if (!have_best || scores[i] > result.best.fitness->total) {
        result.best = ind;
        have_best = true;
      }
    }
    result.best_per_generation.push_back(*std::max_element(scores.begin(), scores.end()));
    spdlog::info("generation {}: best {:.4f} ({})", gen, result.best.fitness->total,
                 tree::format(result.best.tree));
    if (progress) progress(gen, result.best.fitness->total);
    if (gen + 1 == config.generations) break;

    // Elites first, ties broken by lower index.
    std::vector<std::size_t> ranking(population.size());
    for (std::size_t i = 0; i < ranking.size(); ++i) ranking[i] = i;
    std::stable_sort(ranking.begin(), ranking.end(),
                     [&](std::size_t a, std::size_t b) { return scores[a] > scores[b]; });

    std::vector<Individual> next;
    next.reserve(population.size());
    for (std::size_t e = 0; e < config.elite_size; ++e) {
      Individual elite = population[ranking[e]];
      elite.generation = gen + 1;
      elite.parent_a = ranking[e];
      elite.parent_b = kNoParent;
      next.push_back(std::move(elite));
    }
    while (next.size() < population.size()) {
      const auto parents =
          softmax_select(scores, 2, config.selection_temperature, variation_rng);
      ActivationTree child_a = population[parents[0]].tree;
      ActivationTree child_b = population[parents[1]].tree;
      if (variation_rng.bernoulli(config.p_crossover)) {
        std::tie(child_a, child_b) = crossover(child_a, child_b, config.max_depth, variation_rng);
      }
      if (variation_rng.bernoulli(config.p_mutation)) {
        child_a = mutate(child_a, config.max_depth, variation_rng, config.terminals);
      }
      if (variation_rng.bernoulli(config.p_mutation)) {
        child_b = mutate(child_b, config.max_depth, variation_rng, config.terminals);
      }
      next.push_back(Individual{std::move(child_a), std::nullopt, gen + 1, parents[0], parents[1]});
      if (next.size() < population.size()) {
        next.push_back(
            Individual{std::move(child_b), std::nullopt, gen + 1, parents[1], parents[0]});
      }
    }
    population = std::move(next);
  }
  return result;
}

void write_history_csv(std::ostream& out, const std::vector<HistoryRecord>& history) {
  out << "generation,index,formula,a_val,N,H,D,F,degenerate,diverged,parent_a,parent_b\n";
  const auto parent = [](std::size_t p) {
    return p == kNoParent ? std::string("-") : std::to_string(p);
  };
  for (const HistoryRecord& r : history) {
    out << r.generation << ',' << r.index << ",\"" << r.formula << "\","
        << fmt::format("{:.17g}", r.fitness.a_val) << ',' << r.fitness.n << ',' << r.fitness.h
        << ',' << r.fitness.d << ',' << fmt::format("{:.17g}", r.fitness.total) << ','
        << (r.fitness.degenerate ? 1 : 0) << ',' << (r.fitness.diverged ? 1 : 0) << ','
        << parent(r.parent_a) << ',' << parent(r.parent_b) << '\n';
  }
}

}  // namespace tcea::gp
