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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <map>
#include <sstream>

#include "tcea/data/split.hpp"
#include "tcea/data/synthetic.hpp"
#include "tcea/error.hpp"
#include "tcea/gp/engine.hpp"
#include "tcea/gp/fitness.hpp"
#include "tcea/gp/variation.hpp"
#include "tcea/missingness/inject.hpp"
#include "tcea/tree/format.hpp"

using namespace tcea;
using namespace tcea::gp;
using tree::ActivationTree;
using tree::parse;

namespace {

data::ChannelizedDataset toy_dataset() {
  const auto raw = data::make_informative_mask_dataset(200, 4, 1);
  missingness::MissingnessSpec spec;
  spec.mechanism = missingness::Mechanism::MNAR;
  spec.rate = 0.4;
  spec.seed = 2;
  const auto injected = missingness::inject(raw, spec);
  const auto split = data::stratified_split(injected.data.labels, 2, data::SplitSpec{},
                                            numeric::RngStream(3));
  return data::build_channels(injected.data, split);
}

EvalConfig toy_eval() {
  EvalConfig eval;
  eval.network.hidden_widths = {8};
  eval.horizon = {4, 2};
  return eval;
}

}  // namespace

TEST_CASE("fitness formula") {
  const FitnessWeights w;
  CHECK(std::abs(fitness_total(0.8, 5, 3, 3, w) - 0.8291) <= 1e-12);
  CHECK(fitness_total(0.9, 1, 1, 1, w) == 0.0);
  CHECK(fitness_total(0.7, 5, 3, 3, w) - fitness_total(0.7, 5, 3, 2, w) ==
        doctest::Approx(0.01).epsilon(1e-12));
}

TEST_CASE("depth-one trees score zero without training") {
  const auto data = toy_dataset();
  for (const char* f : {"x", "m", "c", "0.5", "-2"}) {
    const auto b = fitness(parse(f), data, toy_eval(), numeric::RngStream(1));
    CHECK(b.total == 0.0);
    CHECK(b.degenerate);
    CHECK(b.a_val == 0.0);
  }
  const auto b = fitness(parse("(add x m)"), data, toy_eval(), numeric::RngStream(1));
  CHECK_FALSE(b.degenerate);
  CHECK(b.a_val > 0.0);
  CHECK(b.n == 3);
  CHECK(b.h == 2);
  CHECK(b.d == 2);
  CHECK(b.total == fitness_total(b.a_val, 3, 2, 2, FitnessWeights{}));
}

TEST_CASE("softmax selection") {
  numeric::RngStream rng(1);
  CHECK_THROWS_AS(softmax_select(std::vector<double>{}, 1, 1.0, rng), SelectionError);

  std::vector<int> counts(4, 0);
  for (std::size_t i : softmax_select(std::vector<double>{0.3, 0.3, 0.3, 0.3}, 10000, 1.0, rng)) ++counts[i];
  for (int c : counts) {
    CHECK(c >= 2200);
    CHECK(c <= 2800);
  }

  int first = 0;
  for (std::size_t i : softmax_select(std::vector<double>{1.0, 0.0}, 10000, 1.0, rng)) first += i == 0;
  CHECK(std::abs(first / 10000.0 - std::exp(1.0) / (std::exp(1.0) + 1.0)) <= 0.02);

  std::vector<int> hot(3, 0);
  for (std::size_t i : softmax_select(std::vector<double>{1.0, 0.0, 0.5}, 10000, 1e6, rng)) ++hot[i];
  for (int c : hot) CHECK(std::abs(c / 10000.0 - 1.0 / 3.0) <= 0.02);
}

TEST_CASE("crossover") {
  numeric::RngStream rng(2);
  const auto [a, b] = crossover(parse("x"), parse("m"), 3, rng);
  CHECK(tree::format(a) == "m");
  CHECK(tree::format(b) == "x");

  for (int i = 0; i < 1000; ++i) {
    const auto p = tree::random_tree(rng, 3, tree::InitMethod::Full);
    const auto q = tree::random_tree(rng, 3, tree::InitMethod::Grow);
    const auto before = p;
    const auto [c1, c2] = crossover(p, q, 3, rng);
    CHECK(c1.depth() <= 3);
    CHECK(c2.depth() <= 3);
    CHECK(p == before);
  }
  numeric::RngStream r1(5), r2(5);
  const auto p = parse("(add (min (mul x m) x) x)");
  const auto q = parse("(sub (tanh c) (exp m))");
  CHECK(crossover(p, q, 4, r1) == crossover(p, q, 4, r2));
}

TEST_CASE("mutation") {
  numeric::RngStream rng(3);
  std::map<std::string, int> seen;
  for (int i = 0; i < 2000; ++i) {
    const auto t = point_mutation(parse("x"), rng);
    CHECK(tree::format(t) != "x");
    CHECK(t.size() == 1);
    ++seen[tree::format(t)];
  }
  CHECK(seen.count("m") == 1);
  CHECK(seen.count("c") == 1);
  CHECK(seen.count("-2") == 1);

  for (int i = 0; i < 1000; ++i) {
    const auto t = tree::random_tree(rng, 3, tree::InitMethod::Grow);
    CHECK(mutate(t, 3, rng).depth() <= 3);
  }
  numeric::RngStream r1(8), r2(8);
  const auto t = parse("(add (min (mul x m) x) x)");
  CHECK(mutate(t, 4, r1) == mutate(t, 4, r2));

  const auto no_m = tree::TerminalSet::without(tree::Channel::M);
  for (int i = 0; i < 500; ++i) CHECK_FALSE(mutate(parse("(add x c)"), 3, rng, no_m).references(tree::Channel::M));
}

TEST_CASE("ramped initialization covers depths 2..max and both methods") {
  GPConfig cfg;
  cfg.population_size = 40;
  cfg.max_depth = 4;
  numeric::RngStream rng(4);
  const auto pop = initial_population(cfg, rng);
  CHECK(pop.size() == 40);
  bool saw_depth_four = false;
  for (const auto& t : pop) {
    CHECK(t.depth() <= 4);
    saw_depth_four = saw_depth_four || t.depth() == 4;
  }
  CHECK(saw_depth_four);
}

TEST_CASE("evolve") {
  const auto data = toy_dataset();
  GPConfig cfg;
  cfg.population_size = 6;
  cfg.generations = 4;
  cfg.seed = 11;

  SUBCASE("single generation returns the best initial individual") {
    GPConfig one = cfg;
    one.population_size = 4;
    one.generations = 1;
    const auto r = evolve(data, one, toy_eval());
    CHECK(r.history.size() == 4);
    double best = -1.0;
    for (const auto& h : r.history) best = std::max(best, h.fitness.total);
    CHECK(r.best.fitness->total == best);
  }
  SUBCASE("history invariants, elitism and budget") {
    const auto r = evolve(data, cfg, toy_eval());
    CHECK(r.history.size() == 24);
    for (std::size_t g = 1; g < r.best_per_generation.size(); ++g) {
      CHECK(r.best_per_generation[g] >= r.best_per_generation[g - 1]);
    }
    std::size_t nondegenerate = 0;
    for (const auto& h : r.history) {
      const auto t = parse(h.formula);
      CHECK(t.depth() <= cfg.max_depth);
      CHECK(h.fitness.total == fitness_total(h.fitness.a_val, h.fitness.n, h.fitness.h,
                                             h.fitness.d, FitnessWeights{}));
      nondegenerate += h.fitness.degenerate ? 0 : 1;
    }
    CHECK(r.trainings <= nondegenerate);
    CHECK(r.trainings <= cfg.population_size * cfg.generations);
    CHECK(r.best.fitness->total == *std::max_element(r.best_per_generation.begin(), r.best_per_generation.end()));

    std::ostringstream csv;
    write_history_csv(csv, r.history);
    std::size_t lines = 0;
    for (char ch : csv.str()) lines += ch == '\n';
    CHECK(lines == 25);
  }
  SUBCASE("fixed seed, identical run; threads do not change the result") {
    const auto a = evolve(data, cfg, toy_eval());
    GPConfig threaded = cfg;
    threaded.threads = 3;
    const auto b = evolve(data, threaded, toy_eval());
    CHECK(tree::format(a.best.tree) == tree::format(b.best.tree));
    REQUIRE(a.history.size() == b.history.size());
    for (std::size_t i = 0; i < a.history.size(); ++i) {
      CHECK(a.history[i].formula == b.history[i].formula);
      CHECK(a.history[i].fitness.total == b.history[i].fitness.total);
    }
  }
}

TEST_CASE("config validation") {
  GPConfig cfg;
  CHECK_NOTHROW(cfg.validate());
  CHECK(cfg.population_size == 100);
  CHECK(cfg.generations == 30);
  CHECK(cfg.max_depth == 3);
  CHECK(cfg.p_crossover == 0.7);
  CHECK(cfg.p_mutation == 0.15);
  CHECK(cfg.elite_size == 2);
  cfg.elite_size = 100;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
  cfg.elite_size = 2;
  cfg.p_mutation = 1.5;
  CHECK_THROWS_AS(cfg.validate(), ConfigError);
}
