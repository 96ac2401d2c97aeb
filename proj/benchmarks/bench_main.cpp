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

#include <benchmark/benchmark.h>

#include <vector>

#include "tcea/data/channelize.hpp"
#include "tcea/data/split.hpp"
#include "tcea/data/synthetic.hpp"
#include "tcea/missingness/inject.hpp"
#include "tcea/net/channelprop.hpp"
#include "tcea/net/train.hpp"
#include "tcea/numeric/rng.hpp"
#include "tcea/tree/evaluate.hpp"
#include "tcea/tree/format.hpp"

using namespace tcea;

namespace {

numeric::Matrix random_matrix(numeric::RngStream& rng, Eigen::Index r, Eigen::Index c) {
  numeric::Matrix m(r, c);
  for (Eigen::Index i = 0; i < m.size(); ++i) m.data()[i] = rng.uniform(-1.0, 1.0);
  return m;
}

void BM_TreeEvalWithGrad(benchmark::State& state) {
  const auto tree = tree::parse("(add (min (mul x m) x) (mul (tanh x) c))");
  const auto n = static_cast<std::size_t>(state.range(0));
  numeric::RngStream rng(1);
  std::vector<double> x(n), m(n), c(n), value(n), grad(n);
  for (std::size_t i = 0; i < n; ++i) {
    x[i] = rng.uniform(-3.0, 3.0);
    m[i] = rng.uniform();
    c[i] = rng.uniform();
  }
  for (auto _ : state) {
    tree::eval_into(tree, x, m, c, value, grad);
    benchmark::DoNotOptimize(value.data());
  }
  state.SetItemsProcessed(static_cast<long>(state.iterations() * n));
}
BENCHMARK(BM_TreeEvalWithGrad)->Arg(32 * 64)->Arg(1 << 16);

void BM_ChannelProp(benchmark::State& state) {
  numeric::RngStream rng(2);
  const numeric::Matrix w = random_matrix(rng, 64, 64);
  const numeric::Matrix m = (random_matrix(rng, 32, 64).array() + 1.0).matrix() / 2.0;
  const numeric::Matrix c = (random_matrix(rng, 32, 64).array() + 1.0).matrix() / 2.0;
  for (auto _ : state) {
    auto out = net::channelprop(w, m, c);
    benchmark::DoNotOptimize(out.confidence.data());
  }
}
BENCHMARK(BM_ChannelProp);

void BM_TrainShortHorizon(benchmark::State& state) {
  const auto raw = data::make_informative_mask_dataset(600, 6, 3);
  missingness::MissingnessSpec spec;
  spec.mechanism = missingness::Mechanism::MNAR;
  spec.rate = 0.4;
  spec.seed = 4;
  const auto injected = missingness::inject(raw, spec);
  const auto split = data::stratified_split(injected.data.labels, 2, data::SplitSpec{},
                                            numeric::RngStream(5));
  const auto dataset = data::build_channels(injected.data, split);
  net::MLPConfig config;
  config.activation = tree::parse("(add (min (mul x m) x) x)");
  for (auto _ : state) {
    auto trained = net::train(config, dataset, net::Horizon::fitness(), numeric::RngStream(6));
    benchmark::DoNotOptimize(trained.best_val_accuracy);
  }
}
BENCHMARK(BM_TrainShortHorizon)->Unit(benchmark::kMillisecond);

}  // namespace

BENCHMARK_MAIN();
