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

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tcea/error.hpp"
#include "tcea/missingness/inject.hpp"

using namespace tcea;
using namespace tcea::missingness;
using data::Cell;
using data::RawDataset;

namespace {

RawDataset gaussian(std::size_t rows, std::size_t cols, std::uint64_t seed) {
  numeric::RngStream rng(seed);
  RawDataset raw;
  raw.name = "gauss";
  raw.class_names = {"0", "1"};
  for (std::size_t j = 0; j < cols; ++j) {
    raw.columns.push_back(data::Column{"f" + std::to_string(j), data::ColumnKind::Numeric});
  }
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<Cell> row;
    for (std::size_t j = 0; j < cols; ++j) row.emplace_back(rng.normal());
    raw.cells.push_back(std::move(row));
    raw.labels.push_back(static_cast<int>(i % 2));
  }
  return raw;
}

MissingnessSpec spec_of(Mechanism m, double rate, std::uint64_t seed = 1) {
  MissingnessSpec s;
  s.mechanism = m;
  s.rate = rate;
  s.seed = seed;
  return s;
}

double value(const RawDataset& raw, std::size_t i, std::size_t j) {
  return std::get<double>(raw.cells[i][j]);
}

// Missing rate among the rows whose `key` is in the top or bottom decile.
std::pair<double, double> decile_rates(const std::vector<double>& key,
                                       const std::vector<bool>& masked) {
  std::vector<std::size_t> order(key.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return key[a] < key[b]; });
  const std::size_t tenth = key.size() / 10;
  double low = 0.0, high = 0.0;
  for (std::size_t k = 0; k < tenth; ++k) {
    low += masked[order[k]] ? 1.0 : 0.0;
    high += masked[order[order.size() - 1 - k]] ? 1.0 : 0.0;
  }
  return {low / static_cast<double>(tenth), high / static_cast<double>(tenth)};
}

}  // namespace

TEST_CASE("rate zero is the identity for every mechanism") {
  const RawDataset raw = gaussian(200, 5, 1);
  for (Mechanism m : {Mechanism::MCAR, Mechanism::MAR, Mechanism::MNAR}) {
    const auto out = inject(raw, spec_of(m, 0.0));
    CHECK(out.data.cells == raw.cells);
    CHECK(out.masked_cells == 0);
  }
}

TEST_CASE("MCAR") {
  const RawDataset raw = gaussian(1000, 10, 2);
  const auto out = inject(raw, spec_of(Mechanism::MCAR, 0.2, 5));
  CHECK(out.data.missing_count() >= 1800);
  CHECK(out.data.missing_count() <= 2200);
  CHECK(out.data.labels == raw.labels);
  CHECK(inject(raw, spec_of(Mechanism::MCAR, 0.2, 5)).data.cells == out.data.cells);
  CHECK(inject(raw, spec_of(Mechanism::MCAR, 0.2, 6)).data.cells != out.data.cells);

  // Mask indicators are uncorrelated with the cell values.
  double sx = 0, sy = 0, sxx = 0, syy = 0, sxy = 0, n = 0;
  for (std::size_t i = 0; i < raw.rows(); ++i) {
    for (std::size_t j = 0; j < raw.cols(); ++j) {
      const double x = value(raw, i, j);
      const double y = data::is_missing(out.data.cells[i][j]) ? 1.0 : 0.0;
      sx += x; sy += y; sxx += x * x; syy += y * y; sxy += x * y; n += 1;
    }
  }
  const double corr = (sxy / n - sx / n * sy / n) /
                      std::sqrt((sxx / n - sx * sx / n / n) * (syy / n - sy * sy / n / n));
  CHECK(std::abs(corr) <= 0.05);
}

TEST_CASE("MAR") {
  const RawDataset raw = gaussian(1000, 10, 3);
  const auto out = inject(raw, spec_of(Mechanism::MAR, 0.2, 8));
  CHECK(out.realized_rate() >= 0.17);
  CHECK(out.realized_rate() <= 0.23);
  CHECK(out.targets.size() == 7);  // ceil(0.3 * 10) = 3 pivots
  std::vector<bool> is_target(10, false);
  for (std::size_t t : out.targets) is_target[t] = true;
  for (std::size_t j = 0; j < 10; ++j) {
    if (is_target[j]) {
      CHECK(out.driver[j] != kNoPivot);
      CHECK_FALSE(is_target[out.driver[j]]);
      continue;
    }
    for (std::size_t i = 0; i < raw.rows(); ++i) CHECK_FALSE(data::is_missing(out.data.cells[i][j]));
  }
  // Top-decile pivot rows are masked more often than bottom-decile rows.
  for (std::size_t t : out.targets) {
    std::vector<double> key(raw.rows());
    std::vector<bool> masked(raw.rows());
    for (std::size_t i = 0; i < raw.rows(); ++i) {
      key[i] = value(raw, i, out.driver[t]);
      masked[i] = data::is_missing(out.data.cells[i][t]);
    }
    const auto [low, high] = decile_rates(key, masked);
    CHECK(high > low);
  }
  CHECK(inject(raw, spec_of(Mechanism::MAR, 0.2, 8)).data.cells == out.data.cells);
  CHECK_THROWS_AS(inject(gaussian(50, 1, 1), spec_of(Mechanism::MAR, 0.2)), MechanismError);
}

TEST_CASE("MNAR") {
  const RawDataset raw = gaussian(1000, 10, 4);
  const auto out = inject(raw, spec_of(Mechanism::MNAR, 0.2, 9));
  CHECK(out.realized_rate() >= 0.17);
  CHECK(out.realized_rate() <= 0.23);
  for (std::size_t j = 0; j < raw.cols(); ++j) {
    std::vector<double> values(raw.rows());
    for (std::size_t i = 0; i < raw.rows(); ++i) values[i] = value(raw, i, j);
    std::vector<double> sorted = values;
    std::nth_element(sorted.begin(), sorted.begin() + 500, sorted.end());
    const double median = sorted[500];
    std::vector<double> key(raw.rows());
    std::vector<bool> masked(raw.rows());
    for (std::size_t i = 0; i < raw.rows(); ++i) {
      key[i] = std::abs(values[i] - median);
      masked[i] = data::is_missing(out.data.cells[i][j]);
    }
    const auto [low, high] = decile_rates(key, masked);
    CHECK(high > low);
  }
  CHECK(inject(raw, spec_of(Mechanism::MNAR, 0.2, 9)).data.cells == out.data.cells);

  // A constant column falls back to MCAR and still hits the rate.
  RawDataset constant = raw;
  for (auto& row : constant.cells) row[0] = 1.0;
  const auto fallback = inject(constant, spec_of(Mechanism::MNAR, 0.3, 2));
  std::size_t col0 = 0;
  for (const auto& row : fallback.data.cells) col0 += data::is_missing(row[0]) ? 1 : 0;
  CHECK(std::abs(static_cast<double>(col0) / 1000.0 - 0.3) <= 0.06);
}

TEST_CASE("rate calibration within 0.03 for every mechanism and rate") {
  const RawDataset raw = gaussian(500, 6, 5);
  for (Mechanism m : {Mechanism::MCAR, Mechanism::MAR, Mechanism::MNAR}) {
    for (double rate : {0.1, 0.2, 0.3, 0.4, 0.5}) {
      const auto out = inject(raw, spec_of(m, rate, 13));
      CHECK_MESSAGE(std::abs(out.realized_rate() - rate) <= 0.03, to_string(m), " ", rate);
      CHECK(out.data.labels == raw.labels);
    }
  }
}

TEST_CASE("errors") {
  RawDataset raw = gaussian(20, 3, 6);
  raw.cells[0][0] = data::Missing{};
  CHECK_THROWS_AS(inject(raw, spec_of(Mechanism::MCAR, 0.2)), InjectionError);
  CHECK_THROWS_AS(spec_of(Mechanism::MCAR, 1.0).validate(), ConfigError);
  CHECK_THROWS_AS(parse_mechanism("MXAR"), ConfigError);
}

TEST_CASE("calibrated intercept hits the requested mean probability") {
  numeric::RngStream rng(7);
  std::vector<double> scores(300);
  for (auto& s : scores) s = 2.0 * rng.normal();
  for (double rate : {0.05, 0.2, 0.5, 0.8}) {
    const double a = calibrate_intercept(scores, rate);
    double mean = 0.0;
    for (double s : scores) mean += 1.0 / (1.0 + std::exp(-(a + s)));
    CHECK(std::abs(mean / 300.0 - rate) <= 1e-6);
  }
}
