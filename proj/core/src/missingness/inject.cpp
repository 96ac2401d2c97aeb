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

#include "tcea/missingness/inject.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <cmath>
#include <numeric>

#include "tcea/error.hpp"

namespace tcea::missingness {

using data::Cell;
using data::RawDataset;

Mechanism parse_mechanism(std::string_view name) {
  if (name == "MCAR" || name == "mcar") return Mechanism::MCAR;
  if (name == "MAR" || name == "mar") return Mechanism::MAR;
  if (name == "MNAR" || name == "mnar") return Mechanism::MNAR;
  throw ConfigError("unknown missingness mechanism '" + std::string(name) + "'");
}

const char* to_string(Mechanism mechanism) noexcept {
  switch (mechanism) {
    case Mechanism::MCAR: return "MCAR";
    case Mechanism::MAR: return "MAR";
    case Mechanism::MNAR: return "MNAR";
  }
  return "?";
}

void MissingnessSpec::validate() const {
  if (!(rate >= 0.0 && rate < 1.0)) throw ConfigError("missingness rate must lie in [0, 1)");
  if (!(mar_pivot_fraction > 0.0 && mar_pivot_fraction < 1.0)) {
    throw ConfigError("mar_pivot_fraction must lie in (0, 1)");
  }
  if (!(steepness > 0.0)) throw ConfigError("missingness steepness must be positive");
}

namespace {

double sigmoid(double z) { return 1.0 / (1.0 + std::exp(-z)); }

void require_complete(const RawDataset& raw) {
  if (raw.missing_count() != 0) {
    throw InjectionError("injection requires a complete dataset; " + raw.name + " has " +
                         std::to_string(raw.missing_count()) + " missing cells");
  }
}

InjectionResult start(const RawDataset& complete, const MissingnessSpec& spec) {
  spec.validate();
  require_complete(complete);
  InjectionResult result;
  result.data = complete;
  result.driver.assign(complete.cols(), kNoPivot);
  return result;
}

// Masks column j row by row with the given probabilities, using a stream
// private to the column so the mask does not depend on column order.
void mask_column(InjectionResult& result, std::size_t j, const std::vector<double>& prob,
                 const numeric::RngStream& rng) {
  numeric::RngStream column_rng = rng.child(static_cast<std::uint64_t>(j));
  for (std::size_t i = 0; i < result.data.rows(); ++i) {
    if (column_rng.uniform() < prob[i]) {
      result.data.cells[i][j] = data::Missing{};
      ++result.masked_cells;
    }
  }
  result.eligible_cells += result.data.rows();
}

// Average ranks (1-based) over a column, ties sharing their mean rank.
std::vector<double> ranks_of(const RawDataset& raw, std::size_t j) {
  const std::size_t n = raw.rows();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto less = [&](std::size_t a, std::size_t b) { return raw.cells[a][j] < raw.cells[b][j]; };
  std::stable_sort(order.begin(), order.end(), less);
  std::vector<double> rank(n);
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo + 1;
    while (hi < n && raw.cells[order[hi]][j] == raw.cells[order[lo]][j]) ++hi;
    const double shared = 0.5 * static_cast<double>(lo + 1 + hi);
    for (std::size_t k = lo; k < hi; ++k) rank[order[k]] = shared;
    lo = hi;
  }
  return rank;
}

// (v - mean) / std; all zeros when the spread vanishes.
std::vector<double> standardize(std::vector<double> v) {
  const double n = static_cast<double>(v.size());
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / n;
  double var = 0.0;
  for (double x : v) var += (x - mean) * (x - mean);
  const double sd = std::sqrt(var / n);
  for (double& x : v) x = sd > 0.0 ? (x - mean) / sd : 0.0;
  return v;
}

std::vector<double> logistic_probabilities(const std::vector<double>& scores, double steepness,
                                           double rate) {
  std::vector<double> scaled(scores.size());
  std::transform(scores.begin(), scores.end(), scaled.begin(),
                 [steepness](double s) { return steepness * s; });
  const double intercept = calibrate_intercept(scaled, rate);
  for (double& s : scaled) s = sigmoid(intercept + s);
  return scaled;
}

}  // namespace

double calibrate_intercept(const std::vector<double>& scores, double rate) {
  auto expected = [&](double a) {
    double total = 0.0;
    for (double s : scores) total += sigmoid(a + s);
    return total / static_cast<double>(scores.size());
  };
  double lo = -60.0;
  double hi = 60.0;
  for (int iter = 0; iter < 200 && hi - lo > 1e-12; ++iter) {
    const double mid = 0.5 * (lo + hi);
    if (expected(mid) < rate) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

InjectionResult inject_mcar(const RawDataset& complete, const MissingnessSpec& spec,
                            numeric::RngStream rng) {
  InjectionResult result = start(complete, spec);
  const std::vector<double> prob(complete.rows(), spec.rate);
  for (std::size_t j = 0; j < complete.cols(); ++j) {
    result.targets.push_back(j);
    if (spec.rate == 0.0) {
      result.eligible_cells += complete.rows();
      continue;
    }
    mask_column(result, j, prob, rng);
  }
  return result;
}

InjectionResult inject_mar(const RawDataset& complete, const MissingnessSpec& spec,
                           numeric::RngStream rng) {
  const std::size_t d = complete.cols();
  if (d < 2) throw MechanismError("MAR injection needs at least two features");
  InjectionResult result = start(complete, spec);

  std::vector<std::size_t> columns(d);
  std::iota(columns.begin(), columns.end(), std::size_t{0});
  numeric::RngStream layout = rng.child("mar-pivots");
  layout.shuffle(columns.begin(), columns.end());
  auto n_pivots = static_cast<std::size_t>(std::ceil(spec.mar_pivot_fraction * static_cast<double>(d)));
  n_pivots = std::clamp<std::size_t>(n_pivots, 1, d - 1);
  std::vector<std::size_t> pivots(columns.begin(), columns.begin() + n_pivots);
  std::sort(pivots.begin(), pivots.end());

  std::vector<std::vector<double>> pivot_scores(d);
  for (std::size_t p : pivots) pivot_scores[p] = standardize(ranks_of(complete, p));

  for (std::size_t j = 0; j < d; ++j) {
    if (std::binary_search(pivots.begin(), pivots.end(), j)) continue;
    const std::size_t pivot = pivots[layout.below(pivots.size())];
    result.driver[j] = pivot;
    result.targets.push_back(j);
    if (spec.rate == 0.0) {
      result.eligible_cells += complete.rows();
      continue;
    }
    mask_column(result, j, logistic_probabilities(pivot_scores[pivot], spec.steepness, spec.rate),
                rng);
  }
  return result;
}

InjectionResult inject_mnar(const RawDataset& complete, const MissingnessSpec& spec,
                            numeric::RngStream rng) {
  InjectionResult result = start(complete, spec);
  const std::size_t n = complete.rows();
  for (std::size_t j = 0; j < complete.cols(); ++j) {
    result.targets.push_back(j);
    if (spec.rate == 0.0 || n == 0) {
      result.eligible_cells += n;
      continue;
    }
    std::vector<double> deviation;
    if (complete.columns[j].kind == data::ColumnKind::Numeric) {
      std::vector<double> values(n);
      for (std::size_t i = 0; i < n; ++i) values[i] = std::get<double>(complete.cells[i][j]);
      std::vector<double> sorted = values;
      std::sort(sorted.begin(), sorted.end());
      const double median = n % 2 == 1 ? sorted[n / 2] : 0.5 * (sorted[n / 2 - 1] + sorted[n / 2]);
      deviation.resize(n);
      for (std::size_t i = 0; i < n; ++i) deviation[i] = std::abs(values[i] - median);
      deviation = standardize(std::move(deviation));
    }
    const bool flat = deviation.empty() ||
                      std::all_of(deviation.begin(), deviation.end(), [](double v) { return v == 0.0; });
    if (flat) {
      spdlog::info("MNAR: column '{}' is {}; falling back to MCAR", complete.columns[j].name,
                   deviation.empty() ? "categorical" : "constant");
      mask_column(result, j, std::vector<double>(n, spec.rate), rng);
      continue;
    }
    mask_column(result, j, logistic_probabilities(deviation, spec.steepness, spec.rate), rng);
  }
  return result;
}

InjectionResult inject(const RawDataset& complete, const MissingnessSpec& spec) {
  const numeric::RngStream rng(spec.seed);
  switch (spec.mechanism) {
    case Mechanism::MCAR: return inject_mcar(complete, spec, rng);
    case Mechanism::MAR: return inject_mar(complete, spec, rng);
    case Mechanism::MNAR: return inject_mnar(complete, spec, rng);
  }
  throw ConfigError("unknown mechanism");
}

}  // namespace tcea::missingness
