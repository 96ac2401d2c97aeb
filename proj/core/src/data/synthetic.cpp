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

#include "tcea/data/synthetic.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "tcea/error.hpp"
#include "tcea/numeric/rng.hpp"

namespace tcea::data {

RawDataset make_informative_mask_dataset(std::size_t rows, std::size_t features,
                                         std::uint64_t seed) {
  if (features < 3) throw ConfigError("synthetic dataset needs at least three features");
  if (rows < 10) throw ConfigError("synthetic dataset needs at least ten rows");
  numeric::RngStream rng(seed);
  numeric::RngStream values = rng.child("values");
  numeric::RngStream noise = rng.child("noise");

  RawDataset raw;
  raw.name = "synthetic-informative-mask";
  for (std::size_t j = 0; j < features; ++j) {
    raw.columns.push_back(Column{"f" + std::to_string(j), ColumnKind::Numeric});
  }
  raw.class_names = {"0", "1"};
  std::vector<double> score(rows);
  raw.cells.assign(rows, std::vector<Cell>(features));
  for (std::size_t i = 0; i < rows; ++i) {
    std::vector<double> x(features);
    for (std::size_t j = 0; j < features; ++j) {
      x[j] = values.normal();
      raw.cells[i][j] = x[j];
    }
    score[i] = std::abs(x[0]) + std::abs(x[1]) + 0.5 * x[2] + 0.3 * noise.normal();
  }
  std::vector<double> sorted = score;
  std::nth_element(sorted.begin(), sorted.begin() + static_cast<long>(rows / 2), sorted.end());
  const double threshold = sorted[rows / 2];
  raw.labels.resize(rows);
  for (std::size_t i = 0; i < rows; ++i) raw.labels[i] = score[i] > threshold ? 1 : 0;
  raw.validate();
  return raw;
}

}  // namespace tcea::data
