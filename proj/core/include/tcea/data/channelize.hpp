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
#include <string>
#include <vector>

#include "tcea/data/encode.hpp"
#include "tcea/data/split.hpp"
#include "tcea/numeric/matrix.hpp"

namespace tcea::data {

inline constexpr double kDefaultConfidenceFloor = 0.1;
inline constexpr double kStdFloor = 1e-8;

// Three aligned channels for one split: standardized imputed values, the
// binary missingness mask, and imputation confidence.
struct ChannelSplit {
  numeric::Matrix x;
  numeric::Matrix m;
  numeric::Matrix c;
  std::vector<int> y;

  std::size_t rows() const noexcept { return y.size(); }
  std::size_t width() const noexcept { return static_cast<std::size_t>(x.cols()); }
};

// Statistics fitted on the train split only.
struct ChannelStats {
  std::vector<double> feature_means;   // mean of observed train cells (0 if none)
  std::vector<double> missing_rates;   // fraction of train cells missing
  std::vector<double> center;          // mean of the imputed train column
  std::vector<double> scale;           // std of the imputed train column, floored
};

struct ChannelizedDataset {
  ChannelSplit train;
  ChannelSplit val;
  ChannelSplit test;
  ChannelStats stats;
  std::vector<std::string> feature_names;
  std::size_t class_count = 0;
  double tau = kDefaultConfidenceFloor;

  std::size_t width() const noexcept { return train.width(); }
};

// Mean-imputes every split with train statistics, records the mask, assigns
// confidence max(tau, 1 - r_j) to missing cells and 1 to observed ones, then
// z-scores values with train mean/std. Throws ConfigError when tau is outside
// (0, 1] or the train split is empty.
ChannelizedDataset channelize(const EncodedDesign& train, const EncodedDesign& val,
                              const EncodedDesign& test, std::size_t class_count,
                              double tau = kDefaultConfidenceFloor);

// Fits the encoding on the train rows, encodes the three splits and
// channelizes them.
ChannelizedDataset build_channels(const RawDataset& raw, const SplitIndices& split,
                                  double tau = kDefaultConfidenceFloor);

}  // namespace tcea::data
