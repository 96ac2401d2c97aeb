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

#include "tcea/data/channelize.hpp"

#include <algorithm>
#include <cmath>

#include "tcea/error.hpp"

namespace tcea::data {

namespace {

ChannelSplit apply(const EncodedDesign& design, const ChannelStats& stats, double tau) {
  const auto n = design.values.rows();
  const auto d = design.values.cols();
  ChannelSplit out;
  out.x.resize(n, d);
  out.m = design.missing;
  out.c.resize(n, d);
  out.y = design.labels;
  for (Eigen::Index j = 0; j < d; ++j) {
    const auto jj = static_cast<std::size_t>(j);
    const double imputed_conf = std::max(tau, 1.0 - stats.missing_rates[jj]);
    for (Eigen::Index i = 0; i < n; ++i) {
      const bool missing = design.missing(i, j) != 0.0;
      const double raw = missing ? stats.feature_means[jj] : design.values(i, j);
      out.x(i, j) = (raw - stats.center[jj]) / stats.scale[jj];
      out.c(i, j) = missing ? imputed_conf : 1.0;
    }
  }
  return out;
}

}  // namespace

ChannelizedDataset channelize(const EncodedDesign& train, const EncodedDesign& val,
                              const EncodedDesign& test, std::size_t class_count, double tau) {
  if (!(tau > 0.0 && tau <= 1.0)) throw ConfigError("confidence floor tau must lie in (0, 1]");
  if (train.rows() == 0) throw ConfigError("channelize: empty train split");
  const auto d = train.values.cols();
  if (val.values.cols() != d || test.values.cols() != d) {
    throw DimensionError("channelize: splits have different widths");
  }

  ChannelStats stats;
  const auto n = train.values.rows();
  const auto nd = static_cast<double>(n);
  for (Eigen::Index j = 0; j < d; ++j) {
    double sum = 0.0;
    Eigen::Index observed = 0;
    for (Eigen::Index i = 0; i < n; ++i) {
      if (train.missing(i, j) == 0.0) {
        sum += train.values(i, j);
        ++observed;
      }
    }
    const double mu = observed > 0 ? sum / static_cast<double>(observed) : 0.0;
    stats.feature_means.push_back(mu);
    stats.missing_rates.push_back(static_cast<double>(n - observed) / nd);

    double center = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      center += train.missing(i, j) != 0.0 ? mu : train.values(i, j);
    }
    center /= nd;
    double var = 0.0;
    for (Eigen::Index i = 0; i < n; ++i) {
      const double v = (train.missing(i, j) != 0.0 ? mu : train.values(i, j)) - center;
      var += v * v;
    }
    stats.center.push_back(center);
    stats.scale.push_back(std::max(std::sqrt(var / nd), kStdFloor));
  }

  ChannelizedDataset out;
  out.train = apply(train, stats, tau);
  out.val = apply(val, stats, tau);
  out.test = apply(test, stats, tau);
  out.stats = std::move(stats);
  out.class_count = class_count;
  out.tau = tau;
  return out;
}

ChannelizedDataset build_channels(const RawDataset& raw, const SplitIndices& split, double tau) {
  const EncodingMap map = fit_encoding(raw, split.train);
  ChannelizedDataset out =
      channelize(encode_features(raw, map, split.train), encode_features(raw, map, split.val),
                 encode_features(raw, map, split.test), raw.class_count(), tau);
  out.feature_names = map.names;
  return out;
}

}  // namespace tcea::data
