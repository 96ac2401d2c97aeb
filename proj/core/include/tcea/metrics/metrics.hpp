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
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "tcea/numeric/matrix.hpp"

namespace tcea::metrics {

// K×K counts, entry (i, j) = true class i predicted as class j.
class ConfusionCounts {
 public:
  explicit ConfusionCounts(std::size_t classes = 2);

  std::size_t classes() const noexcept { return classes_; }
  std::uint64_t at(std::size_t truth, std::size_t predicted) const;
  void add(std::size_t truth, std::size_t predicted, std::uint64_t count = 1);
  std::uint64_t total() const noexcept;

  bool operator==(const ConfusionCounts&) const = default;

 private:
  std::size_t classes_;
  std::vector<std::uint64_t> counts_;
};

enum class Averaging { Binary, Macro };

struct ScalarMetrics {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double specificity = 0.0;
  double f1 = 0.0;
};

struct MetricReport {
  double accuracy = 0.0;
  double precision = 0.0;
  double recall = 0.0;
  double specificity = 0.0;
  double f1 = 0.0;
  double auc = 0.0;
  Averaging averaging = Averaging::Binary;
};

// Throws LabelError on a label outside 0..K-1 and DimensionError on a length
// mismatch.
ConfusionCounts confusion(std::span<const int> y_true, std::span<const int> y_pred,
                          std::size_t classes);

// K = 2 treats class 1 as positive; K > 2 macro-averages one-vs-rest values.
// Zero denominators give 0. Throws MetricError on an empty matrix.
ScalarMetrics scalar_metrics(const ConfusionCounts& cm);

// Rank-based AUC of `scores` for the positive set, ties counted half.
// Throws MetricError unless both groups are non-empty.
double binary_auc(std::span<const double> scores, std::span<const bool> positive);

// Binary: AUC of column 1. Multi-class: macro one-vs-rest over classes present
// in y_true. Throws MetricError for a binary task with a single class present.
double roc_auc(std::span<const int> y_true, const numeric::Matrix& probabilities,
               std::size_t classes);

MetricReport evaluate(std::span<const int> y_true, const numeric::Matrix& probabilities,
                      std::size_t classes);

const char* to_string(Averaging averaging) noexcept;

}  // namespace tcea::metrics
