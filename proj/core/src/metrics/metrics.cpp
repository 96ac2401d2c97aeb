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

#include "tcea/metrics/metrics.hpp"

#include <algorithm>
#include <memory>
#include <numeric>

#include <spdlog/spdlog.h>

#include "tcea/error.hpp"

namespace tcea::metrics {

ConfusionCounts::ConfusionCounts(std::size_t classes)
    : classes_(classes), counts_(classes * classes, 0) {
  if (classes < 2) throw MetricError("confusion matrix needs at least two classes");
}

std::uint64_t ConfusionCounts::at(std::size_t truth, std::size_t predicted) const {
  if (truth >= classes_ || predicted >= classes_) throw LabelError("confusion index out of range");
  return counts_[truth * classes_ + predicted];
}

void ConfusionCounts::add(std::size_t truth, std::size_t predicted, std::uint64_t count) {
  if (truth >= classes_ || predicted >= classes_) throw LabelError("confusion index out of range");
  counts_[truth * classes_ + predicted] += count;
}

std::uint64_t ConfusionCounts::total() const noexcept {
  return std::accumulate(counts_.begin(), counts_.end(), std::uint64_t{0});
}

ConfusionCounts confusion(std::span<const int> y_true, std::span<const int> y_pred,
                          std::size_t classes) {
  if (y_true.size() != y_pred.size()) {
    throw DimensionError("confusion: y_true and y_pred differ in length");
  }
  ConfusionCounts cm(classes);
  const auto k = static_cast<int>(classes);
  for (std::size_t i = 0; i < y_true.size(); ++i) {
    if (y_true[i] < 0 || y_true[i] >= k || y_pred[i] < 0 || y_pred[i] >= k) {
      throw LabelError("confusion: label out of range at index " + std::to_string(i));
    }
    cm.add(static_cast<std::size_t>(y_true[i]), static_cast<std::size_t>(y_pred[i]));
  }
  return cm;
}

namespace {

double ratio(double num, double den) { return den > 0.0 ? num / den : 0.0; }

ScalarMetrics one_vs_rest(const ConfusionCounts& cm, std::size_t positive) {
  double tp = 0.0;
  double fp = 0.0;
  double fn = 0.0;
  double tn = 0.0;
  for (std::size_t i = 0; i < cm.classes(); ++i) {
    for (std::size_t j = 0; j < cm.classes(); ++j) {
      const auto v = static_cast<double>(cm.at(i, j));
      if (i == positive && j == positive) tp += v;
      else if (i == positive) fn += v;
      else if (j == positive) fp += v;
      else tn += v;
    }
  }
  ScalarMetrics s;
  s.precision = ratio(tp, tp + fp);
  s.recall = ratio(tp, tp + fn);
  s.specificity = ratio(tn, tn + fp);
  s.f1 = ratio(2.0 * s.precision * s.recall, s.precision + s.recall);
  return s;
}

}  // namespace

ScalarMetrics scalar_metrics(const ConfusionCounts& cm) {
  const auto total = static_cast<double>(cm.total());
  if (total == 0.0) throw MetricError("scalar_metrics: empty confusion matrix");
  double hits = 0.0;
  for (std::size_t i = 0; i < cm.classes(); ++i) hits += static_cast<double>(cm.at(i, i));

  ScalarMetrics out;
  if (cm.classes() == 2) {
    out = one_vs_rest(cm, 1);
  } else {
    for (std::size_t k = 0; k < cm.classes(); ++k) {
      const ScalarMetrics s = one_vs_rest(cm, k);
      out.precision += s.precision;
      out.recall += s.recall;
      out.specificity += s.specificity;
      out.f1 += s.f1;
    }
    const auto k = static_cast<double>(cm.classes());
    out.precision /= k;
    out.recall /= k;
    out.specificity /= k;
    out.f1 /= k;
  }
  out.accuracy = hits / total;
  return out;
}

double binary_auc(std::span<const double> scores, std::span<const bool> positive) {
  if (scores.size() != positive.size()) throw DimensionError("binary_auc: length mismatch");
  const std::size_t n = scores.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return scores[a] < scores[b]; });
  double positive_rank_sum = 0.0;
  double n_pos = 0.0;
  for (std::size_t lo = 0; lo < n;) {
    std::size_t hi = lo + 1;
    while (hi < n && scores[order[hi]] == scores[order[lo]]) ++hi;
    const double shared = 0.5 * static_cast<double>(lo + 1 + hi);
    for (std::size_t t = lo; t < hi; ++t) {
      if (positive[order[t]]) {
        positive_rank_sum += shared;
        n_pos += 1.0;
      }
    }
    lo = hi;
  }
  const double n_neg = static_cast<double>(n) - n_pos;
  if (n_pos == 0.0 || n_neg == 0.0) {
    throw MetricError("binary_auc: both positive and negative samples are required");
  }
  return (positive_rank_sum - n_pos * (n_pos + 1.0) / 2.0) / (n_pos * n_neg);
}

double roc_auc(std::span<const int> y_true, const numeric::Matrix& probabilities,
               std::size_t classes) {
  if (static_cast<std::size_t>(probabilities.rows()) != y_true.size() ||
      static_cast<std::size_t>(probabilities.cols()) != classes) {
    throw DimensionError("roc_auc: probability matrix shape does not match labels");
  }
  const std::size_t n = y_true.size();
  std::vector<double> scores(n);
  std::unique_ptr<bool[]> positive(new bool[n]);
  auto auc_for = [&](std::size_t k) {
    for (std::size_t i = 0; i < n; ++i) {
      scores[i] = probabilities(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(k));
      positive[i] = y_true[i] == static_cast<int>(k);
    }
    return binary_auc(scores, std::span<const bool>(positive.get(), n));
  };
  if (classes == 2) return auc_for(1);

  double sum = 0.0;
  std::size_t used = 0;
  for (std::size_t k = 0; k < classes; ++k) {
    const auto present = std::count(y_true.begin(), y_true.end(), static_cast<int>(k));
    if (present == 0 || static_cast<std::size_t>(present) == n) {
      spdlog::debug("roc_auc: class {} excluded from macro average", k);
      continue;
    }
    sum += auc_for(k);
    ++used;
  }
  if (used == 0) throw MetricError("roc_auc: no class has both positives and negatives");
  return sum / static_cast<double>(used);
}

MetricReport evaluate(std::span<const int> y_true, const numeric::Matrix& probabilities,
                      std::size_t classes) {
  std::vector<int> pred(y_true.size());
  for (std::size_t i = 0; i < pred.size(); ++i) {
    Eigen::Index best = 0;
    probabilities.row(static_cast<Eigen::Index>(i)).maxCoeff(&best);
    pred[i] = static_cast<int>(best);
  }
  const ScalarMetrics s = scalar_metrics(confusion(y_true, pred, classes));
  MetricReport report;
  report.accuracy = s.accuracy;
  report.precision = s.precision;
  report.recall = s.recall;
  report.specificity = s.specificity;
  report.f1 = s.f1;
  report.auc = roc_auc(y_true, probabilities, classes);
  report.averaging = classes == 2 ? Averaging::Binary : Averaging::Macro;
  return report;
}

const char* to_string(Averaging averaging) noexcept {
  return averaging == Averaging::Binary ? "binary" : "macro";
}

}  // namespace tcea::metrics
