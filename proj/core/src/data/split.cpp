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

#include "tcea/data/split.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "tcea/error.hpp"

namespace tcea::data {

void SplitSpec::validate() const {
  if (!(train_fraction > 0.0 && val_fraction > 0.0 && test_fraction > 0.0)) {
    throw ConfigError("split fractions must be positive");
  }
  if (std::abs(train_fraction + val_fraction + test_fraction - 1.0) > 1e-9) {
    throw ConfigError("split fractions must sum to 1");
  }
}

namespace {

void cut(std::vector<std::size_t>& members, const SplitSpec& spec, SplitIndices& out) {
  const auto n = members.size();
  auto n_train = static_cast<std::size_t>(std::llround(spec.train_fraction * static_cast<double>(n)));
  auto n_val = static_cast<std::size_t>(std::llround(spec.val_fraction * static_cast<double>(n)));
  n_train = std::clamp<std::size_t>(n_train, 1, n - 2);
  n_val = std::clamp<std::size_t>(n_val, 1, n - 1 - n_train);
  out.train.insert(out.train.end(), members.begin(), members.begin() + n_train);
  out.val.insert(out.val.end(), members.begin() + n_train, members.begin() + n_train + n_val);
  out.test.insert(out.test.end(), members.begin() + n_train + n_val, members.end());
}

}  // namespace

SplitIndices stratified_split(std::span<const int> labels, std::size_t class_count,
                              const SplitSpec& spec, numeric::RngStream rng) {
  spec.validate();
  SplitIndices out;
  if (spec.stratified) {
    std::vector<std::vector<std::size_t>> by_class(class_count);
    for (std::size_t i = 0; i < labels.size(); ++i) {
      const int y = labels[i];
      if (y < 0 || static_cast<std::size_t>(y) >= class_count) {
        throw LabelError("stratified_split: label out of range at row " + std::to_string(i));
      }
      by_class[static_cast<std::size_t>(y)].push_back(i);
    }
    for (std::size_t k = 0; k < class_count; ++k) {
      auto& members = by_class[k];
      if (members.empty()) continue;
      if (members.size() < 3) {
        throw StratificationError("class " + std::to_string(k) + " has " +
                                  std::to_string(members.size()) +
                                  " instances; stratification needs at least 3");
      }
      rng.shuffle(members.begin(), members.end());
      cut(members, spec, out);
    }
  } else {
    if (labels.size() < 3) throw StratificationError("need at least 3 rows to split");
    std::vector<std::size_t> all(labels.size());
    std::iota(all.begin(), all.end(), std::size_t{0});
    rng.shuffle(all.begin(), all.end());
    cut(all, spec, out);
  }
  std::sort(out.train.begin(), out.train.end());
  std::sort(out.val.begin(), out.val.end());
  std::sort(out.test.begin(), out.test.end());
  return out;
}

}  // namespace tcea::data
