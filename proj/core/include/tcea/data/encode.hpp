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
#include <span>
#include <string>
#include <vector>

#include "tcea/data/raw_dataset.hpp"
#include "tcea/numeric/matrix.hpp"

namespace tcea::data {

// How raw columns map onto encoded numeric columns. Numeric columns take one
// slot; categorical columns take one indicator per category observed in the
// fitting rows plus a trailing "unseen" indicator.
struct EncodingMap {
  struct Group {
    std::size_t source_column = 0;
    ColumnKind kind = ColumnKind::Numeric;
    std::size_t offset = 0;
    std::vector<std::string> categories;

    std::size_t width() const noexcept {
      return kind == ColumnKind::Numeric ? 1 : categories.size() + 1;
    }
  };

  std::vector<Group> groups;
  std::vector<std::string> names;

  std::size_t width() const noexcept { return names.size(); }
};

// Encoded rows. `missing` is 1 where the source cell was MISSING (for a
// categorical column, across its whole indicator group); `values` holds 0
// at those positions.
struct EncodedDesign {
  numeric::Matrix values;
  numeric::Matrix missing;
  std::vector<int> labels;

  std::size_t rows() const noexcept { return labels.size(); }
};

// Categories are collected from `rows` in first-appearance order.
EncodingMap fit_encoding(const RawDataset& raw, std::span<const std::size_t> rows);
EncodingMap fit_encoding(const RawDataset& raw);

EncodedDesign encode_features(const RawDataset& raw, const EncodingMap& map,
                              std::span<const std::size_t> rows);
// Fits on all rows and encodes all rows.
EncodedDesign encode_features(const RawDataset& raw);

}  // namespace tcea::data
