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

#include "tcea/data/raw_dataset.hpp"

#include <algorithm>

#include "tcea/error.hpp"

namespace tcea::data {

std::size_t RawDataset::missing_count() const noexcept {
  std::size_t count = 0;
  for (const auto& row : cells) {
    count += static_cast<std::size_t>(std::count_if(row.begin(), row.end(), is_missing));
  }
  return count;
}

void RawDataset::validate() const {
  if (labels.size() != cells.size()) {
    throw Error("dataset " + name + ": " + std::to_string(cells.size()) + " rows but " +
                std::to_string(labels.size()) + " labels");
  }
  for (std::size_t i = 0; i < cells.size(); ++i) {
    if (cells[i].size() != columns.size()) {
      throw Error("dataset " + name + ": row " + std::to_string(i) + " has " +
                  std::to_string(cells[i].size()) + " cells, expected " +
                  std::to_string(columns.size()));
    }
    for (std::size_t j = 0; j < columns.size(); ++j) {
      const Cell& cell = cells[i][j];
      if (is_missing(cell)) continue;
      const bool numeric = std::holds_alternative<double>(cell);
      if (numeric != (columns[j].kind == ColumnKind::Numeric)) {
        throw Error("dataset " + name + ": cell (" + std::to_string(i) + ", " +
                    std::to_string(j) + ") does not match column kind");
      }
    }
    if (labels[i] < 0 || static_cast<std::size_t>(labels[i]) >= class_names.size()) {
      throw LabelError("dataset " + name + ": label out of range at row " + std::to_string(i));
    }
  }
}

const char* to_string(ColumnKind kind) noexcept {
  return kind == ColumnKind::Numeric ? "numeric" : "categorical";
}

}  // namespace tcea::data
