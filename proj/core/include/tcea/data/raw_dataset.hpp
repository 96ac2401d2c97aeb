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
#include <variant>
#include <vector>

namespace tcea::data {

enum class ColumnKind { Numeric, Categorical };

struct Column {
  std::string name;
  ColumnKind kind = ColumnKind::Numeric;
};

struct Missing {
  auto operator<=>(const Missing&) const = default;
};

// A raw table cell: MISSING, a numeric value, or a category token.
using Cell = std::variant<Missing, double, std::string>;

inline bool is_missing(const Cell& cell) { return std::holds_alternative<Missing>(cell); }

// Tabular classification data before encoding. `cells` is row-major with one
// entry per feature column; labels are contiguous ids 0..class_count-1.
struct RawDataset {
  std::string name;
  std::vector<Column> columns;
  std::vector<std::vector<Cell>> cells;
  std::vector<int> labels;
  std::vector<std::string> class_names;

  std::size_t rows() const noexcept { return cells.size(); }
  std::size_t cols() const noexcept { return columns.size(); }
  std::size_t class_count() const noexcept { return class_names.size(); }
  std::size_t missing_count() const noexcept;

  // Throws Error if a row is ragged, a cell kind disagrees with its column,
  // or a label is out of range.
  void validate() const;
};

const char* to_string(ColumnKind kind) noexcept;

}  // namespace tcea::data
