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

#include "tcea/data/encode.hpp"

#include <algorithm>
#include <numeric>

namespace tcea::data {

EncodingMap fit_encoding(const RawDataset& raw, std::span<const std::size_t> rows) {
  EncodingMap map;
  std::size_t offset = 0;
  for (std::size_t j = 0; j < raw.cols(); ++j) {
    EncodingMap::Group group;
    group.source_column = j;
    group.kind = raw.columns[j].kind;
    group.offset = offset;
    const std::string& name = raw.columns[j].name;
    if (group.kind == ColumnKind::Numeric) {
      map.names.push_back(name);
    } else {
      for (std::size_t i : rows) {
        const Cell& cell = raw.cells[i][j];
        if (const auto* token = std::get_if<std::string>(&cell)) {
          if (std::find(group.categories.begin(), group.categories.end(), *token) ==
              group.categories.end()) {
            group.categories.push_back(*token);
          }
        }
      }
      for (const auto& category : group.categories) map.names.push_back(name + "=" + category);
      map.names.push_back(name + "=<unseen>");
    }
    offset += group.width();
    map.groups.push_back(std::move(group));
  }
  return map;
}

EncodingMap fit_encoding(const RawDataset& raw) {
  std::vector<std::size_t> all(raw.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return fit_encoding(raw, all);
}

EncodedDesign encode_features(const RawDataset& raw, const EncodingMap& map,
                              std::span<const std::size_t> rows) {
  const auto n = static_cast<Eigen::Index>(rows.size());
  const auto width = static_cast<Eigen::Index>(map.width());
  EncodedDesign out;
  out.values = numeric::Matrix::Zero(n, width);
  out.missing = numeric::Matrix::Zero(n, width);
  out.labels.reserve(rows.size());
  for (Eigen::Index r = 0; r < n; ++r) {
    const std::size_t i = rows[static_cast<std::size_t>(r)];
    out.labels.push_back(raw.labels[i]);
    for (const auto& group : map.groups) {
      const Cell& cell = raw.cells[i][group.source_column];
      const auto base = static_cast<Eigen::Index>(group.offset);
      const auto w = static_cast<Eigen::Index>(group.width());
      if (is_missing(cell)) {
        out.missing.block(r, base, 1, w).setOnes();
        continue;
      }
      if (group.kind == ColumnKind::Numeric) {
        out.values(r, base) = std::get<double>(cell);
        continue;
      }
      const auto& token = std::get<std::string>(cell);
      auto it = std::find(group.categories.begin(), group.categories.end(), token);
      const auto slot = static_cast<Eigen::Index>(it - group.categories.begin());
      out.values(r, base + slot) = 1.0;  // slot == categories.size() is "unseen"
    }
  }
  return out;
}

EncodedDesign encode_features(const RawDataset& raw) {
  std::vector<std::size_t> all(raw.rows());
  std::iota(all.begin(), all.end(), std::size_t{0});
  return encode_features(raw, fit_encoding(raw, all), all);
}

}  // namespace tcea::data
