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

#include "tcea/data/csv.hpp"

#include <spdlog/spdlog.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <map>
#include <optional>

#include "tcea/data/key_value.hpp"
#include "tcea/error.hpp"

namespace tcea::data {

namespace {

std::vector<std::string> split_record(const std::string& line, char delimiter) {
  std::vector<std::string> fields;
  std::string field;
  bool quoted = false;
  for (std::size_t i = 0; i < line.size(); ++i) {
    const char ch = line[i];
    if (quoted) {
      if (ch == '"' && i + 1 < line.size() && line[i + 1] == '"') {
        field.push_back('"');
        ++i;
      } else if (ch == '"') {
        quoted = false;
      } else {
        field.push_back(ch);
      }
    } else if (ch == '"') {
      quoted = true;
    } else if (ch == delimiter) {
      fields.push_back(trim(field));
      field.clear();
    } else if (ch != '\r') {
      field.push_back(ch);
    }
  }
  fields.push_back(trim(field));
  return fields;
}

std::optional<double> parse_number(const std::string& token) {
  double value = 0.0;
  const char* first = token.data();
  const char* last = token.data() + token.size();
  if (first != last && *first == '+') ++first;
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr != last || !std::isfinite(value)) return std::nullopt;
  return value;
}

}  // namespace

RawDataset parse_csv(std::istream& in, const CsvOptions& options, std::string name) {
  if (options.label_column.empty()) throw ConfigError("csv: label column not set");
  const std::size_t d = options.schema.size();

  // file column index for each schema column, and for the label
  std::vector<std::size_t> feature_pos(d);
  std::size_t label_pos = 0;
  std::size_t expected_fields = 0;

  std::string line;
  std::size_t row_index = 0;
  if (options.header) {
    bool got_header = false;
    while (std::getline(in, line)) {
      if (!trim(line).empty()) {
        got_header = true;
        break;
      }
    }
    if (!got_header) throw ParseError("csv: missing header", 0);
    const auto header = split_record(line, options.delimiter);
    expected_fields = header.size();
    std::map<std::string, std::size_t> where;
    for (std::size_t i = 0; i < header.size(); ++i) where[header[i]] = i;
    for (std::size_t j = 0; j < d; ++j) {
      auto it = where.find(options.schema[j].name);
      if (it == where.end()) {
        throw ConfigError("csv: schema column '" + options.schema[j].name + "' not in header");
      }
      feature_pos[j] = it->second;
    }
    auto it = where.find(options.label_column);
    if (it == where.end()) {
      throw ConfigError("csv: label column '" + options.label_column + "' not in header");
    }
    label_pos = it->second;
    for (const auto& column : header) {
      const bool known =
          column == options.label_column ||
          std::any_of(options.schema.begin(), options.schema.end(),
                      [&](const Column& c) { return c.name == column; }) ||
          std::find(options.ignore_columns.begin(), options.ignore_columns.end(), column) !=
              options.ignore_columns.end();
      if (!known) throw ConfigError("csv: header column '" + column + "' not in schema");
    }
  } else {
    expected_fields = d + 1;
    const int pos = options.label_position;
    label_pos = pos < 0 ? static_cast<std::size_t>(static_cast<int>(expected_fields) + pos)
                        : static_cast<std::size_t>(pos);
    if (label_pos >= expected_fields) throw ConfigError("csv: label position out of range");
    for (std::size_t j = 0, col = 0; j < d; ++col) {
      if (col == label_pos) continue;
      feature_pos[j++] = col;
    }
  }

  RawDataset raw;
  raw.name = std::move(name);
  raw.columns = options.schema;
  raw.class_names = options.class_names;
  const bool fixed_classes = !options.class_names.empty();

  std::size_t dropped = 0;
  while (std::getline(in, line)) {
    if (trim(line).empty()) continue;
    const std::size_t this_row = row_index++;
    const auto fields = split_record(line, options.delimiter);
    if (fields.size() != expected_fields) {
      throw ParseError("csv: row " + std::to_string(this_row) + " has " +
                           std::to_string(fields.size()) + " fields, expected " +
                           std::to_string(expected_fields),
                       this_row);
    }
    const std::string& label_token = fields[label_pos];
    if (options.missing_tokens.count(label_token) != 0) {
      ++dropped;
      continue;
    }
    auto found = std::find(raw.class_names.begin(), raw.class_names.end(), label_token);
    int label = 0;
    if (found == raw.class_names.end()) {
      if (fixed_classes) {
        throw LabelError("csv: unknown label '" + label_token + "' at row " +
                         std::to_string(this_row));
      }
      raw.class_names.push_back(label_token);
      label = static_cast<int>(raw.class_names.size() - 1);
    } else {
      label = static_cast<int>(found - raw.class_names.begin());
    }

    std::vector<Cell> row;
    row.reserve(d);
    for (std::size_t j = 0; j < d; ++j) {
      const std::string& token = fields[feature_pos[j]];
      if (options.missing_tokens.count(token) != 0) {
        row.emplace_back(Missing{});
      } else if (options.schema[j].kind == ColumnKind::Numeric) {
        auto value = parse_number(token);
        if (!value) {
          throw ParseError("csv: row " + std::to_string(this_row) + ", column '" +
                               options.schema[j].name + "': not a number: '" + token + "'",
                           this_row);
        }
        row.emplace_back(*value);
      } else {
        row.emplace_back(token);
      }
    }
    raw.cells.push_back(std::move(row));
    raw.labels.push_back(label);
  }
  if (dropped > 0) {
    spdlog::warn("{}: dropped {} rows with a missing label", raw.name, dropped);
  }
  raw.validate();
  return raw;
}

RawDataset load_csv(const std::filesystem::path& path, const CsvOptions& options) {
  std::ifstream in(path);
  if (!in) throw IoError("cannot open " + path.string());
  return parse_csv(in, options, path.stem().string());
}

DatasetManifest read_manifest(const std::filesystem::path& manifest_path) {
  const KeyValueFile kv = KeyValueFile::read(manifest_path);
  DatasetManifest manifest;
  manifest.name = kv.get_or("name", manifest_path.parent_path().filename().string());
  std::filesystem::path data_path = kv.require("path");
  if (data_path.is_relative()) data_path = manifest_path.parent_path() / data_path;
  manifest.path = data_path;

  CsvOptions& opt = manifest.options;
  opt.header = kv.get_bool("header", true);
  opt.label_column = kv.require("label");
  opt.label_position = static_cast<int>(kv.get_long("label_position", -1));
  if (auto classes = kv.get("classes")) opt.class_names = split_list(*classes);
  if (auto ignore = kv.get("ignore")) opt.ignore_columns = split_list(*ignore);
  if (auto tokens = kv.get("missing_tokens")) {
    auto list = split_list(*tokens);
    opt.missing_tokens = std::set<std::string>(list.begin(), list.end());
  }
  for (const auto& spec : split_list(kv.require("columns"))) {
    const auto colon = spec.rfind(':');
    Column column;
    if (colon == std::string::npos) {
      column.name = spec;
    } else {
      column.name = trim(spec.substr(0, colon));
      const std::string kind = trim(spec.substr(colon + 1));
      if (kind == "numeric" || kind == "num") {
        column.kind = ColumnKind::Numeric;
      } else if (kind == "categorical" || kind == "cat") {
        column.kind = ColumnKind::Categorical;
      } else {
        throw ConfigError("manifest: unknown column kind '" + kind + "' for " + column.name);
      }
    }
    opt.schema.push_back(std::move(column));
  }
  return manifest;
}

RawDataset load_dataset(const DatasetManifest& manifest) {
  RawDataset raw = load_csv(manifest.path, manifest.options);
  raw.name = manifest.name;
  return raw;
}

}  // namespace tcea::data
