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

#include <filesystem>
#include <iosfwd>
#include <set>
#include <string>
#include <vector>

#include "tcea/data/raw_dataset.hpp"

namespace tcea::data {

struct CsvOptions {
  // Feature columns in the order they appear in the resulting dataset.
  std::vector<Column> schema;
  std::string label_column;
  std::set<std::string> missing_tokens{"?", "", "NA"};
  bool header = true;
  // Without a header the file holds the schema columns in order with the
  // label at this position (negative counts from the end, -1 = last).
  int label_position = -1;
  // Header columns to skip without error.
  std::vector<std::string> ignore_columns;
  // When non-empty, fixes class id order; other label tokens are errors.
  // When empty, ids follow first appearance.
  std::vector<std::string> class_names;
  char delimiter = ',';
};

// Parses comma-separated records. Cells matching a missing token become
// Missing; rows with a missing label are dropped (and the count logged).
// Throws ParseError (row index) on a ragged row or unparsable number and
// LabelError on an unknown label token.
RawDataset parse_csv(std::istream& in, const CsvOptions& options, std::string name = "dataset");
RawDataset load_csv(const std::filesystem::path& path, const CsvOptions& options);

// Dataset manifest: a KeyValueFile with keys
//   name, path (relative to the manifest), header, label, classes,
//   columns = name:numeric|categorical,..., ignore, missing_tokens
struct DatasetManifest {
  std::string name;
  std::filesystem::path path;
  CsvOptions options;
};

DatasetManifest read_manifest(const std::filesystem::path& manifest_path);
RawDataset load_dataset(const DatasetManifest& manifest);

}  // namespace tcea::data
