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
#include <vector>

#include "tcea/numeric/rng.hpp"

namespace tcea::data {

struct SplitSpec {
  double train_fraction = 0.6;
  double val_fraction = 0.2;
  double test_fraction = 0.2;
  bool stratified = true;
  std::uint64_t seed = 0;

  // Throws ConfigError unless every fraction is positive and they sum to 1
  // within 1e-9.
  void validate() const;
};

struct SplitIndices {
  std::vector<std::size_t> train;
  std::vector<std::size_t> val;
  std::vector<std::size_t> test;
};

// Disjoint, covering, ascending index lists. When stratified, each class is
// shuffled and cut separately so per-class counts are within one instance of
// the requested fractions; a class with fewer than three members is a
// StratificationError.
SplitIndices stratified_split(std::span<const int> labels, std::size_t class_count,
                              const SplitSpec& spec, numeric::RngStream rng);

}  // namespace tcea::data
