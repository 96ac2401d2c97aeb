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
#include <string>
#include <string_view>
#include <vector>

#include "tcea/data/raw_dataset.hpp"
#include "tcea/numeric/rng.hpp"

namespace tcea::missingness {

enum class Mechanism { MCAR, MAR, MNAR };

Mechanism parse_mechanism(std::string_view name);
const char* to_string(Mechanism mechanism) noexcept;

struct MissingnessSpec {
  Mechanism mechanism = Mechanism::MCAR;
  // Target fraction of eligible cells to mask. 0 leaves the data unchanged.
  double rate = 0.2;
  std::uint64_t seed = 0;
  // Share of features used as never-masked drivers under MAR.
  double mar_pivot_fraction = 0.3;
  // Logistic slope applied to the standardized driver score (MAR, MNAR).
  double steepness = 2.0;

  // Throws ConfigError unless rate ∈ [0, 1) and the pivot fraction ∈ (0, 1).
  void validate() const;
};

inline constexpr std::size_t kNoPivot = static_cast<std::size_t>(-1);

struct InjectionResult {
  data::RawDataset data;
  // Feature columns eligible for masking (all of them except MAR pivots).
  std::vector<std::size_t> targets;
  // MAR: the pivot column driving each column's mask; kNoPivot for pivots
  // themselves and for the other mechanisms.
  std::vector<std::size_t> driver;
  std::size_t masked_cells = 0;
  std::size_t eligible_cells = 0;

  double realized_rate() const noexcept {
    return eligible_cells == 0 ? 0.0
                               : static_cast<double>(masked_cells) /
                                     static_cast<double>(eligible_cells);
  }
};

// Each cell masked independently with probability `rate`.
InjectionResult inject_mcar(const data::RawDataset& complete, const MissingnessSpec& spec,
                            numeric::RngStream rng);

// Masks target features with a logistic function of a rank-standardized pivot
// feature; pivots are never masked. Requires at least two features.
InjectionResult inject_mar(const data::RawDataset& complete, const MissingnessSpec& spec,
                           numeric::RngStream rng);

// Masks each cell with a logistic function of its own standardized absolute
// deviation from the column median, so extreme values go missing more often.
// Constant and categorical columns fall back to MCAR.
InjectionResult inject_mnar(const data::RawDataset& complete, const MissingnessSpec& spec,
                            numeric::RngStream rng);

// Dispatches on spec.mechanism with RngStream(spec.seed).
InjectionResult inject(const data::RawDataset& complete, const MissingnessSpec& spec);

// Intercept a with mean_i sigmoid(a + scores_i) == rate, by bisection.
double calibrate_intercept(const std::vector<double>& scores, double rate);

}  // namespace tcea::missingness
