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

#include "tcea/data/raw_dataset.hpp"

namespace tcea::data {

// Complete numeric dataset whose binary label depends on the magnitude of the
// first two features. Extreme-value (MNAR) masking of those features hides
// exactly the values that drive the label, so the mask itself carries label
// information that mean imputation destroys. Needs features >= 3.
RawDataset make_informative_mask_dataset(std::size_t rows, std::size_t features,
                                         std::uint64_t seed);

}  // namespace tcea::data
