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

#include "tcea/numeric/matrix.hpp"

namespace tcea::net {

using numeric::Matrix;

// Values plus the missingness and confidence channels travelling with them,
// all batch × width. Observedness is 1 - missingness.
struct ThreeChannelState {
  Matrix values;
  Matrix missingness;
  Matrix confidence;

  Eigen::Index batch() const noexcept { return values.rows(); }
  Eigen::Index width() const noexcept { return values.cols(); }
  Matrix observedness() const { return (1.0 - missingness.array()).matrix(); }

  // Throws DimensionError when the three matrices disagree in shape.
  void validate() const;
};

struct PropagatedChannels {
  Matrix missingness;
  Matrix confidence;
};

inline constexpr double kChannelPropEpsilon = 1e-8;

// Row-normalized routing matrix (|W| + eps) / rowsum, shape d_out × d_in.
Matrix routing_matrix(const Matrix& weights, double epsilon = kChannelPropEpsilon);

// Carries missingness and confidence through a linear layer with weights
// d_out × d_in:  c_out = c_in Ãᵀ,  o_out = o_in Ãᵀ,  m_out = 1 - o_out, with
// c_out and o_out clipped to [0, 1]. Weights enter through |W| only.
PropagatedChannels channelprop(const Matrix& weights, const Matrix& missingness,
                               const Matrix& confidence, double epsilon = kChannelPropEpsilon);
PropagatedChannels channelprop(const Matrix& weights, const ThreeChannelState& state,
                               double epsilon = kChannelPropEpsilon);

}  // namespace tcea::net
