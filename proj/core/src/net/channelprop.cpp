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

#include "tcea/net/channelprop.hpp"

#include <string>

#include "tcea/error.hpp"

namespace tcea::net {

void ThreeChannelState::validate() const {
  numeric::require_same_shape(values, missingness, "three-channel state (missingness)");
  numeric::require_same_shape(values, confidence, "three-channel state (confidence)");
}

Matrix routing_matrix(const Matrix& weights, double epsilon) {
  if (!(epsilon > 0.0)) throw ConfigError("channelprop epsilon must be positive");
  Matrix routing = (weights.array().abs() + epsilon).matrix();
  Eigen::VectorXd sums = routing.rowwise().sum();
  routing.array().colwise() /= sums.array();
  return routing;
}

PropagatedChannels channelprop(const Matrix& weights, const Matrix& missingness,
                               const Matrix& confidence, double epsilon) {
  numeric::require_same_shape(missingness, confidence, "channelprop inputs");
  if (missingness.cols() != weights.cols()) {
    throw DimensionError("channelprop: state width " + std::to_string(missingness.cols()) +
                         " does not match weight input width " + std::to_string(weights.cols()));
  }
  const Matrix routing = routing_matrix(weights, epsilon);
  PropagatedChannels out;
  out.confidence = (confidence * routing.transpose()).cwiseMax(0.0).cwiseMin(1.0);
  const Matrix observed =
      ((1.0 - missingness.array()).matrix() * routing.transpose()).cwiseMax(0.0).cwiseMin(1.0);
  out.missingness = (1.0 - observed.array()).matrix();
  return out;
}

PropagatedChannels channelprop(const Matrix& weights, const ThreeChannelState& state,
                               double epsilon) {
  return channelprop(weights, state.missingness, state.confidence, epsilon);
}

}  // namespace tcea::net
