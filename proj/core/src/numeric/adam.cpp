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

#include "tcea/numeric/adam.hpp"

#include <cmath>

#include "tcea/error.hpp"

namespace tcea::numeric {

void adam_step(Matrix& params, const Matrix& grads, AdamState& state, long t, double lr,
               double weight_decay, const AdamConstants& constants) {
  require_same_shape(params, grads, "adam_step");
  require_same_shape(params, state.first_moment, "adam_step first moment");
  require_same_shape(params, state.second_moment, "adam_step second moment");
  if (t < 1) throw ConfigError("adam_step: step index must be >= 1");
  if (!grads.allFinite()) throw TrainingDivergence("adam_step: non-finite gradient");

  const double b1 = constants.beta1;
  const double b2 = constants.beta2;
  state.first_moment = b1 * state.first_moment + (1.0 - b1) * grads;
  state.second_moment = b2 * state.second_moment + (1.0 - b2) * grads.cwiseProduct(grads);

  const double correction1 = 1.0 - std::pow(b1, static_cast<double>(t));
  const double correction2 = 1.0 - std::pow(b2, static_cast<double>(t));

  if (weight_decay != 0.0) params -= (lr * weight_decay) * params;
  params.array() -= lr * (state.first_moment.array() / correction1) /
                    ((state.second_moment.array() / correction2).sqrt() + constants.epsilon);
}

}  // namespace tcea::numeric
