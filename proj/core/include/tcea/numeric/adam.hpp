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

namespace tcea::numeric {

struct AdamState {
  Matrix first_moment;
  Matrix second_moment;

  static AdamState zeros_like(const Matrix& params) {
    return {Matrix::Zero(params.rows(), params.cols()), Matrix::Zero(params.rows(), params.cols())};
  }
};

struct AdamConstants {
  double beta1 = 0.9;
  double beta2 = 0.999;
  double epsilon = 1e-8;
};

// One Adam update with bias correction at step `t` (1-based). Weight decay is
// decoupled: params ← params − lr·wd·params, then the Adam delta.
// Throws TrainingDivergence on a non-finite gradient, DimensionError on a
// shape mismatch.
void adam_step(Matrix& params, const Matrix& grads, AdamState& state, long t, double lr,
               double weight_decay, const AdamConstants& constants = {});

}  // namespace tcea::numeric
