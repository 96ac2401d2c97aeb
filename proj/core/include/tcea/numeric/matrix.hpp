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

#include <Eigen/Dense>
#include <string_view>

namespace tcea::numeric {

// Dense row-major matrix of 64-bit reals. Element storage is contiguous and
// row-major, so `data()` can be viewed as rows × cols values.
using Matrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;
using RowVector = Eigen::Matrix<double, 1, Eigen::Dynamic>;

// Throws NumericError naming `what` if any entry is NaN or infinite.
void require_finite(const Matrix& m, std::string_view what);

// Throws DimensionError unless `a` and `b` have the same shape.
void require_same_shape(const Matrix& a, const Matrix& b, std::string_view what);

// a · b. Throws DimensionError when a.cols != b.rows and NumericError when
// the product is not finite.
Matrix matmul(const Matrix& a, const Matrix& b);

// a · bᵀ, the layout used by linear layers (weights stored d_out × d_in).
Matrix matmul_transposed(const Matrix& a, const Matrix& b);

Matrix from_rows(std::initializer_list<std::initializer_list<double>> rows);

}  // namespace tcea::numeric
