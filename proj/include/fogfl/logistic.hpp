/*
 * Copyright 2026 The fogfl Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *      http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef FOGFL_LOGISTIC_HPP_
#define FOGFL_LOGISTIC_HPP_

#include <span>
#include <vector>

#include "fogfl/dataset.hpp"

namespace fogfl {

// Multinomial logistic regression with an l2 penalty (reg/2)*||W||^2.
// W has one row per feature (bias row last) and one column per class.

// Mean cross-entropy over the given rows of x plus the penalty. An empty row
// list means every row.
double logistic_loss(const Matrix& w, const Matrix& x, std::span<const int> y,
                     double reg);

// Gradient of logistic_loss, written into `grad`.
void logistic_gradient(const Matrix& w, const Matrix& x, std::span<const int> y,
                       double reg, Matrix& grad);

double accuracy(const Matrix& w, const Matrix& x, std::span<const int> y);

// Smoothness constant of the per-sample loss: reg + max ||x||^2 / 2.
double smoothness_bound(const Matrix& x, double reg);

}  // namespace fogfl

#endif  // FOGFL_LOGISTIC_HPP_
