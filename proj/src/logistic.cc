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

#include "fogfl/logistic.hpp"

#include <cmath>

#include "fogfl/common.hpp"

namespace fogfl {

namespace {

// Row-wise softmax in place; returns the summed log-partition terms minus the
// true-class logits (the summed cross-entropy).
double softmax_rows(Matrix& z, std::span<const int> y) {
  double ce = 0;
  for (Eigen::Index r = 0; r < z.rows(); ++r) {
    const double m = z.row(r).maxCoeff();
    double s = 0;
    const double zy = z(r, y[r]);
    for (Eigen::Index c = 0; c < z.cols(); ++c) {
      z(r, c) = std::exp(z(r, c) - m);
      s += z(r, c);
    }
    z.row(r) /= s;
    ce += std::log(s) + m - zy;
  }
  return ce;
}

}  // namespace

double logistic_loss(const Matrix& w, const Matrix& x, std::span<const int> y,
                     double reg) {
  if (x.rows() == 0) throw DomainError("logistic_loss: no samples");
  Matrix z = x * w;
  const double ce = softmax_rows(z, y);
  return ce / static_cast<double>(x.rows()) + 0.5 * reg * w.squaredNorm();
}

void logistic_gradient(const Matrix& w, const Matrix& x, std::span<const int> y,
                       double reg, Matrix& grad) {
  if (x.rows() == 0) throw DomainError("logistic_gradient: no samples");
  Matrix z = x * w;
  softmax_rows(z, y);
  for (Eigen::Index r = 0; r < z.rows(); ++r) z(r, y[r]) -= 1.0;
  grad.noalias() = x.transpose() * z;
  grad /= static_cast<double>(x.rows());
  grad += reg * w;
}

double accuracy(const Matrix& w, const Matrix& x, std::span<const int> y) {
  if (x.rows() == 0) return 0;
  const Matrix z = x * w;
  int hits = 0;
  for (Eigen::Index r = 0; r < z.rows(); ++r) {
    Eigen::Index arg;
    z.row(r).maxCoeff(&arg);
    if (arg == y[r]) ++hits;
  }
  return static_cast<double>(hits) / static_cast<double>(x.rows());
}

double smoothness_bound(const Matrix& x, double reg) {
  return reg + 0.5 * x.rowwise().squaredNorm().maxCoeff();
}

}  // namespace fogfl
