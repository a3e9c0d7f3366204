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

#ifndef FOGFL_BOUNDS_HPP_
#define FOGFL_BOUNDS_HPP_

#include <vector>

namespace fogfl {

// Constants of the convergence bound for FedFog with the diminishing rate
// 16 / (lambda (g + 1 + psi)).
struct BoundInputs {
  double strong_convexity = 0;     // lambda
  double smoothness = 0;           // mu
  std::vector<double> gamma_sq;    // per-UE mini-batch variance bounds
  double delta_sq = 0;             // bound on E||grad||^2
  std::vector<double> heterogeneity;  // per-UE epsilon
  double q0 = 0;                   // E||w0 - w*||^2
  int local_iters = 1;
  int users = 1;

  void validate() const;
};

double bound_psi(const BoundInputs& in);
double bound_theta(const BoundInputs& in);

// Upper bound on E||w^G - w*||^2.
double theorem1_bound(const BoundInputs& in, int rounds);

// Upper bound on the mean squared distance between the local iterates and
// their average within one round.
double lemma2_divergence_bound(int local_iters, double eta, double delta_sq);

}  // namespace fogfl

#endif  // FOGFL_BOUNDS_HPP_
