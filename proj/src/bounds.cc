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

#include "fogfl/bounds.hpp"

#include <algorithm>
#include <numeric>

#include "fogfl/common.hpp"

namespace fogfl {

void BoundInputs::validate() const {
  if (!(strong_convexity > 0)) throw DomainError("bound: strong convexity must be positive");
  if (smoothness < strong_convexity)
    throw DomainError("bound: smoothness below strong convexity");
  if (users < 1 || local_iters < 1) throw DomainError("bound: bad user or iteration count");
  if (delta_sq < 0 || q0 < 0) throw DomainError("bound: negative input");
  for (double v : gamma_sq)
    if (v < 0) throw DomainError("bound: negative variance bound");
  for (double v : heterogeneity)
    if (v < 0) throw DomainError("bound: negative heterogeneity");
}

double bound_psi(const BoundInputs& in) {
  in.validate();
  return std::max(64.0 * in.smoothness / in.strong_convexity, 4.0 * in.local_iters);
}

double bound_theta(const BoundInputs& in) {
  in.validate();
  const double l = in.local_iters;
  const double j = in.users;
  const double gamma = std::accumulate(in.gamma_sq.begin(), in.gamma_sq.end(), 0.0);
  const double eps = std::accumulate(in.heterogeneity.begin(), in.heterogeneity.end(), 0.0);
  return 2.0 * l * l * in.delta_sq +
         (2.0 + in.strong_convexity / (4.0 * in.smoothness)) * (l - 1) * l * in.delta_sq +
         l * gamma / (j * j) + 6.0 * in.smoothness * l * eps / j;
}

double theorem1_bound(const BoundInputs& in, int rounds) {
  if (rounds < 0) throw DomainError("theorem1_bound: negative round count");
  const double psi = bound_psi(in);
  const double theta = bound_theta(in);
  const double lam = in.strong_convexity;
  const double g = rounds;
  const double num = std::max(psi * psi * in.q0, 256.0 / (lam * lam) * g * theta);
  return num / ((g + psi) * (g + psi));
}

double lemma2_divergence_bound(int local_iters, double eta, double delta_sq) {
  const double l = local_iters;
  return (l - 1) * l * eta * eta * delta_sq;
}

}  // namespace fogfl
