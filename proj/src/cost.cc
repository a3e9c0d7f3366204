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

#include "fogfl/cost.hpp"

#include <algorithm>
#include <cmath>

#include "fogfl/common.hpp"

namespace fogfl {

double CostLedger::update(double loss, double delay) {
  if (!std::isfinite(loss)) throw NumericError("cost ledger: non-finite loss");
  if (!(delay >= 0)) throw DomainError("cost ledger: negative round delay");
  const double cum = (cum_time_.empty() ? 0.0 : cum_time_.back()) + delay;
  loss_.push_back(loss);
  delay_.push_back(delay);
  cum_time_.push_back(cum);
  const double c = params_.alpha * loss / params_.f0 + (1.0 - params_.alpha) * cum / params_.t0;
  cost_.push_back(c);
  return c;
}

double CostLedger::recompute(int g) const {
  double cum = 0;
  for (int k = 0; k <= g; ++k) cum += delay_.at(k);
  return params_.alpha * loss_.at(g) / params_.f0 + (1.0 - params_.alpha) * cum / params_.t0;
}

StopDecision stop_check(StopState& s, double c_g, double c_prev, int g,
                        bool allowed) {
  StopDecision d;
  if (s.g_star) {
    d.stop = true;
    d.g_star = *s.g_star;
    return d;
  }
  if (g < 1) {
    s.k = 0;
    return d;
  }
  const bool rose = allowed && c_g - c_prev >= s.eps;
  s.k = rose ? std::min(s.k + 1, s.k_bar) : 0;
  if (rose && s.k >= s.k_bar && g >= s.min_rounds) {
    s.g_star = g - s.k_bar;
    d.stop = true;
    d.g_star = *s.g_star;
  }
  return d;
}

double trailing_mean(std::span<const double> v, int g, int window) {
  if (window < 1) window = 1;
  const int lo = std::max(0, g - window + 1);
  double s = 0;
  for (int k = lo; k <= g; ++k) s += v[k];
  return s / (g - lo + 1);
}

}  // namespace fogfl
