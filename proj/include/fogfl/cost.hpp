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

#ifndef FOGFL_COST_HPP_
#define FOGFL_COST_HPP_

#include <optional>
#include <span>
#include <vector>

namespace fogfl {

struct CostParams {
  double alpha = 0.7;
  double f0 = 0.1;
  double t0 = 100;
};

// Per-round loss, delay and cost history.
class CostLedger {
 public:
  explicit CostLedger(CostParams params) : params_(params) {}

  // Appends round g and returns alpha F/F0 + (1 - alpha) (sum of delays)/T0.
  double update(double loss, double delay);

  // Cost of round g rebuilt from the stored loss and delays.
  double recompute(int g) const;

  int size() const { return static_cast<int>(cost_.size()); }
  const std::vector<double>& loss() const { return loss_; }
  const std::vector<double>& delay() const { return delay_; }
  const std::vector<double>& cum_time() const { return cum_time_; }
  const std::vector<double>& cost() const { return cost_; }
  const CostParams& params() const { return params_; }

 private:
  CostParams params_;
  std::vector<double> loss_, delay_, cum_time_, cost_;
};

struct StopState {
  int k = 0;
  int k_bar = 5;
  int min_rounds = 250;
  double eps = 1e-6;
  std::optional<int> g_star;
};

struct StopDecision {
  bool stop = false;
  int g_star = -1;
};

// Counts consecutive cost increases of at least eps and fires once the
// count reaches k_bar at a round g >= min_rounds, placing the optimum k_bar
// rounds back. `allowed` gates the counter the same way the comparison does
// (the flexible scheme only counts once every UE participates).
StopDecision stop_check(StopState& s, double c_g, double c_prev, int g,
                        bool allowed = true);

// Trailing mean of the last `window` entries ending at index g.
double trailing_mean(std::span<const double> v, int g, int window);

}  // namespace fogfl

#endif  // FOGFL_COST_HPP_
