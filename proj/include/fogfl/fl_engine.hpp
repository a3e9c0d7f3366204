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

#ifndef FOGFL_FL_ENGINE_HPP_
#define FOGFL_FL_ENGINE_HPP_

#include <random>
#include <span>
#include <vector>

#include "fogfl/dataset.hpp"

namespace fogfl {

struct LocalUpdate {
  Matrix delta;          // sum of the L mini-batch gradients
  double local_loss = 0; // loss of the starting model on the whole shard
  int owner = 0;
};

struct LocalRoundOptions {
  int local_iters = 20;
  int batch_size = 20;
  double eta = 0.001;
  double reg = 1e-4;
  int round = 0;
  // When set, receives the L+1 local iterates w_0..w_L.
  std::vector<Matrix>* trajectory = nullptr;
};

LocalUpdate local_round(const Matrix& w, const DataShard& shard,
                        const LocalRoundOptions& opt, std::mt19937_64& rng);

struct FogAggregate {
  Matrix delta;
  double loss_sum = 0;
};

FogAggregate fog_aggregate(std::span<const LocalUpdate> updates);

// w - eta * (sum of fog deltas) / count.
Matrix global_update(const Matrix& w, std::span<const Matrix> fog_deltas,
                     double eta, int count);

// Average of the per-shard losses.
double global_loss(const Matrix& w, std::span<const DataShard> shards,
                   double reg);

struct LrSchedule {
  enum class Mode { kGeometric, kTheoretical };
  Mode mode = Mode::kGeometric;
  double eta0 = 0.001;
  double decay = 1.01;
  double strong_convexity = 0;  // theoretical mode only
  double psi = 0;               // theoretical mode only

  double at(int g) const;
};

Matrix zero_model(int features, int classes);

}  // namespace fogfl

#endif  // FOGFL_FL_ENGINE_HPP_
