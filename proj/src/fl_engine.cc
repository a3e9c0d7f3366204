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

#include "fogfl/fl_engine.hpp"

#include <cmath>
#include <numeric>
#include <string>

#include "fogfl/common.hpp"
#include "fogfl/logistic.hpp"
#include "fogfl/rng.hpp"

namespace fogfl {

LocalUpdate local_round(const Matrix& w, const DataShard& shard,
                        const LocalRoundOptions& opt, std::mt19937_64& rng) {
  const int n = shard.size();
  if (opt.batch_size < 1 || opt.batch_size > n)
    throw DomainError("local_round: batch size " + std::to_string(opt.batch_size) +
                      " outside [1, " + std::to_string(n) + "]");
  if (!(opt.eta > 0)) throw DomainError("local_round: learning rate must be positive");
  if (opt.local_iters < 1) throw DomainError("local_round: need at least one local iteration");

  LocalUpdate out;
  out.owner = shard.owner;
  out.local_loss = logistic_loss(w, shard.x, shard.y, opt.reg);
  out.delta = Matrix::Zero(w.rows(), w.cols());

  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  Matrix xb(opt.batch_size, shard.x.cols());
  std::vector<int> yb(opt.batch_size);
  Matrix cur = w;
  Matrix grad(w.rows(), w.cols());
  if (opt.trajectory) {
    opt.trajectory->clear();
    opt.trajectory->push_back(cur);
  }
  for (int l = 0; l < opt.local_iters; ++l) {
    for (int k = 0; k < opt.batch_size; ++k) {
      const int pick = k + static_cast<int>(below(rng, n - k));
      std::swap(order[k], order[pick]);
      xb.row(k) = shard.x.row(order[k]);
      yb[k] = shard.y[order[k]];
    }
    logistic_gradient(cur, xb, yb, opt.reg, grad);
    if (!grad.allFinite())
      throw NumericError("non-finite gradient at round " + std::to_string(opt.round) +
                         ", UE " + std::to_string(shard.owner) + ", local step " +
                         std::to_string(l));
    out.delta += grad;
    cur.noalias() -= opt.eta * grad;
    if (opt.trajectory) opt.trajectory->push_back(cur);
  }
  if (!std::isfinite(out.local_loss))
    throw NumericError("non-finite local loss at round " + std::to_string(opt.round) +
                       ", UE " + std::to_string(shard.owner));
  return out;
}

FogAggregate fog_aggregate(std::span<const LocalUpdate> updates) {
  if (updates.empty()) throw DomainError("fog_aggregate: no updates");
  FogAggregate out;
  out.delta = Matrix::Zero(updates[0].delta.rows(), updates[0].delta.cols());
  for (const auto& u : updates) {
    if (u.delta.rows() != out.delta.rows() || u.delta.cols() != out.delta.cols())
      throw DomainError("fog_aggregate: shape mismatch");
    out.delta += u.delta;
    out.loss_sum += u.local_loss;
  }
  return out;
}

Matrix global_update(const Matrix& w, std::span<const Matrix> fog_deltas,
                     double eta, int count) {
  if (count < 1) throw DomainError("global_update: participant count must be positive");
  Matrix sum = Matrix::Zero(w.rows(), w.cols());
  for (const auto& d : fog_deltas) {
    if (d.rows() != w.rows() || d.cols() != w.cols())
      throw DomainError("global_update: shape mismatch");
    sum += d;
  }
  Matrix out = w - (eta / count) * sum;
  if (!out.allFinite()) throw NumericError("global_update: non-finite model");
  return out;
}

double global_loss(const Matrix& w, std::span<const DataShard> shards,
                   double reg) {
  if (shards.empty()) throw DomainError("global_loss: no shards");
  double s = 0;
  for (const auto& sh : shards) s += logistic_loss(w, sh.x, sh.y, reg);
  return s / static_cast<double>(shards.size());
}

double LrSchedule::at(int g) const {
  if (mode == Mode::kGeometric) return eta0 / std::pow(decay, g);
  if (!(strong_convexity > 0))
    throw DomainError("lr schedule: theoretical mode needs a positive strong-convexity modulus");
  return 16.0 / (strong_convexity * (g + 1 + psi));
}

Matrix zero_model(int features, int classes) {
  return Matrix::Zero(features + 1, classes);
}

}  // namespace fogfl
