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

#include <gtest/gtest.h>

#include <cmath>
#include <numeric>
#include <set>
#include <vector>

#include "fogfl/common.hpp"
#include "fogfl/dataset.hpp"
#include "fogfl/fl_engine.hpp"
#include "fogfl/logistic.hpp"
#include "fogfl/rng.hpp"
#include "oracles.hpp"

namespace fogfl {
namespace {

TrainTest small_data(int features = 12, int train = 400) {
  SyntheticSpec s;
  s.features = features;
  s.classes = 4;
  s.train_samples = train;
  s.test_samples = 80;
  return make_synthetic(s, 7);
}

Matrix random_model(int rows, int cols, std::uint64_t seed) {
  auto rng = make_stream(seed, Stream::kTest);
  Matrix w(rows, cols);
  for (int i = 0; i < rows; ++i)
    for (int j = 0; j < cols; ++j) w(i, j) = 0.3 * normal(rng);
  return w;
}

TEST(Logistic, LossAtZeroIsLogClasses) {
  const auto d = small_data();
  const Matrix w = Matrix::Zero(d.train.x.cols(), 4);
  EXPECT_NEAR(logistic_loss(w, d.train.x, d.train.y, 0.0), std::log(4.0), 1e-12);
  EXPECT_NEAR(logistic_loss(w, d.train.x, d.train.y, 0.5), std::log(4.0), 1e-12);
  SyntheticSpec s;
  s.features = 5;
  s.train_samples = 50;
  s.test_samples = 10;
  const auto ten = make_synthetic(s, 3);
  EXPECT_NEAR(logistic_loss(Matrix::Zero(6, 10), ten.train.x, ten.train.y, 1e-4),
              std::log(10.0), 1e-12);
}

TEST(Logistic, GradientMatchesFiniteDifferences) {
  const auto d = small_data();
  const Matrix w = random_model(d.train.x.cols(), 4, 11);
  Matrix g;
  logistic_gradient(w, d.train.x, d.train.y, 1e-3, g);
  auto rng = make_stream(5, Stream::kTest);
  for (int k = 0; k < 40; ++k) {
    const int r = static_cast<int>(below(rng, w.rows()));
    const int c = static_cast<int>(below(rng, w.cols()));
    const double num = oracle::numeric_partial(w, d.train.x, d.train.y, 1e-3, r, c, 1e-5);
    EXPECT_NEAR(g(r, c), num, 1e-5 * std::max(1.0, std::abs(num)));
  }
}

TEST(Logistic, SmoothnessBound) {
  Matrix x(2, 3);
  x << 1, 2, 1, 0, 3, 1;
  EXPECT_NEAR(smoothness_bound(x, 0.1), 0.1 + 0.5 * 10.0, 1e-15);
}

TEST(Dataset, SyntheticShapesAndLabels) {
  const auto d = small_data(9, 100);
  EXPECT_EQ(d.train.size(), 100);
  EXPECT_EQ(d.train.features(), 9);
  EXPECT_EQ(d.train.x.cols(), 10);
  for (int r = 0; r < d.train.size(); ++r) EXPECT_EQ(d.train.x(r, 9), 1.0);
  std::vector<int> count(4, 0);
  for (int v : d.train.y) ++count[v];
  for (int c : count) EXPECT_EQ(c, 25);
}

TEST(Dataset, SyntheticIsDeterministic) {
  const auto a = small_data();
  const auto b = small_data();
  EXPECT_TRUE(a.train.x == b.train.x);
  EXPECT_EQ(a.train.y, b.train.y);
}

TEST(Partition, OneClassShardsAreDisjointAndPure) {
  const auto d = small_data(6, 400);
  const auto shards = partition(d.train, 10, PartitionMode::kOneClass, 3);
  ASSERT_EQ(shards.size(), 10u);
  std::set<int> seen;
  const int per = shards[0].size();
  std::vector<int> owners(4, 0);
  for (const auto& s : shards) {
    EXPECT_EQ(s.size(), per);
    EXPECT_EQ(std::set<int>(s.y.begin(), s.y.end()).size(), 1u);
    ++owners[s.y[0]];
    for (int r : s.source_rows) EXPECT_TRUE(seen.insert(r).second);
  }
  // Ten shards over four labels: each label owns two or three shards.
  for (int o : owners) EXPECT_TRUE(o == 2 || o == 3);
}

TEST(Partition, IidShardsCoverEqually) {
  const auto d = small_data(6, 400);
  const auto shards = partition(d.train, 7, PartitionMode::kIid, 3);
  std::set<int> seen;
  for (const auto& s : shards) {
    EXPECT_EQ(s.size(), 400 / 7);
    for (int r : s.source_rows) EXPECT_TRUE(seen.insert(r).second);
  }
  EXPECT_THROW(partition(d.train, 401, PartitionMode::kIid, 3), DomainError);
  EXPECT_THROW(parse_partition_mode("two-class"), ConfigError);
}

TEST(LocalRound, ModelMovesByMinusEtaTimesDelta) {
  const auto d = small_data();
  const auto shards = partition(d.train, 4, PartitionMode::kIid, 1);
  const Matrix w0 = random_model(d.train.x.cols(), 4, 2);
  std::vector<Matrix> traj;
  LocalRoundOptions opt;
  opt.local_iters = 7;
  opt.batch_size = 10;
  opt.eta = 0.05;
  opt.reg = 1e-3;
  opt.trajectory = &traj;
  auto rng = make_stream(1, Stream::kSgd, 0, 0);
  const LocalUpdate u = local_round(w0, shards[0], opt, rng);
  ASSERT_EQ(traj.size(), 8u);
  const Matrix diff = traj.back() - traj.front() + opt.eta * u.delta;
  EXPECT_LE(diff.cwiseAbs().maxCoeff(), 1e-10);
  EXPECT_NEAR(u.local_loss, logistic_loss(w0, shards[0].x, shards[0].y, opt.reg), 1e-14);
}

TEST(LocalRound, RejectsBadOptions) {
  const auto d = small_data();
  const auto shards = partition(d.train, 4, PartitionMode::kIid, 1);
  const Matrix w0 = Matrix::Zero(d.train.x.cols(), 4);
  auto rng = make_stream(1, Stream::kSgd);
  LocalRoundOptions opt;
  opt.batch_size = shards[0].size() + 1;
  EXPECT_THROW(local_round(w0, shards[0], opt, rng), DomainError);
  opt.batch_size = 5;
  opt.eta = 0;
  EXPECT_THROW(local_round(w0, shards[0], opt, rng), DomainError);
}

TEST(LocalRound, NonFiniteModelRaises) {
  const auto d = small_data();
  const auto shards = partition(d.train, 4, PartitionMode::kIid, 1);
  Matrix w0 = Matrix::Zero(d.train.x.cols(), 4);
  w0(0, 0) = NAN;
  LocalRoundOptions opt;
  opt.batch_size = 5;
  auto rng = make_stream(1, Stream::kSgd);
  EXPECT_THROW(local_round(w0, shards[0], opt, rng), NumericError);
}

TEST(MiniBatch, GradientIsUnbiased) {
  // One local step with a fixed model: E[delta] equals the full shard gradient.
  const auto d = small_data(5, 200);
  const auto shards = partition(d.train, 2, PartitionMode::kIid, 1);
  const Matrix w = random_model(d.train.x.cols(), 4, 9);
  Matrix full;
  logistic_gradient(w, shards[0].x, shards[0].y, 1e-3, full);
  LocalRoundOptions opt;
  opt.local_iters = 1;
  opt.batch_size = 8;
  opt.reg = 1e-3;
  const int trials = 4000;
  // Projections on a few fixed directions, compared with their standard errors.
  auto dir_rng = make_stream(3, Stream::kTest);
  std::vector<Matrix> dirs(3, Matrix(w.rows(), w.cols()));
  for (auto& m : dirs)
    for (int i = 0; i < m.size(); ++i) m.data()[i] = normal(dir_rng);
  std::vector<double> sum(3, 0.0), sum_sq(3, 0.0);
  for (int t = 0; t < trials; ++t) {
    auto rng = make_stream(100 + t, Stream::kSgd);
    const Matrix g = local_round(w, shards[0], opt, rng).delta;
    for (int k = 0; k < 3; ++k) {
      const double v = (g.array() * dirs[k].array()).sum();
      sum[k] += v;
      sum_sq[k] += v * v;
    }
  }
  for (int k = 0; k < 3; ++k) {
    const double mean = sum[k] / trials;
    const double var = sum_sq[k] / trials - mean * mean;
    const double se = std::sqrt(var / trials);
    const double truth = (full.array() * dirs[k].array()).sum();
    EXPECT_LE(std::abs(mean - truth), 3.0 * se + 1e-12) << "direction " << k;
  }
}

TEST(Aggregation, FogThenCloudEqualsDirect) {
  const auto d = small_data();
  const auto shards = partition(d.train, 8, PartitionMode::kOneClass, 1);
  const Matrix w0 = random_model(d.train.x.cols(), 4, 4);
  LocalRoundOptions opt;
  opt.local_iters = 3;
  opt.batch_size = 5;
  opt.eta = 0.01;
  std::vector<LocalUpdate> ups;
  for (int j = 0; j < 8; ++j) {
    auto rng = make_stream(1, Stream::kSgd, 0, j);
    ups.push_back(local_round(w0, shards[j], opt, rng));
  }
  const std::vector<std::vector<int>> cells = {{0, 1, 2}, {3}, {4, 5, 6, 7}};
  std::vector<Matrix> fog;
  for (const auto& cell : cells) {
    std::vector<LocalUpdate> part;
    for (int j : cell) part.push_back(ups[j]);
    fog.push_back(fog_aggregate(part).delta);
  }
  const Matrix via_fog = global_update(w0, fog, 0.01, 8);
  Matrix direct_sum = Matrix::Zero(w0.rows(), w0.cols());
  for (const auto& u : ups) direct_sum += u.delta;
  const Matrix direct = w0 - 0.01 * direct_sum / 8.0;
  EXPECT_LE((via_fog - direct).cwiseAbs().maxCoeff(), 1e-12);
  EXPECT_THROW(global_update(w0, fog, 0.01, 0), DomainError);
}

TEST(LrSchedule, GeometricAndTheoretical) {
  LrSchedule g;
  EXPECT_DOUBLE_EQ(g.at(0), 0.001);
  EXPECT_NEAR(g.at(1) / g.at(0), 1.0 / 1.01, 1e-15);
  LrSchedule t;
  t.mode = LrSchedule::Mode::kTheoretical;
  t.strong_convexity = 1.0;
  t.psi = 80;
  EXPECT_NEAR(t.at(0), 16.0 / 81.0, 1e-15);
  t.strong_convexity = 0;
  EXPECT_THROW(t.at(0), DomainError);
}

}  // namespace
}  // namespace fogfl
