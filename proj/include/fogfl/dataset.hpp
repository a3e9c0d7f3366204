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

#ifndef FOGFL_DATASET_HPP_
#define FOGFL_DATASET_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include <Eigen/Dense>

namespace fogfl {

using Matrix = Eigen::MatrixXd;

// Samples stored row-wise; the last column is a constant 1 for the bias.
struct Dataset {
  Matrix x;
  std::vector<int> y;
  int classes = 0;

  int size() const { return static_cast<int>(y.size()); }
  int features() const { return static_cast<int>(x.cols()) - 1; }
};

struct DataShard {
  Matrix x;
  std::vector<int> y;
  int owner = 0;
  std::vector<int> source_rows;  // indices into the parent dataset

  int size() const { return static_cast<int>(y.size()); }
};

struct SyntheticSpec {
  int features = 784;
  int classes = 10;
  int train_samples = 20000;
  int test_samples = 2000;
  double noise = 0.35;
  double prototype_density = 0.3;
  // Each sample blends in a random other class with weight U[0, overlap].
  double overlap = 0.55;
};

struct TrainTest {
  Dataset train;
  Dataset test;
};

// Gaussian clusters around sparse random class prototypes in [0, 1]^q.
TrainTest make_synthetic(const SyntheticSpec& spec, std::uint64_t seed);

// Appends the bias column to raw features.
Dataset with_bias(const Matrix& raw, std::vector<int> labels, int classes);

enum class PartitionMode { kOneClass, kIid };

PartitionMode parse_partition_mode(const std::string& name);
std::string to_string(PartitionMode mode);

// Splits the dataset into `shards` disjoint, equally sized shards. In
// one-class mode every shard holds a single label and the labels are spread
// over the shards as evenly as possible. Leftover samples are dropped.
std::vector<DataShard> partition(const Dataset& data, int shards,
                                 PartitionMode mode, std::uint64_t seed);

}  // namespace fogfl

#endif  // FOGFL_DATASET_HPP_
