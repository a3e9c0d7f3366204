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

#include "fogfl/dataset.hpp"

#include <algorithm>
#include <numeric>

#include "fogfl/common.hpp"
#include "fogfl/rng.hpp"

namespace fogfl {

namespace {

template <typename T>
void shuffle(std::vector<T>& v, std::mt19937_64& rng) {
  for (size_t i = v.size(); i > 1; --i) {
    const size_t j = below(rng, i);
    std::swap(v[i - 1], v[j]);
  }
}

Dataset draw(const Matrix& prototypes, int n, double noise, double overlap,
             std::mt19937_64& rng) {
  const int classes = static_cast<int>(prototypes.rows());
  const int q = static_cast<int>(prototypes.cols());
  Matrix raw(n, q);
  std::vector<int> labels(n);
  for (int s = 0; s < n; ++s) {
    labels[s] = s % classes;
    const int other =
        (labels[s] + 1 + static_cast<int>(below(rng, classes - 1))) % classes;
    const double m = overlap * uniform01(rng);
    for (int k = 0; k < q; ++k)
      raw(s, k) = (1.0 - m) * prototypes(labels[s], k) + m * prototypes(other, k) +
                  noise * normal(rng);
  }
  return with_bias(raw, std::move(labels), classes);
}

}  // namespace

Dataset with_bias(const Matrix& raw, std::vector<int> labels, int classes) {
  Dataset d;
  d.x.resize(raw.rows(), raw.cols() + 1);
  d.x.leftCols(raw.cols()) = raw;
  d.x.col(raw.cols()).setOnes();
  d.y = std::move(labels);
  d.classes = classes;
  return d;
}

TrainTest make_synthetic(const SyntheticSpec& spec, std::uint64_t seed) {
  if (spec.features < 1 || spec.classes < 2 || spec.train_samples < 1 ||
      spec.test_samples < 1)
    throw DomainError("synthetic data: invalid dimensions");
  auto rng = make_stream(seed, Stream::kData);
  Matrix prototypes(spec.classes, spec.features);
  for (int c = 0; c < spec.classes; ++c)
    for (int k = 0; k < spec.features; ++k)
      prototypes(c, k) = uniform01(rng) < spec.prototype_density ? uniform01(rng) : 0.0;
  TrainTest out;
  out.train = draw(prototypes, spec.train_samples, spec.noise, spec.overlap, rng);
  out.test = draw(prototypes, spec.test_samples, spec.noise, spec.overlap, rng);
  return out;
}

PartitionMode parse_partition_mode(const std::string& name) {
  if (name == "one-class") return PartitionMode::kOneClass;
  if (name == "iid") return PartitionMode::kIid;
  throw ConfigError("data.partition: unknown mode '" + name + "'");
}

std::string to_string(PartitionMode mode) {
  return mode == PartitionMode::kOneClass ? "one-class" : "iid";
}

std::vector<DataShard> partition(const Dataset& data, int shards,
                                 PartitionMode mode, std::uint64_t seed) {
  if (shards < 1) throw DomainError("partition: need at least one shard");
  if (shards > data.size())
    throw DomainError("partition: " + std::to_string(shards) +
                      " shards exceed " + std::to_string(data.size()) + " samples");
  auto rng = make_stream(seed, Stream::kPartition);
  std::vector<std::vector<int>> rows_of(shards);

  if (mode == PartitionMode::kIid) {
    std::vector<int> order(data.size());
    std::iota(order.begin(), order.end(), 0);
    shuffle(order, rng);
    const int per = data.size() / shards;
    for (int s = 0; s < shards; ++s)
      rows_of[s].assign(order.begin() + s * per, order.begin() + (s + 1) * per);
  } else {
    std::vector<std::vector<int>> by_class(data.classes);
    for (int r = 0; r < data.size(); ++r) by_class[data.y[r]].push_back(r);
    for (auto& rows : by_class) shuffle(rows, rng);
    // Each label goes to floor or ceil of shards/classes shards.
    std::vector<int> label_of(shards);
    for (int s = 0; s < shards; ++s) label_of[s] = s % data.classes;
    shuffle(label_of, rng);
    std::vector<int> owners(data.classes, 0);
    for (int c : label_of) ++owners[c];
    int per = data.size();
    for (int c = 0; c < data.classes; ++c)
      if (owners[c] > 0)
        per = std::min(per, static_cast<int>(by_class[c].size()) / owners[c]);
    if (per < 1)
      throw DomainError("partition: too few samples per class for one-class shards");
    std::vector<int> next(data.classes, 0);
    for (int s = 0; s < shards; ++s) {
      const int c = label_of[s];
      auto begin = by_class[c].begin() + next[c];
      rows_of[s].assign(begin, begin + per);
      next[c] += per;
    }
  }

  std::vector<DataShard> out(shards);
  for (int s = 0; s < shards; ++s) {
    DataShard& sh = out[s];
    sh.owner = s;
    sh.source_rows = rows_of[s];
    sh.x.resize(static_cast<Eigen::Index>(rows_of[s].size()), data.x.cols());
    sh.y.resize(rows_of[s].size());
    for (size_t k = 0; k < rows_of[s].size(); ++k) {
      sh.x.row(static_cast<Eigen::Index>(k)) = data.x.row(rows_of[s][k]);
      sh.y[k] = data.y[rows_of[s][k]];
    }
  }
  return out;
}

}  // namespace fogfl
