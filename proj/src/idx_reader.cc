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

#include "fogfl/idx_reader.hpp"

#include <cstdint>
#include <fstream>

#include "fogfl/common.hpp"

namespace fogfl {

namespace {

std::uint32_t read_be32(std::ifstream& in, const std::string& path) {
  unsigned char b[4];
  if (!in.read(reinterpret_cast<char*>(b), 4))
    throw Error("idx: truncated header in " + path);
  return (std::uint32_t{b[0]} << 24) | (std::uint32_t{b[1]} << 16) |
         (std::uint32_t{b[2]} << 8) | std::uint32_t{b[3]};
}

std::ifstream open(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("idx: cannot open " + path);
  return in;
}

}  // namespace

Matrix read_idx_images(const std::string& path, int limit) {
  auto in = open(path);
  if (read_be32(in, path) != 0x803) throw Error("idx: bad image magic in " + path);
  std::uint32_t n = read_be32(in, path);
  const std::uint32_t rows = read_be32(in, path);
  const std::uint32_t cols = read_be32(in, path);
  if (limit >= 0 && static_cast<std::uint32_t>(limit) < n) n = limit;
  const std::size_t q = std::size_t{rows} * cols;
  Matrix out(n, static_cast<Eigen::Index>(q));
  std::vector<unsigned char> buf(q);
  for (std::uint32_t s = 0; s < n; ++s) {
    if (!in.read(reinterpret_cast<char*>(buf.data()), static_cast<std::streamsize>(q)))
      throw Error("idx: truncated image data in " + path);
    for (std::size_t k = 0; k < q; ++k) out(s, static_cast<Eigen::Index>(k)) = buf[k] / 255.0;
  }
  return out;
}

std::vector<int> read_idx_labels(const std::string& path, int limit) {
  auto in = open(path);
  if (read_be32(in, path) != 0x801) throw Error("idx: bad label magic in " + path);
  std::uint32_t n = read_be32(in, path);
  if (limit >= 0 && static_cast<std::uint32_t>(limit) < n) n = limit;
  std::vector<unsigned char> buf(n);
  if (!in.read(reinterpret_cast<char*>(buf.data()), n))
    throw Error("idx: truncated label data in " + path);
  return std::vector<int>(buf.begin(), buf.end());
}

Dataset load_idx_dataset(const std::string& images, const std::string& labels,
                         int classes, int limit) {
  Matrix raw = read_idx_images(images, limit);
  std::vector<int> y = read_idx_labels(labels, limit);
  if (static_cast<Eigen::Index>(y.size()) != raw.rows())
    throw Error("idx: image and label counts differ");
  for (int v : y)
    if (v < 0 || v >= classes) throw Error("idx: label out of range in " + labels);
  return with_bias(raw, std::move(y), classes);
}

}  // namespace fogfl
