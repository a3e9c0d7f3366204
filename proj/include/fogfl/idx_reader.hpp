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

#ifndef FOGFL_IDX_READER_HPP_
#define FOGFL_IDX_READER_HPP_

#include <string>
#include <vector>

#include "fogfl/dataset.hpp"

namespace fogfl {

// Reads an IDX3 image file (magic 0x00000803) as rows of pixels scaled to
// [0, 1].
Matrix read_idx_images(const std::string& path, int limit = -1);

// Reads an IDX1 label file (magic 0x00000801).
std::vector<int> read_idx_labels(const std::string& path, int limit = -1);

Dataset load_idx_dataset(const std::string& images, const std::string& labels,
                         int classes, int limit = -1);

}  // namespace fogfl

#endif  // FOGFL_IDX_READER_HPP_
