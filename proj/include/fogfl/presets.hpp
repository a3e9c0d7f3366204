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

#ifndef FOGFL_PRESETS_HPP_
#define FOGFL_PRESETS_HPP_

#include <string>
#include <vector>

#include "fogfl/config.hpp"

namespace fogfl {

struct PresetVariant {
  std::string label;
  RunConfig config;
  std::vector<std::string> schemes;  // empty: the preset's scheme list
};

// A sweep: every variant is run with every scheme and every trial seed.
struct Preset {
  std::string name;
  std::string description;
  std::vector<PresetVariant> variants;
  std::vector<std::string> schemes;
};

std::vector<std::string> preset_names();
Preset make_preset(const std::string& name);

}  // namespace fogfl

#endif  // FOGFL_PRESETS_HPP_
