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

#ifndef FOGFL_TOPOLOGY_HPP_
#define FOGFL_TOPOLOGY_HPP_

#include <array>
#include <cstdint>
#include <vector>

#include "fogfl/system_model.hpp"

namespace fogfl {

struct TopologySpec {
  std::vector<int> ues_per_fog = std::vector<int>(5, 20);
  double radius_km = 1.0;
  double bs_radius_km = 0.5;
  double min_distance_km = 0.01;
  double mobility_jitter_km = 0.0;
};

// Heterogeneity ranges; every UE draws its own values uniformly.
struct UeRanges {
  double p_max_dbm_min = 10, p_max_dbm_max = 23;
  double cycles_min = 10, cycles_max = 20;
  double f_max_min = 1e9, f_max_max = 3e9;
  double f_min = 1e6;
  double theta_half = 1e-28;
  double e_max = 0.01;
};

struct Network {
  RadioConfig radio;
  std::vector<UeProfile> ues;
  std::vector<std::array<double, 2>> bs;
  std::vector<double> distance;  // km, to the serving BS
  std::vector<std::vector<int>> cells;

  int size() const { return static_cast<int>(ues.size()); }
};

// Places the BSs on a ring (or at the centre for a single cell) and drops the
// UEs of each cell uniformly over the part of the disc closest to their BS.
Network generate_network(const TopologySpec& spec, const UeRanges& ranges,
                         const RadioConfig& radio, std::uint64_t seed);

// Large-scale gains of every UE at round g.
std::vector<double> channel_gains(const Network& net, const TopologySpec& spec,
                                  std::uint64_t seed, int g);

}  // namespace fogfl

#endif  // FOGFL_TOPOLOGY_HPP_
