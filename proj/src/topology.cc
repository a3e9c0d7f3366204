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

#include "fogfl/topology.hpp"

#include <cmath>
#include <numbers>
#include <string>

#include "fogfl/common.hpp"
#include "fogfl/rng.hpp"

namespace fogfl {

namespace {

int nearest_bs(const std::vector<std::array<double, 2>>& bs, double x,
               double y) {
  int best = 0;
  double best_d = INFINITY;
  for (size_t i = 0; i < bs.size(); ++i) {
    const double d = std::hypot(x - bs[i][0], y - bs[i][1]);
    if (d < best_d) {
      best_d = d;
      best = static_cast<int>(i);
    }
  }
  return best;
}

}  // namespace

Network generate_network(const TopologySpec& spec, const UeRanges& ranges,
                         const RadioConfig& radio, std::uint64_t seed) {
  const int fogs = static_cast<int>(spec.ues_per_fog.size());
  if (fogs != radio.fog_servers)
    throw DomainError("topology: ues_per_fog has " + std::to_string(fogs) +
                      " entries but there are " +
                      std::to_string(radio.fog_servers) + " fog servers");
  Network net;
  net.radio = radio;
  for (int i = 0; i < fogs; ++i) {
    if (fogs == 1) {
      net.bs.push_back({0.0, 0.0});
    } else {
      const double a = 2.0 * std::numbers::pi * i / fogs;
      net.bs.push_back({spec.bs_radius_km * std::cos(a),
                        spec.bs_radius_km * std::sin(a)});
    }
  }
  net.cells.resize(fogs);
  auto rng = make_stream(seed, Stream::kTopology);
  for (int i = 0; i < fogs; ++i) {
    for (int j = 0; j < spec.ues_per_fog[i]; ++j) {
      UeProfile ue;
      ue.fog = i;
      double x = 0, y = 0, d = 0;
      for (int attempt = 0;; ++attempt) {
        if (attempt > 100000)
          throw DomainError("topology: cannot place a UE in cell " + std::to_string(i));
        const double r = spec.radius_km * std::sqrt(uniform01(rng));
        const double a = 2.0 * std::numbers::pi * uniform01(rng);
        x = r * std::cos(a);
        y = r * std::sin(a);
        d = std::hypot(x - net.bs[i][0], y - net.bs[i][1]);
        if (nearest_bs(net.bs, x, y) == i && d >= spec.min_distance_km) break;
      }
      ue.x = x;
      ue.y = y;
      ue.p_max = dbm_to_watt(uniform(rng, ranges.p_max_dbm_min, ranges.p_max_dbm_max));
      ue.cycles_per_bit = uniform(rng, ranges.cycles_min, ranges.cycles_max);
      ue.f_max = uniform(rng, ranges.f_max_min, ranges.f_max_max);
      ue.f_min = ranges.f_min;
      ue.theta_half = ranges.theta_half;
      ue.e_max = ranges.e_max;
      if (!(ue.f_min > 0) || ue.f_min > ue.f_max)
        throw DomainError("topology: need 0 < f_min <= f_max");
      const int idx = static_cast<int>(net.ues.size());
      if (!(ue.p_max > power_floor(path_loss_gain(d), radio)))
        throw InfeasibleError("topology: UE " + std::to_string(idx) +
                                  " cannot reach the minimum SNR at full power",
                              {"power_floor"});
      net.cells[i].push_back(idx);
      net.ues.push_back(ue);
      net.distance.push_back(d);
    }
  }
  return net;
}

std::vector<double> channel_gains(const Network& net, const TopologySpec& spec,
                                  std::uint64_t seed, int g) {
  std::vector<double> gains(net.ues.size());
  auto rng = make_stream(seed, Stream::kChannel, static_cast<std::uint64_t>(g));
  for (size_t k = 0; k < net.ues.size(); ++k) {
    double d = net.distance[k];
    if (spec.mobility_jitter_km > 0) {
      d += uniform(rng, -spec.mobility_jitter_km, spec.mobility_jitter_km);
      d = std::max(d, spec.min_distance_km);
    }
    gains[k] = path_loss_gain(d);
  }
  return gains;
}

}  // namespace fogfl
