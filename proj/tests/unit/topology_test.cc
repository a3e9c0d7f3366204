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

#include <gtest/gtest.h>

#include <cmath>

#include "fogfl/common.hpp"

namespace fogfl {
namespace {

RadioConfig radio(int fogs) {
  RadioConfig r;
  r.fog_servers = fogs;
  r.payload_dl = 251200;
  r.payload_ul = 251232;
  r.batch_bits = 125440;
  return r;
}

TEST(Topology, DefaultLayoutRespectsRangesAndCells) {
  TopologySpec spec;
  UeRanges ranges;
  const Network net = generate_network(spec, ranges, radio(5), 3);
  ASSERT_EQ(net.size(), 100);
  ASSERT_EQ(net.cells.size(), 5u);
  for (int i = 0; i < 5; ++i) {
    EXPECT_EQ(net.cells[i].size(), 20u);
    EXPECT_NEAR(std::hypot(net.bs[i][0], net.bs[i][1]), spec.bs_radius_km, 1e-12);
  }
  for (int k = 0; k < net.size(); ++k) {
    const UeProfile& u = net.ues[k];
    EXPECT_LE(std::hypot(u.x, u.y), spec.radius_km);
    EXPECT_GE(net.distance[k], spec.min_distance_km);
    EXPECT_NEAR(net.distance[k], std::hypot(u.x - net.bs[u.fog][0], u.y - net.bs[u.fog][1]),
                1e-12);
    for (int i = 0; i < 5; ++i)
      EXPECT_LE(net.distance[k], std::hypot(u.x - net.bs[i][0], u.y - net.bs[i][1]) + 1e-12);
    EXPECT_GE(u.p_max, dbm_to_watt(10) * (1 - 1e-12));
    EXPECT_LE(u.p_max, dbm_to_watt(23) * (1 + 1e-12));
    EXPECT_GE(u.cycles_per_bit, 10);
    EXPECT_LE(u.cycles_per_bit, 20);
    EXPECT_GE(u.f_max, 1e9);
    EXPECT_LE(u.f_max, 3e9);
    EXPECT_EQ(u.f_min, 1e6);
    EXPECT_EQ(u.e_max, 0.01);
  }
}

TEST(Topology, DeterministicPerSeed) {
  const Network a = generate_network(TopologySpec{}, UeRanges{}, radio(5), 9);
  const Network b = generate_network(TopologySpec{}, UeRanges{}, radio(5), 9);
  const Network c = generate_network(TopologySpec{}, UeRanges{}, radio(5), 10);
  EXPECT_EQ(a.distance, b.distance);
  EXPECT_NE(a.distance, c.distance);
}

TEST(Topology, SingleCellSitsAtCentre) {
  TopologySpec spec;
  spec.ues_per_fog = {7};
  const Network net = generate_network(spec, UeRanges{}, radio(1), 1);
  EXPECT_EQ(net.bs[0][0], 0.0);
  EXPECT_EQ(net.size(), 7);
}

TEST(Topology, CellCountMustMatchFogServers) {
  TopologySpec spec;
  spec.ues_per_fog = {10, 10};
  EXPECT_THROW(generate_network(spec, UeRanges{}, radio(5), 1), DomainError);
}

TEST(Channel, StaticWithoutJitter) {
  TopologySpec spec;
  const Network net = generate_network(spec, UeRanges{}, radio(5), 2);
  EXPECT_EQ(channel_gains(net, spec, 2, 0), channel_gains(net, spec, 2, 7));
  spec.mobility_jitter_km = 0.05;
  const auto g0 = channel_gains(net, spec, 2, 0);
  const auto g1 = channel_gains(net, spec, 2, 1);
  EXPECT_NE(g0, g1);
  EXPECT_EQ(g1, channel_gains(net, spec, 2, 1));
}

}  // namespace
}  // namespace fogfl
