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

#include "fogfl/system_model.hpp"

#include <gtest/gtest.h>

#include <cmath>
#include <vector>

#include "fogfl/common.hpp"

namespace fogfl {
namespace {

RadioConfig radio() {
  RadioConfig r;
  r.noise_psd = std::pow(10.0, -20.4);
  r.payload_dl = 251200;
  r.payload_ul = 251232;
  r.batch_bits = 125440;
  return r;
}

TEST(PathLoss, MatchesDecibelFormulaAndDecreases) {
  EXPECT_NEAR(10.0 * std::log10(path_loss_gain(1.0)), -103.8, 1e-12);
  EXPECT_NEAR(10.0 * std::log10(path_loss_gain(0.1)), -103.8 + 20.9, 1e-12);
  double prev = path_loss_gain(1e-3);
  for (double d = 2e-3; d < 5.0; d *= 1.1) {
    const double g = path_loss_gain(d);
    EXPECT_LT(g, prev);
    prev = g;
  }
  EXPECT_THROW(path_loss_gain(0.0), DomainError);
}

TEST(SnrUl, LinearInPower) {
  const RadioConfig r = radio();
  EXPECT_EQ(snr_ul(0.0, 5.13e-9, 8, 1e7, r.noise_psd), 0.0);
  const double a = snr_ul(0.05, 5.13e-9, 8, 1e7, r.noise_psd);
  EXPECT_NEAR(snr_ul(0.1, 5.13e-9, 8, 1e7, r.noise_psd), 2.0 * a, 1e-9 * a);
}

TEST(SnrUl, WorkedExample) {
  // 0.1 * 8 * 5.13e-9 / (1e7 * 10^-20.4) evaluated by hand: 4.104e-10 / 3.981e-14.
  const double expected = 0.1 * 8.0 * 5.13e-9 / (1e7 * std::pow(10.0, -20.4));
  const double got = snr_ul(0.1, 5.13e-9, 8, 1e7, std::pow(10.0, -20.4));
  EXPECT_NEAR(got, expected, 1e-9 * expected);
  EXPECT_NEAR(got, 1.0309e5, 10.0);
}

TEST(RateDl, WeakestUeSetsTheRate) {
  RadioConfig r = radio();
  // Gains chosen so the two downlink SNRs are exactly 1e4 and 1e3.
  const double unit = r.bandwidth_dl * r.noise_psd / (r.bs_power * r.antennas);
  const std::vector<double> gains = {1e4 * unit, 1e3 * unit};
  EXPECT_NEAR(rate_dl(gains, r), 1e7 / 5.0 * std::log2(1001.0), 1e-6);
  const std::vector<double> one = {1e4 * unit};
  EXPECT_GT(rate_dl(one, r), rate_dl(gains, r));
  EXPECT_THROW(rate_dl(std::vector<double>{}, r), DomainError);
}

TEST(RateUl, UnitSnrAndLinearity) {
  const RadioConfig r = radio();
  const double phi = 1e-10;
  const double p1 = unit_snr_power(phi, r);
  EXPECT_NEAR(rate_ul(1.0, p1, phi, r), 1e7, 1e-3);
  EXPECT_NEAR(rate_ul(0.5, p1, phi, r), 0.5e7, 1e-3);
  EXPECT_THROW(rate_ul(0.0, p1, phi, r), DomainError);
}

TEST(RateUl, WorkedExample) {
  RadioConfig r = radio();
  // Gain giving an uplink SNR of 1.03e4 at 0.1 W.
  const double phi = 1.03e4 * r.bandwidth_ul * r.noise_psd / (0.1 * r.antennas);
  const double got = rate_ul(0.01, 0.1, phi, r);
  EXPECT_NEAR(got, 0.01 * 1e7 * std::log2(1.0 + 1.03e4), 1e-6);
  EXPECT_NEAR(got, 1.333e6, 1e3);
}

TEST(RateUl, IncreasingAndConcaveInPower) {
  const RadioConfig r = radio();
  const double phi = 3e-11;
  const double h = 1e-4;
  double prev_slope = INFINITY;
  for (double p = 0.01; p < 0.2; p += 0.01) {
    const double slope = (rate_ul(0.1, p + h, phi, r) - rate_ul(0.1, p - h, phi, r)) / (2 * h);
    EXPECT_GT(slope, 0.0);
    EXPECT_LT(slope, prev_slope);
    prev_slope = slope;
  }
}

TEST(ComputeDelay, Examples) {
  EXPECT_DOUBLE_EQ(compute_delay(3e6, 1, 3e6, 1), 1.0);
  EXPECT_NEAR(compute_delay(2e9, 15, 125440, 20), 20.0 * 15 * 125440 / 2e9, 1e-15);
  EXPECT_NEAR(compute_delay(2e9, 15, 125440, 20), 0.0188, 1e-4);
  EXPECT_NEAR(compute_delay(4e9, 15, 125440, 20), 0.5 * compute_delay(2e9, 15, 125440, 20),
              1e-15);
  EXPECT_THROW(compute_delay(0, 15, 125440, 20), DomainError);
}

TEST(Energy, TermByTerm) {
  UeProfile ue;
  ue.cycles_per_bit = 15;
  ue.theta_half = 1e-28;
  const double e = energy(0.1, 0.251, 2e9, ue, 20, 125440);
  EXPECT_NEAR(e, 0.0251 + 20 * 1e-28 * 15 * 125440 * 4e18, 1e-15);
  EXPECT_NEAR(e - 0.0251, 0.01505, 1e-5);
  EXPECT_NEAR(energy(0.0, 0.3, 1e6, ue, 20, 125440), 20 * 1e-28 * 15 * 125440 * 1e12, 1e-20);
  for (double f = 1e8; f < 3e9; f += 1e8)
    EXPECT_GT(energy(0.1, 0.2, f + 1e6, ue, 20, 125440), energy(0.1, 0.2, f, ue, 20, 125440));
}

TEST(RoundDelay, MaxOfTotals) {
  std::vector<DelayBreakdown> d = {{0.1, 0.1, 0.1}, {0.2, 0.2, 0.1}, {0.05, 0.05, 0.1}};
  EXPECT_NEAR(round_delay(d), 0.5, 1e-15);
  std::vector<DelayBreakdown> a(d.begin(), d.begin() + 1), b(d.begin() + 1, d.end());
  EXPECT_DOUBLE_EQ(round_delay(d), std::max(round_delay(a), round_delay(b)));
  EXPECT_THROW(round_delay(std::vector<DelayBreakdown>{}), DomainError);
}

TEST(PowerFloor, MeetsMinimumSnr) {
  const RadioConfig r = radio();
  const double phi = 2e-11;
  const double p = power_floor(phi, r);
  EXPECT_NEAR(snr_ul(p, phi, r.antennas, r.bandwidth_ul, r.noise_psd), r.snr_min, 1e-12);
  EXPECT_NEAR(r.snr_min, db_to_linear(1.0), 1e-15);
}

TEST(Units, Conversions) {
  EXPECT_NEAR(dbm_to_watt(30), 1.0, 1e-15);
  EXPECT_NEAR(dbm_to_watt(40), 10.0, 1e-13);
  EXPECT_NEAR(db_to_linear(10), 10.0, 1e-14);
}

}  // namespace
}  // namespace fogfl
