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

#ifndef FOGFL_SYSTEM_MODEL_HPP_
#define FOGFL_SYSTEM_MODEL_HPP_

#include <span>
#include <vector>

namespace fogfl {

// Radio parameters in linear SI units.
struct RadioConfig {
  double bandwidth_dl = 1e7;      // Hz, shared equally by the cells
  double bandwidth_ul = 1e7;      // Hz, split by bandwidth fractions
  double noise_psd = 3.981071705534969e-21;  // W/Hz
  double snr_min = 1.2589254117941673;
  int fog_servers = 5;
  int antennas = 8;
  double bs_power = 10.0;         // W
  double payload_dl = 0;          // bits
  double payload_ul = 0;          // bits
  double batch_bits = 0;          // bits per mini-batch

  void validate() const;
};

struct UeProfile {
  int fog = 0;
  double p_max = 0.1;             // W
  double cycles_per_bit = 15;
  double f_min = 1e6;
  double f_max = 2e9;
  double theta_half = 1e-28;
  double e_max = 0.01;            // J
  double x = 0, y = 0;            // km
};

struct DelayBreakdown {
  double t_dl = 0;
  double t_cp = 0;
  double t_ul = 0;
  double total() const { return t_dl + t_cp + t_ul; }
};

// Large-scale gain for a BS-UE distance in km.
double path_loss_gain(double d_km);

double snr_ul(double p, double phi, int antennas, double bandwidth_ul,
              double noise_psd);

// Downlink rate of a cell: every UE receives at the rate of the weakest one.
double rate_dl(std::span<const double> cell_gains, const RadioConfig& radio);

double rate_ul(double beta, double p, double phi, const RadioConfig& radio);

double compute_delay(double f, double cycles_per_bit, double batch_bits,
                     int local_iters);

double energy(double p, double t_ul, double f, const UeProfile& ue,
              int local_iters, double batch_bits);

double round_delay(std::span<const DelayBreakdown> delays);

// Smallest transmit power meeting the SNR floor.
double power_floor(double phi, const RadioConfig& radio);

// Power at which the uplink SNR equals one: W_ul N0 / (K phi).
double unit_snr_power(double phi, const RadioConfig& radio);

}  // namespace fogfl

#endif  // FOGFL_SYSTEM_MODEL_HPP_
