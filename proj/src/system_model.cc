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

#include <algorithm>
#include <cmath>
#include <string>

#include "fogfl/common.hpp"

namespace fogfl {

void RadioConfig::validate() const {
  auto positive = [](double v, const char* name) {
    if (!(v > 0)) throw DomainError(std::string("radio: ") + name + " must be positive");
  };
  positive(bandwidth_dl, "bandwidth_dl");
  positive(bandwidth_ul, "bandwidth_ul");
  positive(noise_psd, "noise_psd");
  positive(snr_min, "snr_min");
  positive(fog_servers, "fog_servers");
  positive(antennas, "antennas");
  positive(bs_power, "bs_power");
  positive(payload_dl, "payload_dl");
  positive(payload_ul, "payload_ul");
  positive(batch_bits, "batch_bits");
  if (!(payload_ul > payload_dl))
    throw DomainError("radio: uplink payload must exceed downlink payload");
}

double path_loss_gain(double d_km) {
  if (!(d_km > 0)) throw DomainError("path_loss_gain: distance must be positive");
  return std::pow(10.0, (-103.8 - 20.9 * std::log10(d_km)) / 10.0);
}

double snr_ul(double p, double phi, int antennas, double bandwidth_ul,
              double noise_psd) {
  return p * antennas * phi / (bandwidth_ul * noise_psd);
}

double rate_dl(std::span<const double> cell_gains, const RadioConfig& radio) {
  if (cell_gains.empty()) throw DomainError("rate_dl: empty cell");
  const double phi = *std::min_element(cell_gains.begin(), cell_gains.end());
  const double snr = radio.bs_power * radio.antennas * phi /
                     (radio.bandwidth_dl * radio.noise_psd);
  return radio.bandwidth_dl / radio.fog_servers * std::log2(1.0 + snr);
}

double rate_ul(double beta, double p, double phi, const RadioConfig& radio) {
  if (!(beta > 0) || beta > 1) throw DomainError("rate_ul: bandwidth fraction outside (0, 1]");
  const double snr =
      snr_ul(p, phi, radio.antennas, radio.bandwidth_ul, radio.noise_psd);
  return beta * radio.bandwidth_ul * std::log2(1.0 + snr);
}

double compute_delay(double f, double cycles_per_bit, double batch_bits,
                     int local_iters) {
  if (!(f > 0)) throw DomainError("compute_delay: CPU frequency must be positive");
  return local_iters * cycles_per_bit * batch_bits / f;
}

double energy(double p, double t_ul, double f, const UeProfile& ue,
              int local_iters, double batch_bits) {
  return p * t_ul +
         local_iters * ue.theta_half * ue.cycles_per_bit * batch_bits * f * f;
}

double round_delay(std::span<const DelayBreakdown> delays) {
  if (delays.empty()) throw DomainError("round_delay: no participating UE");
  double t = 0;
  for (const auto& d : delays) t = std::max(t, d.total());
  return t;
}

double unit_snr_power(double phi, const RadioConfig& radio) {
  return radio.bandwidth_ul * radio.noise_psd / (radio.antennas * phi);
}

double power_floor(double phi, const RadioConfig& radio) {
  return radio.snr_min * unit_snr_power(phi, radio);
}

}  // namespace fogfl
