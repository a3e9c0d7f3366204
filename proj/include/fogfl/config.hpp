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

#ifndef FOGFL_CONFIG_HPP_
#define FOGFL_CONFIG_HPP_

#include <cstdint>
#include <string>
#include <vector>

namespace fogfl {

// Run configuration in user units (dBm, dB, Hz, J). Defaults follow the
// MNIST setting of the reference evaluation.
struct RunConfig {
  struct Topology {
    int fog_servers = 5;
    int total_ues = 100;
    std::vector<int> ues_per_fog;  // empty: split total_ues evenly
    double radius_km = 1.0;
    double bs_radius_km = 0.5;
    double min_distance_km = 0.01;
    double mobility_jitter_km = 0.0;
  } topology;

  struct Radio {
    double bandwidth_dl_hz = 10e6;
    double bandwidth_ul_hz = 10e6;
    double noise_psd_dbm_hz = -174;
    double snr_min_db = 1;
    int antennas = 8;
    double bs_power_dbm = 40;
    double payload_dl_bits = 0;  // 0: 32 bits per model parameter
    double payload_ul_bits = 0;  // 0: model plus one 32-bit loss value
    double batch_bits = 0;       // 0: batch_size * features * bits_per_feature
  } radio;

  struct Ue {
    double p_max_dbm_min = 10;
    double p_max_dbm_max = 23;
    double cycles_per_bit_min = 10;
    double cycles_per_bit_max = 20;
    double f_max_min = 1e9;
    double f_max_max = 3e9;
    double f_min = 1e6;
    double theta_half = 1e-28;
    double e_max_j = 0.01;
  } ue;

  struct Fl {
    int local_iters = 20;
    int batch_size = 20;
    double eta0 = 0.001;
    double lr_decay = 1.01;
    std::string lr_mode = "geometric";  // or "theoretical"
    int rounds = 400;
    int min_rounds = 250;
    double regularization = 1e-4;
    int bits_per_feature = 8;
  } fl;

  struct Cost {
    double alpha = 0.7;
    double f0 = 0.1;
    double t0 = 100;
    double eps = 1e-6;
    int k_bar = 5;
    int smoothing = 5;
    bool stop = true;
  } cost;

  struct Flexible {
    int j_min = 20;
    double delta_t = 0.15;
    double xi = 0;            // absolute trigger; 0 uses xi_relative
    double xi_relative = 0.1; // fraction of the first round's update norm
    int delta_g = 50;
  } flexible;

  struct Sampling {
    int subset = 10;
  } sampling;

  struct Data {
    std::string source = "synthetic";  // or "mnist"
    int features = 784;
    int classes = 10;
    int train_samples = 12000;
    int test_samples = 2000;
    double noise = 0.35;
    double overlap = 0.55;
    std::string partition = "one-class";  // or "iid"
    std::string mnist_train_images;
    std::string mnist_train_labels;
    std::string mnist_test_images;
    std::string mnist_test_labels;
  } data;

  struct Solver {
    double tol = 1e-6;
    double conv_tol = 1e-4;
    int max_iters = 20;
  } solver;

  struct Run {
    std::string scheme = "alg3";
    std::uint64_t seed = 1;
    std::string name = "run";
  } run;

  // Per-cell UE counts after applying the even split default.
  std::vector<int> cell_sizes() const;
};

void validate(const RunConfig& c);

// Parses INI text; keys absent from the text keep their defaults, unknown
// sections or keys are rejected.
RunConfig parse_config(const std::string& text, const std::string& origin = "<string>");
// Same, starting from `base` instead of the defaults.
RunConfig parse_config_onto(const RunConfig& base, const std::string& text,
                            const std::string& origin = "<string>");
RunConfig load_config(const std::string& path);

// INI text that parses back to an identical configuration.
std::string emit_config(const RunConfig& c);

// FNV-1a of the emitted INI text, as 16 hex digits.
std::string config_hash(const RunConfig& c);

bool operator==(const RunConfig& a, const RunConfig& b);

}  // namespace fogfl

#endif  // FOGFL_CONFIG_HPP_
