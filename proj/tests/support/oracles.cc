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

#include "oracles.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "fogfl/logistic.hpp"

namespace fogfl::oracle {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Fastest delay a UE reaches with bandwidth fraction beta, over the grid.
double best_delay(const UeRound& u, double w, double s, double beta, int n_p, int n_f) {
  double best = kInf;
  const double lp0 = std::log(u.p_floor), lp1 = std::log(u.p_max);
  for (int ip = 0; ip < n_p; ++ip) {
    const double p = std::exp(lp0 + (lp1 - lp0) * ip / (n_p - 1));
    const double rate = beta * w * std::log2(1.0 + p / u.unit_power);
    const double t_ul = s / rate;
    const double e_left = u.e_max - p * t_ul;
    if (e_left < u.energy_coef * u.f_min * u.f_min) continue;
    // Frequencies are scanned on a linear grid; the fastest affordable one wins.
    for (int jf = n_f - 1; jf >= 0; --jf) {
      const double f = u.f_min + (u.f_max - u.f_min) * jf / (n_f - 1);
      if (u.energy_coef * f * f <= e_left) {
        best = std::min(best, u.t_dl + u.cycles / f + t_ul);
        break;
      }
    }
  }
  return best;
}

}  // namespace

UeOutcome evaluate_ue(const UeRound& u, double bandwidth_ul, double payload_ul,
                      double beta, double p, double f) {
  const double snr = p / u.unit_power;
  const double rate = beta * bandwidth_ul * std::log2(1.0 + snr);
  const double t_ul = payload_ul / rate;
  UeOutcome o;
  o.delay = u.t_dl + u.cycles / f + t_ul;
  o.energy = p * t_ul + u.energy_coef * f * f;
  return o;
}

// For a fixed split the UEs share nothing else, so the min-max over the full
// grid is the best split of the per-UE minima.
GridResult two_ue_grid(const RoundInstance& inst, int n_beta, int n_p, int n_f) {
  GridResult r;
  r.t = kInf;
  int best_i = -1;
  std::vector<double> d1(n_beta), d2(n_beta);
  for (int i = 0; i < n_beta; ++i) {
    const double b1 = (i + 1.0) / (n_beta + 1.0);
    d1[i] = best_delay(inst.ues[0], inst.bandwidth_ul, inst.payload_ul, b1, n_p, n_f);
    d2[i] = best_delay(inst.ues[1], inst.bandwidth_ul, inst.payload_ul, 1.0 - b1, n_p, n_f);
    const double t = std::max(d1[i], d2[i]);
    if (t < r.t) {
      r.t = t;
      r.beta1 = b1;
      best_i = i;
    }
  }
  if (best_i >= 0) {
    double res = 0;
    for (int k : {best_i - 1, best_i + 1})
      if (k >= 0 && k < n_beta && std::isfinite(std::max(d1[k], d2[k])))
        res = std::max(res, std::abs(std::max(d1[k], d2[k]) - r.t));
    r.resolution = res;
  }
  return r;
}

std::optional<int> stop_round(std::span<const double> cost, int k_bar, int g_bar,
                              double eps) {
  const int need = std::max(k_bar, 1);
  for (int g = std::max(1, g_bar); g < static_cast<int>(cost.size()); ++g) {
    bool all = true;
    for (int i = 0; i < need; ++i) {
      const int h = g - i;
      if (h < 1 || !(cost[h] - cost[h - 1] >= eps)) {
        all = false;
        break;
      }
    }
    if (all) return g - k_bar;
  }
  return std::nullopt;
}

double numeric_partial(const Matrix& w, const Matrix& x, std::span<const int> y,
                       double reg, int row, int col, double h) {
  Matrix wp = w, wm = w;
  wp(row, col) += h;
  wm(row, col) -= h;
  return (logistic_loss(wp, x, y, reg) - logistic_loss(wm, x, y, reg)) / (2.0 * h);
}

Matrix reference_optimum(std::span<const DataShard> shards, double reg,
                         double grad_tol, int max_iters, int classes) {
  const int q = static_cast<int>(shards.front().x.cols());
  if (classes == 0) classes = [&] {
    int m = 0;
    for (const auto& s : shards)
      for (int v : s.y) m = std::max(m, v);
    return m + 1;
  }();
  double smooth = reg;
  for (const auto& s : shards) smooth = std::max(smooth, smoothness_bound(s.x, reg));
  Matrix w = Matrix::Zero(q, classes);
  Matrix g(q, classes), gs(q, classes);
  for (int it = 0; it < max_iters; ++it) {
    g.setZero();
    for (const auto& s : shards) {
      logistic_gradient(w, s.x, s.y, reg, gs);
      g += gs;
    }
    g /= static_cast<double>(shards.size());
    if (g.norm() < grad_tol) break;
    w -= g / smooth;
  }
  return w;
}

Network small_network(int ues, std::uint64_t seed) {
  return cell_network({ues}, seed);
}

Network cell_network(const std::vector<int>& ues_per_fog, std::uint64_t seed) {
  TopologySpec spec;
  spec.ues_per_fog = ues_per_fog;
  RadioConfig radio;
  radio.fog_servers = static_cast<int>(ues_per_fog.size());
  radio.payload_dl = 7850.0 * 32.0;
  radio.payload_ul = radio.payload_dl + 32.0;
  radio.batch_bits = 20.0 * 784.0 * 8.0;
  return generate_network(spec, UeRanges{}, radio, seed);
}

}  // namespace fogfl::oracle
