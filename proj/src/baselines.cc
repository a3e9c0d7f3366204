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

#include "fogfl/baselines.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include <boost/math/tools/minima.hpp>
#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "fogfl/common.hpp"
#include "fogfl/rng.hpp"

namespace fogfl {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

struct RelTol {
  double rel;
  bool operator()(double a, double b) const {
    return std::fabs(b - a) <= rel * std::max(std::fabs(a), std::fabs(b));
  }
};

double cpu_for_energy(const UeRound& u, double left) {
  if (left < u.energy_coef * u.f_min * u.f_min) return u.f_min;
  return std::min(u.f_max, std::sqrt(left / u.energy_coef));
}

UeDecision eb_ue(const UeRound& u, double beta, double w, double s) {
  auto rate = [&](double p) { return beta * w * std::log2(1.0 + p / u.unit_power); };
  auto e_co = [&](double p) { return p * s / rate(p); };
  const double cp_floor = u.energy_coef * u.f_min * u.f_min;
  UeDecision d;
  d.ue = u.ue;
  d.beta = beta;
  if (e_co(u.p_floor) + cp_floor > u.e_max) {
    d.p = u.p_floor;
    d.f = u.f_min;
    d.flagged = true;
  } else {
    double top = u.p_max;
    auto excess = [&](double p) { return e_co(p) + cp_floor - u.e_max; };
    if (excess(top) > 0) {
      boost::uintmax_t it = 200;
      top = boost::math::tools::toms748_solve(excess, u.p_floor, top, excess(u.p_floor),
                                              excess(top), RelTol{1e-14}, it)
                .first;
    }
    auto delay = [&](double p) {
      const double f = cpu_for_energy(u, u.e_max - e_co(p));
      return u.cycles / f + s / rate(p);
    };
    // Coarse log scan, then Brent inside the best cell.
    constexpr int kScan = 64;
    const double ratio = top / u.p_floor;
    int best = 0;
    double best_v = kInf;
    std::vector<double> grid(kScan + 1);
    for (int k = 0; k <= kScan; ++k) {
      grid[k] = k == kScan ? top : u.p_floor * std::pow(ratio, static_cast<double>(k) / kScan);
      const double v = delay(grid[k]);
      if (v < best_v) {
        best_v = v;
        best = k;
      }
    }
    const double lo = grid[std::max(0, best - 1)];
    const double hi = grid[std::min(kScan, best + 1)];
    double p = grid[best];
    if (hi > lo) {
      boost::uintmax_t it = 200;
      auto r = boost::math::tools::brent_find_minima(delay, lo, hi, 40, it);
      if (r.second < best_v) p = r.first;
    }
    d.p = p;
    d.f = cpu_for_energy(u, u.e_max - e_co(p));
  }
  d.tau = rate(d.p);
  d.t_bound = u.t_dl + u.cycles / d.f + s / d.tau;
  return d;
}

struct FraUe {
  const UeRound& u;
  double spectral;  // W log2(1 + SNR) at full power
  double s;

  double e_co(double beta) const { return u.p_max * s / (beta * spectral); }
  double freq(double beta) const { return cpu_for_energy(u, u.e_max - e_co(beta)); }
  double delay(double beta) const {
    return u.t_dl + u.cycles / freq(beta) + s / (beta * spectral);
  }
  // Smallest fraction meeting a delay budget, or +inf.
  double min_beta(double budget) const {
    if (delay(1.0) > budget) return kInf;
    double lo = 0, hi = 1.0;
    while (hi - lo > 1e-13 * hi) {
      const double mid = 0.5 * (lo + hi);
      if (mid > 0 && delay(mid) <= budget) hi = mid;
      else lo = mid;
    }
    return hi;
  }
};

}  // namespace

ResourceDecision baseline_eb(const RoundInstance& inst, const SolverSettings& s) {
  if (inst.ues.empty()) throw DomainError("baseline_eb: no participating UE");
  ResourceDecision d;
  const double beta = 1.0 / inst.size();
  for (const auto& u : inst.ues)
    d.ues.push_back(eb_ue(u, beta, inst.bandwidth_ul, inst.payload_ul));
  finalize_decision(inst, d);
  for (auto& u : d.ues) u.t_bound = d.t;
  d.iterations = 1;
  d.objective = (1.0 - s.alpha) * d.t / s.t0;
  d.trace = {d.t};
  return d;
}

ResourceDecision baseline_fra(const RoundInstance& inst, const SolverSettings& s) {
  if (inst.ues.empty()) throw DomainError("baseline_fra: no participating UE");
  std::vector<FraUe> ues;
  for (const auto& u : inst.ues)
    ues.push_back({u, inst.bandwidth_ul * std::log2(1.0 + u.p_max / u.unit_power),
                   inst.payload_ul});
  std::vector<double> beta(ues.size());
  auto excess = [&](double t) {
    double sum = 0;
    for (size_t j = 0; j < ues.size(); ++j) {
      beta[j] = ues[j].min_beta(t);
      if (std::isinf(beta[j])) return kInf;
      sum += beta[j];
    }
    return sum - 1.0;
  };
  double lo = 0;
  for (const auto& f : ues) lo = std::max(lo, f.delay(1.0));
  double hi = 2.0 * lo;
  int grow = 0;
  while (!(excess(hi) <= 0)) {
    if (++grow > 80) throw InfeasibleError("baseline_fra: band cannot be split", {"bandwidth"});
    hi = lo + 2.0 * (hi - lo);
  }
  while (hi - lo > 1e-10 * hi) {
    const double mid = 0.5 * (lo + hi);
    if (excess(mid) <= 0) hi = mid;
    else lo = mid;
  }
  excess(hi);
  ResourceDecision d;
  for (size_t j = 0; j < ues.size(); ++j) {
    const auto& f = ues[j];
    UeDecision u;
    u.ue = f.u.ue;
    u.p = f.u.p_max;
    u.beta = beta[j];
    u.f = f.freq(beta[j]);
    u.tau = beta[j] * f.spectral;
    u.t_bound = hi;
    u.flagged = f.e_co(beta[j]) + f.u.energy_coef * f.u.f_min * f.u.f_min > f.u.e_max;
    d.ues.push_back(u);
  }
  finalize_decision(inst, d);
  for (const auto& u : d.ues)
    if (u.flagged) d.binding.push_back(fmt::format("ue{}:energy_cap_exceeded", u.ue));
  d.iterations = 1;
  d.objective = (1.0 - s.alpha) * d.t / s.t0;
  d.trace = {d.t};
  return d;
}

std::vector<int> sample_participants(int total, int count, std::mt19937_64& rng) {
  if (count < 1 || count > total)
    throw DomainError(fmt::format("sampling: subset size {} outside [1, {}]", count, total));
  std::vector<int> all(total);
  std::iota(all.begin(), all.end(), 0);
  for (int k = 0; k < count; ++k) {
    const int pick = k + static_cast<int>(below(rng, total - k));
    std::swap(all[k], all[pick]);
  }
  all.resize(count);
  std::sort(all.begin(), all.end());
  return all;
}

}  // namespace fogfl
