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

#include "fogfl/feasibility.hpp"

#include <cmath>

#include <fmt/format.h>

namespace fogfl {

std::vector<Violation> check_decision(const RoundInstance& inst,
                                      const ResourceDecision& d,
                                      double rel_slack) {
  std::vector<Violation> out;
  if (static_cast<int>(d.ues.size()) != inst.size()) {
    out.push_back({-1, "size", static_cast<double>(d.ues.size()),
                   static_cast<double>(inst.size())});
    return out;
  }
  auto above = [&](int ue, const char* name, double v, double limit) {
    if (!(v <= limit * (1.0 + rel_slack))) out.push_back({ue, name, v, limit});
  };
  auto below = [&](int ue, const char* name, double v, double limit) {
    if (!(v >= limit * (1.0 - rel_slack))) out.push_back({ue, name, v, limit});
  };
  double beta_sum = 0;
  for (int j = 0; j < inst.size(); ++j) {
    const UeRound& r = inst.ues[j];
    const UeDecision& u = d.ues[j];
    beta_sum += u.beta;
    below(r.ue, "beta_positive", u.beta, 0.0);
    if (!(u.beta > 0)) continue;
    const double rate = u.beta * inst.bandwidth_ul * std::log2(1.0 + u.p / r.unit_power);
    const double t_ul = inst.payload_ul / rate;
    const double e = u.p * t_ul + r.energy_coef * u.f * u.f;
    above(r.ue, "energy", e, r.e_max);
    above(r.ue, "p_max", u.p, r.p_max);
    below(r.ue, "p_floor", u.p, r.p_floor);
    above(r.ue, "f_max", u.f, r.f_max);
    below(r.ue, "f_min", u.f, r.f_min);
    const double total = r.t_dl + r.cycles / u.f + t_ul;
    below(r.ue, "delay", u.t_bound, total);
    below(r.ue, "round_delay", d.t, total);
  }
  above(-1, "bandwidth", beta_sum, 1.0);
  return out;
}

std::string describe(const Violation& v) {
  return fmt::format("{}{} value={} limit={}",
                     v.ue >= 0 ? fmt::format("ue{} ", v.ue) : std::string(),
                     v.constraint, v.value, v.limit);
}

}  // namespace fogfl
