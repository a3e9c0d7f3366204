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

#include "fogfl/ia_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <numeric>

#include <boost/math/tools/roots.hpp>
#include <fmt/format.h>

#include "fogfl/common.hpp"
#include "fogfl/rng.hpp"

namespace fogfl {

namespace {

constexpr double kLn2 = std::numbers::ln2;
constexpr double kInf = std::numeric_limits<double>::infinity();

struct RelTol {
  double rel;
  bool operator()(double a, double b) const {
    return std::fabs(b - a) <= rel * std::max(std::fabs(a), std::fabs(b));
  }
};

// Root of a continuous (or monotone with jumps) function on [lo, hi] given
// opposite signs at the ends. Returns the bracket.
template <typename F>
std::pair<double, double> bracket_root(F f, double lo, double hi, double flo,
                                       double fhi, double rel) {
  if (flo == 0) return {lo, lo};
  if (fhi == 0) return {hi, hi};
  boost::uintmax_t iters = 200;
  return boost::math::tools::toms748_solve(f, lo, hi, flo, fhi, RelTol{rel}, iters);
}

// Smallest x in (lo, hi] with h(x) <= 0 for a non-increasing h that may be
// +inf near lo. Requires h(hi) <= 0; returns a point on the feasible side.
template <typename H>
double smallest_feasible(H h, double lo, double hi, double rel) {
  double hlo = kInf;
  double hhi = h(hi);
  while (std::isinf(hlo) && hi - lo > rel * hi) {
    const double mid = 0.5 * (lo + hi);
    const double hm = h(mid);
    if (hm <= 0) {
      hi = mid;
      hhi = hm;
    } else {
      lo = mid;
      hlo = hm;
    }
  }
  if (std::isinf(hlo) || hi - lo <= rel * hi) return hi;
  auto r = bracket_root(h, lo, hi, hlo, hhi, rel);
  return r.second;
}

enum class LowerKind { kCpu, kPowerFloor, kTrust };

// Per-UE slice of the inner convex program for a fixed expansion point.
class Surrogate {
 public:
  Surrogate(const UeRound& u, double w, double s, double p0, double bt0,
            double tau0, double omega0)
      : u_(u), w_(w), s_(s), p0_(p0), tau0_(tau0),
        k_(approx_coeffs(bt0, omega0)), a2_(2.0 * tau0 * p0 / s) {}

  ShareEval eval(double budget, bool with_derivative) const {
    ShareEval out;
    const double d = budget - u_.t_dl;
    const double cp_min = u_.cycles / u_.f_max;
    if (!(d > cp_min)) return out;
    const double tau_cpu = s_ / (d - cp_min);
    const double tau_trust = 0.5 * tau0_ * (1.0 + 1e-9);
    double lo = std::max(tau_cpu, tau_trust);
    LowerKind kind = tau_cpu >= tau_trust ? LowerKind::kCpu : LowerKind::kTrust;
    const double hi =
        w_ * (k_.a - k_.c - k_.b * u_.unit_power / u_.p_max) / kLn2;
    if (!(lo < hi)) return out;
    const double floor2 = u_.p_floor * u_.p_floor;
    auto g = [&](double tau) { return a2_ * budget_r(tau, d) - floor2; };
    const double ghi = g(hi);
    if (ghi < 0) return out;
    const double glo = g(lo);
    if (glo < 0) {
      lo = bracket_root(g, lo, hi, glo, ghi, 1e-14).second;
      kind = LowerKind::kPowerFloor;
    }
    auto dv = [&](double tau) { return value_slope(tau, d); };
    double tau;
    bool at_lower = false;
    bool at_cap = false;
    const double dlo = dv(lo);
    if (dlo <= 0) {
      tau = lo;
      at_lower = true;
    } else {
      const double dhi = dv(hi);
      if (dhi >= 0) {
        tau = hi;
      } else {
        auto r = bracket_root(dv, lo, hi, dlo, dhi, 1e-13);
        tau = 0.5 * (r.first + r.second);
        // The slope jumps down where the energy-optimal power reaches p_max.
        at_cap = a2_ * budget_r(tau, d) >= u_.p_max * u_.p_max * (1.0 - 1e-9);
      }
    }
    const double f = freq(tau, d);
    const double pe = std::sqrt(std::max(0.0, a2_ * budget_r(tau, d)));
    const double p = std::max(u_.p_floor, std::min(u_.p_max, pe));
    const double bt =
        (k_.a - k_.b * u_.unit_power / p - tau * kLn2 / w_) / k_.c;
    if (!(bt > 0)) return out;
    out.feasible = true;
    out.p = p;
    out.f = f;
    out.tau = tau;
    out.bt = bt;
    out.share = 1.0 / bt;
    if (!with_derivative) return out;

    const double bn = k_.b * u_.unit_power;
    const bool p_free = pe < u_.p_max;
    const bool f_free = f > u_.f_min;
    double dvalue = 0;
    if ((at_lower && kind == LowerKind::kPowerFloor) || at_cap) {
      const double dtau = -dr_dd(tau, d) / dr_dtau(tau, d);
      dvalue = -kLn2 / w_ * dtau;
    } else if (at_lower && kind == LowerKind::kCpu) {
      const double gap = d - cp_min;
      const double dtau = -s_ / (gap * gap);
      const double u = 2.0 * tau - tau0_;
      const double dr = s_ * p0_ / (u * u) * dtau;
      const double dp = p_free ? a2_ * dr / (2.0 * pe) : 0.0;
      dvalue = bn * dp / (p * p) - kLn2 / w_ * dtau;
    } else {
      const double dp = (p_free && f_free) ? a2_ * dr_dd(tau, d) / (2.0 * pe) : 0.0;
      dvalue = bn * dp / (p * p);
    }
    out.dshare = -(dvalue / k_.c) / (bt * bt);
    return out;
  }

 private:
  double freq(double tau, double d) const {
    const double gap = d - s_ / tau;
    if (!(gap > 0)) return kInf;
    return std::clamp(u_.cycles / gap, u_.f_min, u_.f_max);
  }

  // Energy left for the quadratic power term of the majorant.
  double budget_r(double tau, double d) const {
    const double f = freq(tau, d);
    return u_.e_max - u_.energy_coef * f * f -
           s_ * p0_ / (2.0 * (2.0 * tau - tau0_));
  }

  double dr_dtau(double tau, double d) const {
    const double f = freq(tau, d);
    const double u = 2.0 * tau - tau0_;
    double r = s_ * p0_ / (u * u);
    if (f > u_.f_min)
      r += 2.0 * u_.energy_coef * f * f * f * s_ / (u_.cycles * tau * tau);
    return r;
  }

  double dr_dd(double tau, double d) const {
    const double f = freq(tau, d);
    if (!(f > u_.f_min)) return 0.0;
    return 2.0 * u_.energy_coef * f * f * f / u_.cycles;
  }

  double value_slope(double tau, double d) const {
    const double r = budget_r(tau, d);
    const double pe = std::sqrt(std::max(0.0, a2_ * r));
    if (pe >= u_.p_max || pe <= 0) return -kLn2 / w_;
    const double dp = a2_ * dr_dtau(tau, d) / (2.0 * pe);
    return k_.b * u_.unit_power * dp / (pe * pe) - kLn2 / w_;
  }

  const UeRound& u_;
  double w_, s_, p0_, tau0_;
  ApproxCoeffs k_;
  double a2_;
};

std::vector<Surrogate> build_surrogates(const RoundInstance& inst,
                                        const ExpansionPoint& x) {
  std::vector<Surrogate> out;
  out.reserve(inst.ues.size());
  for (int j = 0; j < inst.size(); ++j)
    out.emplace_back(inst.ues[j], inst.bandwidth_ul, inst.payload_ul, x.p[j],
                     x.bt[j], x.tau[j], x.omega[j]);
  return out;
}

double cpu_limited_delay(const UeRound& u) { return u.t_dl + u.cycles / u.f_max; }

UeDecision to_decision(const UeRound& u, const ShareEval& e, double budget) {
  UeDecision d;
  d.ue = u.ue;
  d.p = e.p;
  d.f = e.f;
  d.beta = e.share;
  d.tau = e.tau;
  d.t_bound = budget;
  return d;
}

void check_expansion(const RoundInstance& inst, const ExpansionPoint& x) {
  const size_t n = inst.ues.size();
  if (x.p.size() != n || x.bt.size() != n || x.tau.size() != n || x.omega.size() != n)
    throw DomainError("inner program: expansion point size mismatch");
}

double delay_measure(const ResourceDecision& d) {
  if (d.relaxed) return d.mean_t_bound();
  double t = 0;
  for (const auto& u : d.ues) t = std::max(t, u.t_bound);
  return t;
}

ResourceDecision follow_path(const RoundInstance& inst, const SolverSettings& s,
                             std::mt19937_64& rng, bool relaxed) {
  if (inst.ues.empty()) throw DomainError("allocator: no participating UE");
  ExpansionPoint x = init_feasible(inst, rng);
  ResourceDecision best;
  std::vector<double> trace;
  double prev = kInf;
  double hint = 0;
  bool converged = false;
  for (int it = 0; it < s.max_iters; ++it) {
    ResourceDecision d =
        relaxed ? solve_inner_relaxed(inst, x, s) : solve_inner(inst, x, s, hint);
    const double m = delay_measure(d);
    if (it > 0 && m > prev * (1.0 + 1e-6))
      throw ConsistencyError(fmt::format(
          "path following increased the delay measure from {} to {} at iteration {}",
          prev, m, it + 1));
    if (it > 0 && m >= prev) {
      converged = true;
      break;
    }
    trace.push_back(m);
    best = std::move(d);
    if (it > 0 && prev - m <= s.conv_tol * prev) {
      converged = true;
      break;
    }
    prev = m;
    hint = m;
    x = expansion_from(inst, best);
  }
  best.trace = trace;
  best.iterations = static_cast<int>(trace.size());
  best.converged = converged;
  best.objective = (1.0 - s.alpha) * trace.back() / s.t0;
  return best;
}

}  // namespace

RoundInstance make_round_instance(const Network& net, std::span<const double> gains,
                                  std::span<const int> participants,
                                  int local_iters) {
  const RadioConfig& radio = net.radio;
  RoundInstance inst;
  inst.bandwidth_ul = radio.bandwidth_ul;
  inst.payload_ul = radio.payload_ul;
  std::vector<std::vector<double>> cell_gains(net.cells.size());
  for (int k : participants) cell_gains[net.ues[k].fog].push_back(gains[k]);
  std::vector<double> t_dl(net.cells.size(), 0.0);
  for (size_t i = 0; i < cell_gains.size(); ++i)
    if (!cell_gains[i].empty()) t_dl[i] = radio.payload_dl / rate_dl(cell_gains[i], radio);
  for (int k : participants) {
    const UeProfile& p = net.ues[k];
    UeRound u;
    u.ue = k;
    u.fog = p.fog;
    u.gain = gains[k];
    u.unit_power = unit_snr_power(gains[k], radio);
    u.p_floor = radio.snr_min * u.unit_power;
    u.p_max = p.p_max;
    u.cycles = local_iters * p.cycles_per_bit * radio.batch_bits;
    u.energy_coef = local_iters * p.theta_half * p.cycles_per_bit * radio.batch_bits;
    u.f_min = p.f_min;
    u.f_max = p.f_max;
    u.e_max = p.e_max;
    u.t_dl = t_dl[p.fog];
    if (!(u.p_floor < u.p_max))
      throw InfeasibleError(fmt::format("UE {} cannot reach the minimum SNR at full power", k),
                            {fmt::format("ue{}:p_floor", k)});
    inst.ues.push_back(u);
  }
  return inst;
}

ApproxCoeffs approx_coeffs(double bt0, double omega0) {
  if (!(bt0 >= 1) || !(omega0 > 0))
    throw DomainError("approx_coeffs: need bt0 >= 1 and omega0 > 0");
  const double l = std::log1p(1.0 / omega0);
  ApproxCoeffs k;
  k.a = 2.0 * l / bt0 + 1.0 / (bt0 * (omega0 + 1.0));
  k.b = 1.0 / (bt0 * omega0 * (omega0 + 1.0));
  k.c = l / (bt0 * bt0);
  return k;
}

double rate_lb(const ApproxCoeffs& k, double bt, double omega) {
  return k.a - k.b * omega - k.c * bt;
}

double rate_nats(double bt, double omega) { return std::log1p(1.0 / omega) / bt; }

double energy_ub(double p, double tau, double p0, double tau0, double payload) {
  if (!(2.0 * tau > tau0)) throw DomainError("energy_ub: rate outside the trust region");
  return 0.5 * payload * (p * p / (tau0 * p0) + p0 / (2.0 * tau - tau0));
}

ExpansionPoint init_feasible(const RoundInstance& inst, std::mt19937_64& rng) {
  const int n = inst.size();
  ExpansionPoint x;
  x.p.resize(n);
  x.bt.assign(n, static_cast<double>(n));
  x.tau.resize(n);
  x.omega.resize(n);
  for (int j = 0; j < n; ++j) {
    const UeRound& u = inst.ues[j];
    if (!(u.p_floor <= u.p_max))
      throw InfeasibleError(fmt::format("UE {}: power floor above the power cap", u.ue),
                            {fmt::format("ue{}:p_floor", u.ue)});
    double width = u.p_max - u.p_floor;
    bool ok = false;
    for (int attempt = 0; attempt < 60 && !ok; ++attempt, width *= 0.5) {
      const double p0 = u.p_floor + width * uniform01(rng);
      const double tau0 = inst.bandwidth_ul / n * std::log2(1.0 + p0 / u.unit_power);
      const double e = inst.payload_ul * p0 / tau0 + u.energy_coef * u.f_min * u.f_min;
      x.p[j] = p0;
      x.tau[j] = tau0;
      x.omega[j] = u.unit_power / p0;
      ok = e <= u.e_max;
    }
    if (!ok)
      throw InfeasibleError(
          fmt::format("UE {}: no energy-feasible starting point with an equal bandwidth share", u.ue),
          {fmt::format("ue{}:energy", u.ue)});
  }
  return x;
}

ShareEval surrogate_share(const UeRound& ue, double bandwidth_ul, double payload_ul,
                          double p0, double bt0, double tau0, double omega0,
                          double t_budget) {
  return Surrogate(ue, bandwidth_ul, payload_ul, p0, bt0, tau0, omega0)
      .eval(t_budget, true);
}

ResourceDecision solve_inner(const RoundInstance& inst, const ExpansionPoint& x,
                             const SolverSettings& s, double t_hint) {
  check_expansion(inst, x);
  const auto sur = build_surrogates(inst, x);
  std::vector<ShareEval> evals(inst.ues.size());
  auto excess = [&](double t) {
    double sum = 0;
    for (size_t j = 0; j < sur.size(); ++j) {
      evals[j] = sur[j].eval(t, false);
      if (!evals[j].feasible) return kInf;
      sum += evals[j].share;
    }
    return sum - 1.0;
  };
  double lo = 0;
  for (const auto& u : inst.ues) lo = std::max(lo, cpu_limited_delay(u));
  double hi = t_hint > lo ? t_hint : 2.0 * lo;
  int grow = 0;
  while (!(excess(hi) <= 0)) {
    if (++grow > 80)
      throw InfeasibleError("inner program: no common delay budget fits the band",
                            {"bandwidth", "energy"});
    hi = lo + 2.0 * (hi - lo);
  }
  const double t = smallest_feasible(excess, lo, hi, std::min(1e-11, s.tol * 1e-4));
  if (!(excess(t) <= 0))
    throw ConsistencyError("inner program: final budget is not feasible");
  ResourceDecision d;
  for (size_t j = 0; j < sur.size(); ++j) d.ues.push_back(to_decision(inst.ues[j], evals[j], t));
  finalize_decision(inst, d);
  d.objective = (1.0 - s.alpha) * t / s.t0;
  return d;
}

ResourceDecision solve_inner_relaxed(const RoundInstance& inst,
                                     const ExpansionPoint& x,
                                     const SolverSettings& s) {
  check_expansion(inst, x);
  const auto sur = build_surrogates(inst, x);
  const int n = inst.size();
  const double rel = std::min(1e-11, s.tol * 1e-4);

  // Smallest budget at which each UE fits with the whole band.
  std::vector<double> t_min(n), t_cpu(n);
  for (int j = 0; j < n; ++j) {
    t_cpu[j] = cpu_limited_delay(inst.ues[j]);
    auto h = [&](double t) {
      const ShareEval e = sur[j].eval(t, false);
      return e.feasible ? e.share - 1.0 : kInf;
    };
    double hi = 2.0 * t_cpu[j];
    int grow = 0;
    while (!(h(hi) <= 0)) {
      if (++grow > 80)
        throw InfeasibleError(fmt::format("UE {}: infeasible even with the whole band",
                                          inst.ues[j].ue),
                              {fmt::format("ue{}:bandwidth", inst.ues[j].ue)});
      hi = t_cpu[j] + 2.0 * (hi - t_cpu[j]);
    }
    t_min[j] = smallest_feasible(h, t_cpu[j], hi, rel);
  }

  std::vector<double> t_at(n);
  std::vector<ShareEval> ev(n);
  // Budgets minimizing t + lambda * share(t), one UE at a time.
  auto place = [&](double lambda) {
    double sum = 0;
    for (int j = 0; j < n; ++j) {
      const double target = -1.0 / lambda;
      ShareEval e = sur[j].eval(t_min[j], true);
      double t = t_min[j];
      if (e.dshare < target) {
        auto slope = [&](double tt) {
          const ShareEval q = sur[j].eval(tt, true);
          return q.feasible ? q.dshare - target : -kInf;
        };
        double lo = t_min[j];
        double span = std::max(t_min[j] - t_cpu[j], 1e-9 * t_min[j]);
        double hi = lo + span;
        double shi = slope(hi);
        int grow = 0;
        while (shi < 0 && grow++ < 80) {
          lo = hi;
          span *= 2.0;
          hi = t_min[j] + span;
          shi = slope(hi);
        }
        if (shi >= 0) {
          const double slo = slope(lo);
          auto r = bracket_root(slope, lo, hi, slo, shi, 1e-12);
          t = r.second;
        } else {
          t = hi;
        }
        e = sur[j].eval(t, false);
      }
      t_at[j] = t;
      ev[j] = e;
      sum += e.share;
    }
    return sum - 1.0;
  };

  if (n > 1) {
    auto h = [&](double log_lambda) { return place(std::exp(log_lambda)); };
    // Scale of the multiplier: budget per unit of share.
    double mean_t = 0;
    for (double t : t_min) mean_t += t;
    mean_t /= n;
    double a = std::log(mean_t) - 10.0, b = a + 2.0;
    double ha = h(a);
    int grow = 0;
    while (ha <= 0 && grow++ < 60) {
      a -= 4.0;
      ha = h(a);
    }
    double hb = h(b);
    grow = 0;
    while (hb > 0) {
      if (++grow > 200)
        throw InfeasibleError("relaxed program: shares cannot fit into the band",
                              {"bandwidth"});
      a = b;
      ha = hb;
      b += 2.0;
      hb = h(b);
    }
    double u = a;
    if (ha > 0) u = bracket_root(h, a, b, ha, hb, 1e-13).second;
    if (!(h(u) <= 0)) {
      // Guard against a bracket end that sits just on the wrong side.
      u = b;
      if (!(h(u) <= 0)) throw ConsistencyError("relaxed program: final multiplier infeasible");
    }
  } else {
    t_at[0] = t_min[0];
    ev[0] = sur[0].eval(t_min[0], false);
  }

  ResourceDecision d;
  d.relaxed = true;
  for (int j = 0; j < n; ++j) d.ues.push_back(to_decision(inst.ues[j], ev[j], t_at[j]));
  finalize_decision(inst, d);
  d.objective = (1.0 - s.alpha) * d.mean_t_bound() / s.t0;
  return d;
}

ExpansionPoint expansion_from(const RoundInstance& inst, const ResourceDecision& d) {
  ExpansionPoint x;
  for (int j = 0; j < inst.size(); ++j) {
    const UeDecision& u = d.ues[j];
    x.p.push_back(u.p);
    x.bt.push_back(std::max(1.0, 1.0 / u.beta));
    x.tau.push_back(u.tau);
    x.omega.push_back(inst.ues[j].unit_power / u.p);
  }
  return x;
}

void finalize_decision(const RoundInstance& inst, ResourceDecision& d) {
  double worst = 0;
  double beta_sum = 0;
  for (int j = 0; j < inst.size(); ++j) {
    const UeRound& r = inst.ues[j];
    UeDecision& u = d.ues[j];
    const double rate =
        u.beta * inst.bandwidth_ul * std::log2(1.0 + u.p / r.unit_power);
    u.delay.t_dl = r.t_dl;
    u.delay.t_cp = r.cycles / u.f;
    u.delay.t_ul = inst.payload_ul / rate;
    u.energy = u.p * u.delay.t_ul + r.energy_coef * u.f * u.f;
    worst = std::max(worst, u.delay.total());
    beta_sum += u.beta;
  }
  d.t = worst;
  d.binding.clear();
  for (int j = 0; j < inst.size(); ++j) {
    const UeRound& r = inst.ues[j];
    const UeDecision& u = d.ues[j];
    if (u.delay.total() < worst * (1.0 - 1e-6)) continue;
    std::string tag = fmt::format("ue{}", r.ue);
    if (u.energy >= r.e_max * (1.0 - 1e-6)) tag += ":energy";
    if (u.p >= r.p_max * (1.0 - 1e-9)) tag += ":p_max";
    if (u.p <= r.p_floor * (1.0 + 1e-9)) tag += ":p_floor";
    if (u.f >= r.f_max * (1.0 - 1e-9)) tag += ":f_max";
    if (u.f <= r.f_min * (1.0 + 1e-9)) tag += ":f_min";
    d.binding.push_back(tag);
  }
  if (beta_sum >= 1.0 - 1e-6) d.binding.push_back("bandwidth");
}

double ResourceDecision::mean_t_bound() const {
  if (ues.empty()) return 0;
  double s = 0;
  for (const auto& u : ues) s += u.t_bound;
  return s / static_cast<double>(ues.size());
}

double ResourceDecision::max_energy() const {
  double e = 0;
  for (const auto& u : ues) e = std::max(e, u.energy);
  return e;
}

int ResourceDecision::flagged_count() const {
  int n = 0;
  for (const auto& u : ues) n += u.flagged ? 1 : 0;
  return n;
}

ResourceDecision path_following(const RoundInstance& inst, const SolverSettings& s,
                                std::mt19937_64& rng) {
  return follow_path(inst, s, rng, false);
}

ResourceDecision solve_relaxed(const RoundInstance& inst, const SolverSettings& s,
                               std::mt19937_64& rng) {
  return follow_path(inst, s, rng, true);
}

}  // namespace fogfl
