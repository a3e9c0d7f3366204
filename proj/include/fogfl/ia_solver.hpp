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

#ifndef FOGFL_IA_SOLVER_HPP_
#define FOGFL_IA_SOLVER_HPP_

#include <random>
#include <span>
#include <string>
#include <vector>

#include "fogfl/system_model.hpp"
#include "fogfl/topology.hpp"

namespace fogfl {

// Everything the allocator needs to know about one UE in one round.
struct UeRound {
  int ue = 0;
  int fog = 0;
  double gain = 0;
  double unit_power = 0;   // power giving an uplink SNR of one
  double p_floor = 0;
  double p_max = 0;
  double cycles = 0;       // L c S_B
  double energy_coef = 0;  // L (theta/2) c S_B
  double f_min = 0;
  double f_max = 0;
  double e_max = 0;
  double t_dl = 0;
};

struct RoundInstance {
  std::vector<UeRound> ues;
  double bandwidth_ul = 0;
  double payload_ul = 0;

  int size() const { return static_cast<int>(ues.size()); }
};

// Builds the allocation problem for the given participants. The downlink
// rate of each cell is set by its weakest participant.
RoundInstance make_round_instance(const Network& net, std::span<const double> gains,
                                  std::span<const int> participants,
                                  int local_iters);

struct ApproxCoeffs {
  double a = 0, b = 0, c = 0;
};

// Tangent plane of (1/bt) ln(1 + 1/omega) at (bt0, omega0); bt is the
// inverse bandwidth fraction and omega the inverse SNR.
ApproxCoeffs approx_coeffs(double bt0, double omega0);
double rate_lb(const ApproxCoeffs& k, double bt, double omega);
double rate_nats(double bt, double omega);

// Convex majorant of payload * p / tau around (p0, tau0); needs 2 tau > tau0.
double energy_ub(double p, double tau, double p0, double tau0, double payload);

struct ExpansionPoint {
  std::vector<double> p;
  std::vector<double> bt;     // inverse bandwidth fraction
  std::vector<double> tau;    // uplink rate, bits/s
  std::vector<double> omega;  // inverse SNR
};

// Random power in [p_floor, p_max], equal bandwidth, rate from the rate
// formula. A draw whose communication energy alone breaks the cap is redrawn
// from a halved power interval.
ExpansionPoint init_feasible(const RoundInstance& inst, std::mt19937_64& rng);

struct UeDecision {
  int ue = 0;
  double p = 0;
  double f = 0;
  double beta = 0;
  double tau = 0;      // guaranteed uplink rate
  double t_bound = 0;  // delay budget this decision promises
  DelayBreakdown delay;
  double energy = 0;
  bool flagged = false;
};

struct ResourceDecision {
  std::vector<UeDecision> ues;
  double t = 0;            // round delay: largest per-UE delay
  double objective = 0;
  int iterations = 0;
  bool converged = false;     // stopped on tolerance, not on the iteration cap
  std::vector<double> trace;  // delay measure after each outer iteration
  std::vector<std::string> binding;
  bool relaxed = false;

  double mean_t_bound() const;
  double max_energy() const;
  int flagged_count() const;
};

struct SolverSettings {
  double alpha = 0.7;
  double t0 = 100;
  double tol = 1e-6;
  double conv_tol = 1e-4;
  int max_iters = 20;
};

// Inner convex program: smallest common delay budget such that the minimum
// bandwidth shares fit into the band. `t_hint` is a budget known to be
// feasible (or any positive guess).
ResourceDecision solve_inner(const RoundInstance& inst, const ExpansionPoint& x,
                             const SolverSettings& s, double t_hint = 0);

// Inner program with one delay budget per UE, minimizing their sum.
ResourceDecision solve_inner_relaxed(const RoundInstance& inst,
                                     const ExpansionPoint& x,
                                     const SolverSettings& s);

ResourceDecision path_following(const RoundInstance& inst,
                                const SolverSettings& s, std::mt19937_64& rng);

ResourceDecision solve_relaxed(const RoundInstance& inst,
                               const SolverSettings& s, std::mt19937_64& rng);

ExpansionPoint expansion_from(const RoundInstance& inst,
                              const ResourceDecision& d);

// Fills the true delays, energies, round delay and binding constraints.
void finalize_decision(const RoundInstance& inst, ResourceDecision& d);

// Minimum bandwidth share of one UE in the inner program, exposed for tests.
struct ShareEval {
  bool feasible = false;
  double share = 0;
  double dshare = 0;  // derivative with respect to the delay budget
  double p = 0, f = 0, tau = 0, bt = 0;
};

ShareEval surrogate_share(const UeRound& ue, double bandwidth_ul, double payload_ul,
                          double p0, double bt0, double tau0, double omega0,
                          double t_budget);

}  // namespace fogfl

#endif  // FOGFL_IA_SOLVER_HPP_
