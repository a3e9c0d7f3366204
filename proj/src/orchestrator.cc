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

#include "fogfl/orchestrator.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <numeric>

#include <fmt/format.h>

#include "fogfl/baselines.hpp"
#include "fogfl/common.hpp"
#include "fogfl/feasibility.hpp"
#include "fogfl/idx_reader.hpp"
#include "fogfl/logistic.hpp"
#include "fogfl/rng.hpp"

namespace fogfl {

namespace {

struct TrainOutcome {
  Matrix next;
  double loss_sum = 0;
  double update_norm = 0;  // ||sum of deltas|| / divisor
};

TrainOutcome train_round(const Experiment& e, const Matrix& w,
                         const std::vector<int>& ues, int g, double eta,
                         int divisor) {
  LocalRoundOptions opt;
  opt.local_iters = e.local_iters;
  opt.batch_size = e.batch_size;
  opt.eta = eta;
  opt.reg = e.reg;
  opt.round = g;
  std::vector<std::vector<LocalUpdate>> by_fog(e.net.cells.size());
  for (int k : ues) {
    auto rng = make_stream(e.seed, Stream::kSgd, static_cast<std::uint64_t>(g),
                           static_cast<std::uint64_t>(k));
    by_fog[e.net.ues[k].fog].push_back(local_round(w, e.shards[k], opt, rng));
  }
  TrainOutcome out;
  std::vector<Matrix> fog_deltas;
  for (const auto& updates : by_fog) {
    if (updates.empty()) continue;
    FogAggregate a = fog_aggregate(updates);
    out.loss_sum += a.loss_sum;
    fog_deltas.push_back(std::move(a.delta));
  }
  out.next = global_update(w, fog_deltas, eta, divisor);
  Matrix total = Matrix::Zero(w.rows(), w.cols());
  for (const auto& d : fog_deltas) total += d;
  out.update_norm = total.norm() / divisor;
  return out;
}

// Counts violations; anything not attributable to a flagged UE is fatal.
int audit(const RoundInstance& inst, const ResourceDecision& d, int g,
          Scheme scheme) {
  const auto v = check_decision(inst, d);
  for (const auto& x : v) {
    bool flagged = false;
    for (const auto& u : d.ues)
      if (u.ue == x.ue && u.flagged) flagged = true;
    if (!flagged)
      throw ConsistencyError(fmt::format("round {} ({}): constraint violated: {}", g,
                                         to_string(scheme), describe(x)));
  }
  return static_cast<int>(v.size());
}

double accuracy_at(const Experiment& e, const Matrix& w, int g) {
  if (e.accuracy_every <= 0 || g % e.accuracy_every != 0) return -1;
  return accuracy(w, e.test.x, e.test.y);
}

// Compact note: how many slowest UEs sit on each bound, plus flagged UEs.
std::string join_binding(const ResourceDecision& d) {
  std::map<std::string, int> counts;
  std::string extra;
  for (const auto& b : d.binding) {
    const auto colon = b.find(':');
    if (b.rfind("ue", 0) != 0) {
      extra += (extra.empty() ? "" : " ") + b;
      continue;
    }
    ++counts["slowest"];
    if (colon == std::string::npos) continue;
    std::string rest = b.substr(colon + 1);
    std::size_t pos = 0;
    while (pos <= rest.size()) {
      const auto next = rest.find(':', pos);
      ++counts[rest.substr(pos, next - pos)];
      if (next == std::string::npos) break;
      pos = next + 1;
    }
  }
  std::string s;
  for (const auto& [k, v] : counts) s += fmt::format("{}{}={}", s.empty() ? "" : " ", k, v);
  if (!extra.empty()) s += (s.empty() ? "" : " ") + extra;
  std::string flagged;
  for (const auto& u : d.ues)
    if (u.flagged) flagged += fmt::format("{}{}", flagged.empty() ? "" : ",", u.ue);
  if (!flagged.empty()) s += (s.empty() ? "" : " ") + ("flagged=" + flagged);
  return s;
}

void finish(const Experiment& e, const CostLedger& ledger, const StopState& st,
            const std::deque<Matrix>& history, const Matrix& last_model,
            RunResult& r) {
  const int executed = ledger.size();
  r.summary.rounds_run = executed;
  const auto& delay = ledger.delay();
  if (st.g_star) {
    const int gs = *st.g_star;
    r.summary.stopped = true;
    r.summary.g_star = gs;
    const int upto = std::min(gs + st.k_bar + 1, executed - 1);
    r.summary.completion_time = std::accumulate(delay.begin(), delay.begin() + upto + 1, 0.0);
    // history holds w^{g-k_bar} .. w^g for the stopping round g.
    r.model = history.front();
    r.summary.final_loss = r.rows[gs].global_loss;
  } else {
    r.summary.g_star = executed;
    r.summary.completion_time = std::accumulate(delay.begin(), delay.end(), 0.0);
    r.model = last_model;
    r.summary.final_loss = global_loss(last_model, e.shards, e.reg);
  }
  r.summary.final_accuracy = accuracy(r.model, e.test.x, e.test.y);
}

StopState make_stop_state(const Experiment& e) {
  StopState st;
  st.k_bar = e.stop.k_bar;
  st.min_rounds = e.stop.min_rounds;
  st.eps = e.stop.eps;
  return st;
}

void remember(std::deque<Matrix>& history, const Matrix& w, int k_bar) {
  history.push_back(w);
  while (static_cast<int>(history.size()) > k_bar + 1) history.pop_front();
}

}  // namespace

Scheme parse_scheme(const std::string& name) {
  if (name == "alg3") return Scheme::kAlg3;
  if (name == "alg4") return Scheme::kAlg4;
  if (name == "eb") return Scheme::kEb;
  if (name == "fra") return Scheme::kFra;
  if (name == "sampling") return Scheme::kSampling;
  throw ConfigError("run.scheme: unknown scheme '" + name + "'");
}

std::string to_string(Scheme s) {
  switch (s) {
    case Scheme::kAlg3: return "alg3";
    case Scheme::kAlg4: return "alg4";
    case Scheme::kEb: return "eb";
    case Scheme::kFra: return "fra";
    case Scheme::kSampling: return "sampling";
  }
  return "?";
}

Experiment build_experiment(const RunConfig& c) {
  validate(c);
  Experiment e;
  e.seed = c.run.seed;
  e.config_hash = config_hash(c);

  TrainTest data;
  if (c.data.source == "mnist") {
    data.train = load_idx_dataset(c.data.mnist_train_images, c.data.mnist_train_labels,
                                  c.data.classes, c.data.train_samples);
    data.test = load_idx_dataset(c.data.mnist_test_images, c.data.mnist_test_labels,
                                 c.data.classes, c.data.test_samples);
  } else {
    SyntheticSpec spec;
    spec.features = c.data.features;
    spec.classes = c.data.classes;
    spec.train_samples = c.data.train_samples;
    spec.test_samples = c.data.test_samples;
    spec.noise = c.data.noise;
    spec.overlap = c.data.overlap;
    data = make_synthetic(spec, c.run.seed);
  }
  const int features = data.train.features();
  const int classes = data.train.classes;
  e.shards = partition(data.train, c.topology.total_ues,
                       parse_partition_mode(c.data.partition), c.run.seed);
  e.test = std::move(data.test);

  RadioConfig radio;
  radio.bandwidth_dl = c.radio.bandwidth_dl_hz;
  radio.bandwidth_ul = c.radio.bandwidth_ul_hz;
  radio.noise_psd = dbm_to_watt(c.radio.noise_psd_dbm_hz);
  radio.snr_min = db_to_linear(c.radio.snr_min_db);
  radio.fog_servers = c.topology.fog_servers;
  radio.antennas = c.radio.antennas;
  radio.bs_power = dbm_to_watt(c.radio.bs_power_dbm);
  const double params = static_cast<double>(features + 1) * classes;
  radio.payload_dl = c.radio.payload_dl_bits > 0 ? c.radio.payload_dl_bits : params * 32;
  radio.payload_ul = c.radio.payload_ul_bits > 0 ? c.radio.payload_ul_bits : params * 32 + 32;
  radio.batch_bits = c.radio.batch_bits > 0
                         ? c.radio.batch_bits
                         : static_cast<double>(c.fl.batch_size) * features * c.fl.bits_per_feature;
  radio.validate();

  e.topology.ues_per_fog = c.cell_sizes();
  e.topology.radius_km = c.topology.radius_km;
  e.topology.bs_radius_km = c.topology.bs_radius_km;
  e.topology.min_distance_km = c.topology.min_distance_km;
  e.topology.mobility_jitter_km = c.topology.mobility_jitter_km;
  UeRanges ranges;
  ranges.p_max_dbm_min = c.ue.p_max_dbm_min;
  ranges.p_max_dbm_max = c.ue.p_max_dbm_max;
  ranges.cycles_min = c.ue.cycles_per_bit_min;
  ranges.cycles_max = c.ue.cycles_per_bit_max;
  ranges.f_max_min = c.ue.f_max_min;
  ranges.f_max_max = c.ue.f_max_max;
  ranges.f_min = c.ue.f_min;
  ranges.theta_half = c.ue.theta_half;
  ranges.e_max = c.ue.e_max_j;
  e.net = generate_network(e.topology, ranges, radio, c.run.seed);

  e.local_iters = c.fl.local_iters;
  e.batch_size = c.fl.batch_size;
  e.reg = c.fl.regularization;
  e.rounds = c.fl.rounds;
  e.lr.eta0 = c.fl.eta0;
  e.lr.decay = c.fl.lr_decay;
  if (c.fl.lr_mode == "theoretical") {
    e.lr.mode = LrSchedule::Mode::kTheoretical;
    e.lr.strong_convexity = c.fl.regularization;
    double mu = 0;
    for (const auto& s : e.shards) mu = std::max(mu, smoothness_bound(s.x, e.reg));
    e.lr.psi = std::max(64.0 * mu / e.reg, 4.0 * e.local_iters);
  }
  e.cost.alpha = c.cost.alpha;
  e.cost.f0 = c.cost.f0;
  e.cost.t0 = c.cost.t0;
  e.stop.enabled = c.cost.stop;
  e.stop.k_bar = c.cost.k_bar;
  e.stop.min_rounds = c.fl.min_rounds;
  e.stop.eps = c.cost.eps;
  e.stop.smoothing = c.cost.smoothing;
  e.flexible.j_min = c.flexible.j_min;
  e.flexible.delta_t = c.flexible.delta_t;
  e.flexible.xi = c.flexible.xi;
  e.flexible.xi_relative = c.flexible.xi_relative;
  e.flexible.delta_g = c.flexible.delta_g;
  e.sampling_subset = c.sampling.subset;
  e.solver.alpha = c.cost.alpha;
  e.solver.t0 = c.cost.t0;
  e.solver.tol = c.solver.tol;
  e.solver.conv_tol = c.solver.conv_tol;
  e.solver.max_iters = c.solver.max_iters;
  return e;
}

Threshold init_threshold(const std::vector<double>& latency, int j_min) {
  const int n = static_cast<int>(latency.size());
  if (j_min < 1 || j_min > n)
    throw DomainError(fmt::format("init_threshold: j_min {} outside [1, {}]", j_min, n));
  std::vector<int> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return latency[a] < latency[b]; });
  Threshold t;
  t.members.assign(order.begin(), order.begin() + j_min);
  for (int k : t.members) t.value = std::max(t.value, latency[k]);
  std::sort(t.members.begin(), t.members.end());
  return t;
}

bool expand_check(double mean_update_norm, double xi, int rounds_since_expand,
                  int delta_g) {
  return mean_update_norm < xi || rounds_since_expand >= delta_g;
}

RunResult run_full(const Experiment& e, Scheme scheme) {
  if (scheme == Scheme::kAlg4) return run_flexible(e);
  const int n = e.net.size();
  RunResult r;
  r.scheme = scheme;
  r.seed = e.seed;
  r.config_hash = e.config_hash;
  Matrix w = zero_model(e.shards.front().x.cols() - 1, e.test.classes);
  CostLedger ledger(e.cost);
  StopState st = make_stop_state(e);
  std::deque<Matrix> history;
  std::vector<double> smoothed;
  std::vector<int> everyone(n);
  std::iota(everyone.begin(), everyone.end(), 0);

  for (int g = 0; g < e.rounds; ++g) {
    const auto gains = channel_gains(e.net, e.topology, e.seed, g);
    std::vector<int> participants = everyone;
    if (scheme == Scheme::kSampling) {
      auto rng = make_stream(e.seed, Stream::kSampling, static_cast<std::uint64_t>(g));
      participants = sample_participants(n, e.sampling_subset, rng);
    }
    const RoundInstance inst = make_round_instance(e.net, gains, participants, e.local_iters);
    auto solver_rng = make_stream(e.seed, Stream::kSolverInit, static_cast<std::uint64_t>(g));
    ResourceDecision d;
    switch (scheme) {
      case Scheme::kEb: d = baseline_eb(inst, e.solver); break;
      case Scheme::kFra: d = baseline_fra(inst, e.solver); break;
      default: d = path_following(inst, e.solver, solver_rng); break;
    }
    const int violations = audit(inst, d, g, scheme);
    const int divisor = static_cast<int>(participants.size());
    const double eta = e.lr.at(g);
    TrainOutcome t = train_round(e, w, participants, g, eta, divisor);

    RoundRow row;
    row.g = g;
    row.loss = t.loss_sum / divisor;
    row.global_loss = divisor == n ? row.loss : global_loss(w, e.shards, e.reg);
    row.round_delay = d.t;
    row.cost = ledger.update(row.loss, d.t);
    row.cum_time = ledger.cum_time().back();
    smoothed.push_back(trailing_mean(ledger.cost(), g, e.stop.smoothing));
    row.cost_smoothed = smoothed.back();
    row.participants = divisor;
    row.received = divisor;
    row.solver_iters = d.iterations;
    row.solver_objective = d.objective;
    row.max_energy = d.max_energy();
    row.energy_violations = violations;
    row.test_accuracy = accuracy_at(e, w, g);
    row.note = join_binding(d);
    r.rows.push_back(row);
    remember(history, w, st.k_bar);
    if (e.stop.enabled && g > 0) {
      if (stop_check(st, smoothed[g], smoothed[g - 1], g).stop) break;
    }
    w = std::move(t.next);
  }
  finish(e, ledger, st, history, w, r);
  return r;
}

RunResult run_flexible(const Experiment& e) {
  const int n = e.net.size();
  RunResult r;
  r.scheme = Scheme::kAlg4;
  r.seed = e.seed;
  r.config_hash = e.config_hash;
  Matrix w = zero_model(e.shards.front().x.cols() - 1, e.test.classes);
  CostLedger ledger(e.cost);
  StopState st = make_stop_state(e);
  std::deque<Matrix> history;
  std::vector<double> smoothed;
  std::vector<int> everyone(n);
  std::iota(everyone.begin(), everyone.end(), 0);

  std::vector<bool> member(n, false);
  int members = 0;
  double threshold = 0;
  double xi = e.flexible.xi;
  double last_norm = 0;
  int last_received = 0;
  int since_expand = 0;
  double reported_loss = 0;

  for (int g = 0; g < e.rounds; ++g) {
    const auto gains = channel_gains(e.net, e.topology, e.seed, g);
    const RoundInstance inst = make_round_instance(e.net, gains, everyone, e.local_iters);
    auto solver_rng = make_stream(e.seed, Stream::kSolverInit, static_cast<std::uint64_t>(g));
    const ResourceDecision d = solve_relaxed(inst, e.solver, solver_rng);
    const int violations = audit(inst, d, g, Scheme::kAlg4);
    std::vector<double> latency(n);
    for (int k = 0; k < n; ++k) latency[k] = d.ues[k].t_bound;

    if (g == 0) {
      const Threshold t0 = init_threshold(latency, e.flexible.j_min);
      threshold = t0.value;
      for (int k = 0; k < n; ++k)
        if (latency[k] <= threshold && !member[k]) {
          member[k] = true;
          ++members;
        }
    } else if ((members < n || last_received < n) &&
               expand_check(last_norm, xi, since_expand, e.flexible.delta_g)) {
      threshold += e.flexible.delta_t;
      for (int k = 0; k < n; ++k)
        if (latency[k] <= threshold && !member[k]) {
          member[k] = true;
          ++members;
        }
      since_expand = 0;
    } else {
      ++since_expand;
    }

    std::vector<int> received;
    for (int k = 0; k < n; ++k)
      if (member[k] && latency[k] <= threshold) received.push_back(k);
    const double eta = e.lr.at(g);
    TrainOutcome t = train_round(e, w, received, g, eta, members);
    last_norm = t.update_norm;
    last_received = static_cast<int>(received.size());
    if (g == 0 && !(xi > 0)) xi = e.flexible.xi_relative * t.update_norm;

    RoundRow row;
    row.g = g;
    // The cloud only hears losses from UEs that reported; with none it keeps
    // the previous value.
    if (last_received > 0) reported_loss = t.loss_sum / last_received;
    row.loss = reported_loss;
    row.global_loss = last_received == n ? row.loss : global_loss(w, e.shards, e.reg);
    row.round_delay = threshold;
    row.cost = ledger.update(row.loss, threshold);
    row.cum_time = ledger.cum_time().back();
    smoothed.push_back(trailing_mean(ledger.cost(), g, e.stop.smoothing));
    row.cost_smoothed = smoothed.back();
    row.participants = members;
    row.received = last_received;
    row.threshold = threshold;
    row.solver_iters = d.iterations;
    row.solver_objective = d.objective;
    row.max_energy = d.max_energy();
    row.energy_violations = violations;
    row.test_accuracy = accuracy_at(e, w, g);
    row.note = join_binding(d);
    r.rows.push_back(row);
    remember(history, w, st.k_bar);
    if (e.stop.enabled && g > 0) {
      if (stop_check(st, smoothed[g], smoothed[g - 1], g, members == n).stop) break;
    }
    w = std::move(t.next);
  }
  finish(e, ledger, st, history, w, r);
  return r;
}

RunResult run_scheme(const Experiment& e, Scheme scheme) {
  return scheme == Scheme::kAlg4 ? run_flexible(e) : run_full(e, scheme);
}

}  // namespace fogfl
