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

#ifndef FOGFL_ORCHESTRATOR_HPP_
#define FOGFL_ORCHESTRATOR_HPP_

#include <cstdint>
#include <string>
#include <vector>

#include "fogfl/config.hpp"
#include "fogfl/cost.hpp"
#include "fogfl/dataset.hpp"
#include "fogfl/fl_engine.hpp"
#include "fogfl/ia_solver.hpp"
#include "fogfl/topology.hpp"

namespace fogfl {

enum class Scheme { kAlg3, kAlg4, kEb, kFra, kSampling };

Scheme parse_scheme(const std::string& name);
std::string to_string(Scheme s);

struct StopParams {
  bool enabled = true;
  int k_bar = 5;
  int min_rounds = 250;
  double eps = 1e-6;
  int smoothing = 5;
};

struct FlexibleParams {
  int j_min = 20;
  double delta_t = 0.15;
  double xi = 0;
  double xi_relative = 0.1;
  int delta_g = 50;
};

// A fully resolved experiment: linear units, generated network and data.
struct Experiment {
  Network net;
  TopologySpec topology;
  std::vector<DataShard> shards;
  Dataset test;
  int local_iters = 20;
  int batch_size = 20;
  double reg = 1e-4;
  LrSchedule lr;
  int rounds = 400;
  CostParams cost;
  StopParams stop;
  FlexibleParams flexible;
  int sampling_subset = 10;
  SolverSettings solver;
  std::uint64_t seed = 1;
  std::string config_hash;
  // Evaluate test accuracy every this many rounds (0 disables).
  int accuracy_every = 1;
};

Experiment build_experiment(const RunConfig& c);

struct RoundRow {
  int g = 0;
  double loss = 0;         // loss the cost uses (reported by received UEs)
  double global_loss = 0;  // loss of w^g over every shard
  double round_delay = 0;  // accounted delay of the round
  double cum_time = 0;
  double cost = 0;
  double cost_smoothed = 0;
  int participants = 0;
  int received = 0;
  double threshold = 0;    // flexible scheme only
  int solver_iters = 0;
  double solver_objective = 0;
  double max_energy = 0;
  int energy_violations = 0;
  double test_accuracy = -1;
  std::string note;
};

struct RunSummary {
  int g_star = 0;
  bool stopped = false;
  int rounds_run = 0;
  double completion_time = 0;
  double final_loss = 0;
  double final_accuracy = 0;
};

struct RunResult {
  Scheme scheme = Scheme::kAlg3;
  std::uint64_t seed = 0;
  std::string config_hash;
  std::vector<RoundRow> rows;
  RunSummary summary;
  Matrix model;  // w at the detected optimum round
};

// Full aggregation with a per-round allocator: the IA path-following solver
// (kAlg3), one of the baselines (kEb, kFra), or a random subset (kSampling).
RunResult run_full(const Experiment& e, Scheme scheme = Scheme::kAlg3);

// Flexible aggregation driven by per-UE latencies and a growing threshold.
RunResult run_flexible(const Experiment& e);

RunResult run_scheme(const Experiment& e, Scheme scheme);

struct Threshold {
  double value = 0;
  std::vector<int> members;  // indices into the latency vector, ascending
};

// The `j_min` fastest UEs and the largest latency among them.
Threshold init_threshold(const std::vector<double>& latency, int j_min);

bool expand_check(double mean_update_norm, double xi, int rounds_since_expand,
                  int delta_g);

}  // namespace fogfl

#endif  // FOGFL_ORCHESTRATOR_HPP_
