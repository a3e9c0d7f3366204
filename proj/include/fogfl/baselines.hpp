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

#ifndef FOGFL_BASELINES_HPP_
#define FOGFL_BASELINES_HPP_

#include <random>
#include <vector>

#include "fogfl/ia_solver.hpp"

namespace fogfl {

// Equal bandwidth: every UE gets 1/J of the band and picks its own power and
// CPU frequency to minimize its delay under the energy cap.
ResourceDecision baseline_eb(const RoundInstance& inst, const SolverSettings& s);

// Full power: every UE transmits at its power cap, runs its CPU as fast as
// the remaining energy allows, and the band is split to minimize the round
// delay. A UE whose communication energy alone breaks the cap runs at f_min
// and is flagged.
ResourceDecision baseline_fra(const RoundInstance& inst, const SolverSettings& s);

// Uniformly random subset of `count` UEs out of `total`, in increasing order.
std::vector<int> sample_participants(int total, int count, std::mt19937_64& rng);

}  // namespace fogfl

#endif  // FOGFL_BASELINES_HPP_
