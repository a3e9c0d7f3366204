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

#ifndef FOGFL_FEASIBILITY_HPP_
#define FOGFL_FEASIBILITY_HPP_

#include <string>
#include <vector>

#include "fogfl/ia_solver.hpp"

namespace fogfl {

struct Violation {
  int ue = -1;  // -1 for network-wide constraints
  std::string constraint;
  double value = 0;
  double limit = 0;
};

// Checks a decision against the exact round constraints (energy cap, power
// and CPU boxes, band budget, promised delay) using true rates.
std::vector<Violation> check_decision(const RoundInstance& inst,
                                      const ResourceDecision& d,
                                      double rel_slack = 1e-6);

std::string describe(const Violation& v);

}  // namespace fogfl

#endif  // FOGFL_FEASIBILITY_HPP_
