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

#include "fogfl/csv.hpp"

#include <sstream>

#include <fmt/format.h>

namespace fogfl {

const char* const kCsvHeader =
    "row,g,scheme,seed,loss,global_loss,round_delay,cum_time,cost,cost_smoothed,"
    "participants,received,threshold,solver_iters,solver_objective,max_energy,"
    "energy_violations,test_accuracy,note";

namespace {

std::string num(double v) { return fmt::format("{:.17g}", v); }

std::string quoted(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

void write_csv(const RunResult& r, std::ostream& out) {
  const std::string scheme = to_string(r.scheme);
  out << kCsvHeader << '\n';
  for (const auto& row : r.rows) {
    out << fmt::format("round,{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{},{}\n",
                       row.g, scheme, r.seed, num(row.loss), num(row.global_loss),
                       num(row.round_delay), num(row.cum_time), num(row.cost),
                       num(row.cost_smoothed), row.participants, row.received,
                       num(row.threshold), row.solver_iters, num(row.solver_objective),
                       num(row.max_energy), row.energy_violations,
                       row.test_accuracy < 0 ? std::string() : num(row.test_accuracy),
                       quoted(row.note));
  }
  const auto& s = r.summary;
  const std::string note = fmt::format("config_hash={};stopped={};rounds_run={}",
                                       r.config_hash, s.stopped ? 1 : 0, s.rounds_run);
  out << fmt::format("summary,{},{},{},{},{},,{},,,,,,,,,,{},{}\n", s.g_star, scheme,
                     r.seed, num(s.final_loss), num(s.final_loss),
                     num(s.completion_time), num(s.final_accuracy), quoted(note));
}

std::string to_csv(const RunResult& r) {
  std::ostringstream ss;
  write_csv(r, ss);
  return ss.str();
}

}  // namespace fogfl
