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

#include "fogfl/presets.hpp"

#include <fmt/format.h>

#include "fogfl/common.hpp"

namespace fogfl {

namespace {

RunConfig base(const std::string& name) {
  RunConfig c;
  c.run.name = name;
  c.fl.rounds = 300;
  return c;
}

std::string tag(double v) {
  std::string s = fmt::format("{}", v);
  for (char& ch : s)
    if (ch == '.') ch = 'p';
  return s;
}

}  // namespace

std::vector<std::string> preset_names() {
  return {"fig5", "fig6", "fig7", "fig8", "fig9", "fig10", "fig12"};
}

Preset make_preset(const std::string& name) {
  Preset p;
  p.name = name;
  if (name == "fig5") {
    p.description = "mini-batch size sweep, L = 10";
    p.schemes = {"alg3"};
    for (int b : {10, 20, 50}) {
      RunConfig c = base(fmt::format("fig5_b{}", b));
      c.fl.batch_size = b;
      c.fl.local_iters = 10;
      c.cost.stop = false;
      p.variants.push_back({c.run.name, c, {}});
    }
  } else if (name == "fig6") {
    p.description = "local iteration sweep, B = 20";
    p.schemes = {"alg3"};
    for (int l : {5, 10, 20, 40}) {
      RunConfig c = base(fmt::format("fig6_l{}", l));
      c.fl.local_iters = l;
      c.cost.stop = false;
      p.variants.push_back({c.run.name, c, {}});
    }
  } else if (name == "fig7") {
    p.description = "cost versus rounds for several priority weights";
    p.schemes = {"alg3"};
    for (double a : {0.1, 0.3, 0.5, 0.7, 0.9}) {
      RunConfig c = base("fig7_alpha" + tag(a));
      c.cost.alpha = a;
      c.cost.stop = false;
      p.variants.push_back({c.run.name, c, {}});
    }
  } else if (name == "fig8") {
    p.description = "completion time versus rounds for the IA allocator, EB and FRA";
    p.schemes = {"alg3", "eb", "fra"};
    RunConfig c = base("fig8");
    c.cost.stop = false;
    p.variants.push_back({c.run.name, c, {}});
  } else if (name == "fig9") {
    p.description = "completion time at the stopping round versus the energy cap";
    p.schemes = {"alg3", "eb", "fra"};
    for (double e : {0.005, 0.01, 0.02, 0.05}) {
      RunConfig c = base("fig9_emax" + tag(e));
      c.ue.e_max_j = e;
      c.fl.rounds = 400;
      p.variants.push_back({c.run.name, c, {}});
    }
  } else if (name == "fig10") {
    p.description = "received updates of the flexible scheme for several threshold steps";
    p.schemes = {"alg4"};
    for (double dt : {0.05, 0.1, 0.15, 0.2}) {
      RunConfig c = base("fig10_dt" + tag(dt));
      c.flexible.delta_t = dt;
      c.cost.stop = false;
      p.variants.push_back({c.run.name, c, {}});
    }
    RunConfig c = base("fig10_baselines");
    c.cost.stop = false;
    p.variants.push_back({c.run.name, c, {"alg3", "sampling"}});
  } else if (name == "fig12") {
    p.description = "flexible versus full aggregation versus random sampling";
    p.schemes = {"alg4", "alg3", "sampling"};
    RunConfig c = base("fig12");
    c.cost.stop = false;
    p.variants.push_back({c.run.name, c, {}});
  } else {
    throw ConfigError(fmt::format("preset: unknown name '{}'", name));
  }
  for (auto& v : p.variants) validate(v.config);
  return p;
}

}  // namespace fogfl
