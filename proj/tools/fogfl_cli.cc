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

#include <CLI11.hpp>
#include <fmt/format.h>

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "fogfl/common.hpp"
#include "fogfl/config.hpp"
#include "fogfl/csv.hpp"
#include "fogfl/orchestrator.hpp"
#include "fogfl/presets.hpp"

namespace fs = std::filesystem;

namespace {

struct Options {
  std::string config_path;
  std::string preset;
  std::optional<std::uint64_t> seed;
  std::string out = ".";
  std::string scheme;
  int trials = 0;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw fogfl::Error(fmt::format("cannot write {}", path.string()));
  f << text;
}

// Runs every trial of one configuration with each scheme; seeds are shared
// across schemes so the comparison is matched.
void run_variant(const std::string& label, fogfl::RunConfig config,
                 const std::vector<std::string>& schemes, int trials,
                 const fs::path& out) {
  fs::create_directories(out);
  write_text(out / (label + ".ini"), fogfl::emit_config(config));
  const std::uint64_t first = config.run.seed;
  for (int t = 0; t < trials; ++t) {
    config.run.seed = first + static_cast<std::uint64_t>(t);
    const fogfl::Experiment e = fogfl::build_experiment(config);
    for (const auto& name : schemes) {
      const fogfl::Scheme s = fogfl::parse_scheme(name);
      const fs::path file =
          out / fmt::format("{}_{}_seed{}.csv", label, name, config.run.seed);
      try {
        const fogfl::RunResult r = fogfl::run_scheme(e, s);
        write_text(file, fogfl::to_csv(r));
        std::cout << fmt::format("{} G*={} T={:.6g} loss={:.6g} acc={:.4f}\n",
                                 file.string(), r.summary.g_star,
                                 r.summary.completion_time, r.summary.final_loss,
                                 r.summary.final_accuracy);
      } catch (const fogfl::Error& err) {
        throw fogfl::Error(fmt::format("{} (run {}, scheme {}, seed {})", err.what(),
                                       label, name, config.run.seed));
      }
    }
  }
}

int exit_code_for(const std::exception& e) {
  if (dynamic_cast<const fogfl::ConfigError*>(&e)) return 2;
  if (dynamic_cast<const fogfl::ConsistencyError*>(&e) ||
      dynamic_cast<const fogfl::InfeasibleError*>(&e))
    return 3;
  return 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Hierarchical federated learning over fog-cloud: simulator"};
  app.require_subcommand(1);
  Options o;

  auto* run = app.add_subcommand("run", "run one configuration");
  run->add_option("--config", o.config_path, "INI configuration file")->check(CLI::ExistingFile);
  run->add_option("--seed", o.seed, "first trial seed");
  run->add_option("--out", o.out, "output directory");
  run->add_option("--scheme", o.scheme, "alg3, alg4, eb, fra or sampling");
  run->add_option("--trials", o.trials, "number of seeds")->check(CLI::PositiveNumber);

  auto* preset = app.add_subcommand("preset", "run a figure preset");
  preset->add_option("name", o.preset, "preset name")->required();
  preset->add_option("--config", o.config_path, "INI overrides applied to every variant")
      ->check(CLI::ExistingFile);
  preset->add_option("--seed", o.seed, "first trial seed");
  preset->add_option("--out", o.out, "output directory");
  preset->add_option("--scheme", o.scheme, "run only this scheme");
  preset->add_option("--trials", o.trials, "number of seeds (default 10)")
      ->check(CLI::PositiveNumber);

  auto* list = app.add_subcommand("list-presets", "list available presets");
  auto* show = app.add_subcommand("print-config", "print the default configuration as INI");

  CLI11_PARSE(app, argc, argv);

  try {
    if (show->parsed()) {
      std::cout << fogfl::emit_config(fogfl::RunConfig{});
      return 0;
    }
    if (list->parsed()) {
      for (const auto& name : fogfl::preset_names())
        std::cout << fmt::format("{:<8} {}\n", name, fogfl::make_preset(name).description);
      return 0;
    }
    if (run->parsed()) {
      fogfl::RunConfig c =
          o.config_path.empty() ? fogfl::RunConfig{} : fogfl::load_config(o.config_path);
      if (o.seed) c.run.seed = *o.seed;
      if (!o.scheme.empty()) c.run.scheme = o.scheme;
      fogfl::parse_scheme(c.run.scheme);
      fogfl::validate(c);
      run_variant(c.run.name, c, {c.run.scheme}, o.trials > 0 ? o.trials : 1, o.out);
      return 0;
    }
    fogfl::Preset p = fogfl::make_preset(o.preset);
    std::optional<std::string> overrides;
    if (!o.config_path.empty()) {
      std::ifstream f(o.config_path);
      overrides.emplace(std::istreambuf_iterator<char>(f), std::istreambuf_iterator<char>());
    }
    for (auto& v : p.variants) {
      fogfl::RunConfig c = v.config;
      if (overrides) c = fogfl::parse_config_onto(c, *overrides, o.config_path);
      if (o.seed) c.run.seed = *o.seed;
      std::vector<std::string> schemes = v.schemes.empty() ? p.schemes : v.schemes;
      if (!o.scheme.empty()) {
        fogfl::parse_scheme(o.scheme);
        schemes = {o.scheme};
      }
      run_variant(v.label, c, schemes, o.trials > 0 ? o.trials : 10, o.out);
    }
    return 0;
  } catch (const std::exception& e) {
    std::cerr << "fogfl: " << e.what() << "\n";
    return exit_code_for(e);
  }
}
