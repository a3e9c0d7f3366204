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

#include "fogfl/config.hpp"

#include <charconv>
#include <fstream>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

#include <boost/property_tree/ini_parser.hpp>
#include <boost/property_tree/ptree.hpp>
#include <fmt/format.h>
#include <fmt/ranges.h>

#include "fogfl/common.hpp"

namespace fogfl {

namespace {

// Calls f(section, key, field) for every configurable field, in emission
// order.
template <typename C, typename F>
void visit(C& c, F&& f) {
  f("topology", "fog_servers", c.topology.fog_servers);
  f("topology", "total_ues", c.topology.total_ues);
  f("topology", "ues_per_fog", c.topology.ues_per_fog);
  f("topology", "radius_km", c.topology.radius_km);
  f("topology", "bs_radius_km", c.topology.bs_radius_km);
  f("topology", "min_distance_km", c.topology.min_distance_km);
  f("topology", "mobility_jitter_km", c.topology.mobility_jitter_km);

  f("radio", "bandwidth_dl_hz", c.radio.bandwidth_dl_hz);
  f("radio", "bandwidth_ul_hz", c.radio.bandwidth_ul_hz);
  f("radio", "noise_psd_dbm_hz", c.radio.noise_psd_dbm_hz);
  f("radio", "snr_min_db", c.radio.snr_min_db);
  f("radio", "antennas", c.radio.antennas);
  f("radio", "bs_power_dbm", c.radio.bs_power_dbm);
  f("radio", "payload_dl_bits", c.radio.payload_dl_bits);
  f("radio", "payload_ul_bits", c.radio.payload_ul_bits);
  f("radio", "batch_bits", c.radio.batch_bits);

  f("ue", "p_max_dbm_min", c.ue.p_max_dbm_min);
  f("ue", "p_max_dbm_max", c.ue.p_max_dbm_max);
  f("ue", "cycles_per_bit_min", c.ue.cycles_per_bit_min);
  f("ue", "cycles_per_bit_max", c.ue.cycles_per_bit_max);
  f("ue", "f_max_min", c.ue.f_max_min);
  f("ue", "f_max_max", c.ue.f_max_max);
  f("ue", "f_min", c.ue.f_min);
  f("ue", "theta_half", c.ue.theta_half);
  f("ue", "e_max_j", c.ue.e_max_j);

  f("fl", "local_iters", c.fl.local_iters);
  f("fl", "batch_size", c.fl.batch_size);
  f("fl", "eta0", c.fl.eta0);
  f("fl", "lr_decay", c.fl.lr_decay);
  f("fl", "lr_mode", c.fl.lr_mode);
  f("fl", "rounds", c.fl.rounds);
  f("fl", "min_rounds", c.fl.min_rounds);
  f("fl", "regularization", c.fl.regularization);
  f("fl", "bits_per_feature", c.fl.bits_per_feature);

  f("cost", "alpha", c.cost.alpha);
  f("cost", "f0", c.cost.f0);
  f("cost", "t0", c.cost.t0);
  f("cost", "eps", c.cost.eps);
  f("cost", "k_bar", c.cost.k_bar);
  f("cost", "smoothing", c.cost.smoothing);
  f("cost", "stop", c.cost.stop);

  f("flexible", "j_min", c.flexible.j_min);
  f("flexible", "delta_t", c.flexible.delta_t);
  f("flexible", "xi", c.flexible.xi);
  f("flexible", "xi_relative", c.flexible.xi_relative);
  f("flexible", "delta_g", c.flexible.delta_g);

  f("sampling", "subset", c.sampling.subset);

  f("data", "source", c.data.source);
  f("data", "features", c.data.features);
  f("data", "classes", c.data.classes);
  f("data", "train_samples", c.data.train_samples);
  f("data", "test_samples", c.data.test_samples);
  f("data", "noise", c.data.noise);
  f("data", "overlap", c.data.overlap);
  f("data", "partition", c.data.partition);
  f("data", "mnist_train_images", c.data.mnist_train_images);
  f("data", "mnist_train_labels", c.data.mnist_train_labels);
  f("data", "mnist_test_images", c.data.mnist_test_images);
  f("data", "mnist_test_labels", c.data.mnist_test_labels);

  f("solver", "tol", c.solver.tol);
  f("solver", "conv_tol", c.solver.conv_tol);
  f("solver", "max_iters", c.solver.max_iters);

  f("run", "scheme", c.run.scheme);
  f("run", "seed", c.run.seed);
  f("run", "name", c.run.name);
}

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t");
  return s.substr(b, e - b + 1);
}

template <typename T>
T parse_number(const std::string& text, const std::string& path) {
  const std::string t = trim(text);
  T v{};
  const char* end = t.data() + t.size();
  auto [ptr, ec] = std::from_chars(t.data(), end, v);
  if (ec != std::errc() || ptr != end || t.empty())
    throw ConfigError(fmt::format("{}: cannot parse '{}'", path, text));
  return v;
}

void assign(int& field, const std::string& text, const std::string& path) {
  field = parse_number<int>(text, path);
}
void assign(std::uint64_t& field, const std::string& text, const std::string& path) {
  field = parse_number<std::uint64_t>(text, path);
}
void assign(double& field, const std::string& text, const std::string& path) {
  field = parse_number<double>(text, path);
}
void assign(bool& field, const std::string& text, const std::string& path) {
  const std::string t = trim(text);
  if (t == "true" || t == "1") field = true;
  else if (t == "false" || t == "0") field = false;
  else throw ConfigError(fmt::format("{}: expected true or false, got '{}'", path, text));
}
void assign(std::string& field, const std::string& text, const std::string&) {
  field = trim(text);
}
void assign(std::vector<int>& field, const std::string& text, const std::string& path) {
  field.clear();
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ','))
    if (!trim(item).empty()) field.push_back(parse_number<int>(item, path));
}

std::string render(int v) { return std::to_string(v); }
std::string render(std::uint64_t v) { return std::to_string(v); }
std::string render(double v) { return fmt::format("{}", v); }
std::string render(bool v) { return v ? "true" : "false"; }
std::string render(const std::string& v) { return v; }
std::string render(const std::vector<int>& v) { return fmt::format("{}", fmt::join(v, ",")); }

}  // namespace

std::vector<int> RunConfig::cell_sizes() const {
  if (!topology.ues_per_fog.empty()) return topology.ues_per_fog;
  std::vector<int> out(std::max(topology.fog_servers, 0), 0);
  for (int k = 0; k < topology.total_ues && !out.empty(); ++k) ++out[k % out.size()];
  return out;
}

void validate(const RunConfig& c) {
  auto require = [](bool ok, const std::string& msg) {
    if (!ok) throw ConfigError(msg);
  };
  const auto& t = c.topology;
  require(t.fog_servers >= 1, "topology.fog_servers: must be at least 1");
  require(t.total_ues >= 1, "topology.total_ues: must be at least 1");
  if (!t.ues_per_fog.empty()) {
    require(static_cast<int>(t.ues_per_fog.size()) == t.fog_servers,
            fmt::format("topology.ues_per_fog: {} entries for {} fog servers",
                        t.ues_per_fog.size(), t.fog_servers));
    const int sum = std::accumulate(t.ues_per_fog.begin(), t.ues_per_fog.end(), 0);
    require(sum == t.total_ues,
            fmt::format("topology.ues_per_fog: sum {} differs from topology.total_ues {}",
                        sum, t.total_ues));
    for (int v : t.ues_per_fog) require(v >= 1, "topology.ues_per_fog: every cell needs a UE");
  } else {
    require(t.total_ues >= t.fog_servers, "topology.total_ues: fewer UEs than fog servers");
  }
  require(t.radius_km > 0, "topology.radius_km: must be positive");
  require(t.bs_radius_km >= 0 && t.bs_radius_km < t.radius_km,
          "topology.bs_radius_km: must lie in [0, radius_km)");
  require(t.min_distance_km > 0, "topology.min_distance_km: must be positive");
  require(t.mobility_jitter_km >= 0, "topology.mobility_jitter_km: must be non-negative");

  const auto& r = c.radio;
  require(r.bandwidth_dl_hz > 0, "radio.bandwidth_dl_hz: must be positive");
  require(r.bandwidth_ul_hz > 0, "radio.bandwidth_ul_hz: must be positive");
  require(r.antennas >= 1, "radio.antennas: must be at least 1");
  require(r.payload_dl_bits >= 0, "radio.payload_dl_bits: must be non-negative");
  require(r.payload_ul_bits >= 0, "radio.payload_ul_bits: must be non-negative");
  require(r.batch_bits >= 0, "radio.batch_bits: must be non-negative");

  const auto& u = c.ue;
  require(u.p_max_dbm_min <= u.p_max_dbm_max, "ue.p_max_dbm_min: exceeds ue.p_max_dbm_max");
  require(u.cycles_per_bit_min > 0 && u.cycles_per_bit_min <= u.cycles_per_bit_max,
          "ue.cycles_per_bit_min: must be positive and at most ue.cycles_per_bit_max");
  require(u.f_min > 0, "ue.f_min: must be positive");
  require(u.f_max_min >= u.f_min && u.f_max_min <= u.f_max_max,
          "ue.f_max_min: must lie in [ue.f_min, ue.f_max_max]");
  require(u.theta_half > 0, "ue.theta_half: must be positive");
  require(u.e_max_j > 0, "ue.e_max_j: must be positive");

  const auto& f = c.fl;
  require(f.local_iters >= 1, "fl.local_iters: must be at least 1");
  require(f.batch_size >= 1, "fl.batch_size: must be at least 1");
  require(f.eta0 > 0, "fl.eta0: must be positive");
  require(f.lr_decay > 0, "fl.lr_decay: must be positive");
  require(f.lr_mode == "geometric" || f.lr_mode == "theoretical",
          "fl.lr_mode: expected geometric or theoretical");
  require(f.rounds >= 1, "fl.rounds: must be at least 1");
  require(f.min_rounds >= 0, "fl.min_rounds: must be non-negative");
  require(f.regularization >= 0, "fl.regularization: must be non-negative");
  require(f.bits_per_feature >= 1, "fl.bits_per_feature: must be at least 1");

  const auto& k = c.cost;
  require(k.alpha >= 0 && k.alpha <= 1, "cost.alpha: must lie in [0, 1]");
  require(k.f0 > 0, "cost.f0: must be positive");
  require(k.t0 > 0, "cost.t0: must be positive");
  require(k.eps >= 0, "cost.eps: must be non-negative");
  require(k.k_bar >= 0, "cost.k_bar: must be non-negative");
  require(k.smoothing >= 1, "cost.smoothing: must be at least 1");

  const auto& x = c.flexible;
  require(x.j_min >= 1 && x.j_min <= t.total_ues, "flexible.j_min: must lie in [1, total_ues]");
  require(x.delta_t > 0, "flexible.delta_t: must be positive");
  require(x.xi >= 0, "flexible.xi: must be non-negative");
  require(x.xi_relative >= 0, "flexible.xi_relative: must be non-negative");
  require(x.delta_g >= 1, "flexible.delta_g: must be at least 1");

  require(c.sampling.subset >= 1 && c.sampling.subset <= t.total_ues,
          "sampling.subset: must lie in [1, total_ues]");

  const auto& d = c.data;
  require(d.source == "synthetic" || d.source == "mnist", "data.source: expected synthetic or mnist");
  require(d.features >= 1, "data.features: must be at least 1");
  require(d.classes >= 2, "data.classes: must be at least 2");
  require(d.train_samples >= t.total_ues, "data.train_samples: fewer samples than UEs");
  require(d.test_samples >= 1, "data.test_samples: must be at least 1");
  require(d.noise >= 0, "data.noise: must be non-negative");
  require(d.overlap >= 0 && d.overlap <= 1, "data.overlap: must lie in [0, 1]");
  require(d.partition == "one-class" || d.partition == "iid",
          "data.partition: expected one-class or iid");
  if (d.source == "mnist")
    require(!d.mnist_train_images.empty() && !d.mnist_train_labels.empty() &&
                !d.mnist_test_images.empty() && !d.mnist_test_labels.empty(),
            "data.mnist_train_images: all four IDX paths are required for mnist");

  require(c.solver.tol > 0, "solver.tol: must be positive");
  require(c.solver.conv_tol > 0, "solver.conv_tol: must be positive");
  require(c.solver.max_iters >= 1, "solver.max_iters: must be at least 1");

  const auto& s = c.run.scheme;
  require(s == "alg3" || s == "alg4" || s == "eb" || s == "fra" || s == "sampling",
          "run.scheme: expected alg3, alg4, eb, fra or sampling");
}

RunConfig parse_config(const std::string& text, const std::string& origin) {
  return parse_config_onto(RunConfig{}, text, origin);
}

RunConfig parse_config_onto(const RunConfig& base, const std::string& text,
                            const std::string& origin) {
  boost::property_tree::ptree tree;
  std::istringstream in(text);
  try {
    boost::property_tree::ini_parser::read_ini(in, tree);
  } catch (const boost::property_tree::ini_parser_error& e) {
    throw ConfigError(fmt::format("{}: line {}: {}", origin, e.line(), e.message()));
  }
  RunConfig c = base;
  std::map<std::string, std::set<std::string>> known;
  visit(c, [&](const char* section, const char* key, auto& field) {
    known[section].insert(key);
    const std::string path = fmt::format("{}.{}", section, key);
    if (auto v = tree.get_child_optional(boost::property_tree::ptree::path_type(path, '.')))
      assign(field, v->data(), path);
  });
  for (const auto& [section, node] : tree) {
    auto it = known.find(section);
    if (it == known.end()) {
      if (node.empty()) throw ConfigError(fmt::format("{}: key outside any section", section));
      throw ConfigError(fmt::format("{}: unknown section", section));
    }
    for (const auto& [key, value] : node)
      if (!it->second.count(key))
        throw ConfigError(fmt::format("{}.{}: unknown key", section, key));
  }
  validate(c);
  return c;
}

RunConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ConfigError(fmt::format("{}: cannot open config file", path));
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_config(ss.str(), path);
}

std::string emit_config(const RunConfig& c) {
  RunConfig copy = c;
  std::string out;
  std::string current;
  visit(copy, [&](const char* section, const char* key, auto& field) {
    if (current != section) {
      if (!current.empty()) out += "\n";
      out += fmt::format("[{}]\n", section);
      current = section;
    }
    out += fmt::format("{} = {}\n", key, render(field));
  });
  return out;
}

std::string config_hash(const RunConfig& c) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (unsigned char ch : emit_config(c)) {
    h ^= ch;
    h *= 0x100000001b3ULL;
  }
  return fmt::format("{:016x}", h);
}

bool operator==(const RunConfig& a, const RunConfig& b) {
  return emit_config(a) == emit_config(b);
}

}  // namespace fogfl
