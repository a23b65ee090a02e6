/* Copyright 2026 The stashort Authors. All Rights Reserved.
Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at
    http://www.apache.org/licenses/LICENSE-2.0
Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "stashort/config.hpp"

#include <algorithm>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "stashort/errors.hpp"

namespace stashort {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

std::string fmt(double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

Error invalid(const std::string& what) { return Error(ErrorCode::ConfigInvalid, what); }

double parse_factor(const std::string& tok) {
  const std::string t = trim(tok);
  if (t.empty()) throw invalid("empty number");
  if (t == "pi") return std::numbers::pi;
  if (t == "-pi") return -std::numbers::pi;
  char* end = nullptr;
  errno = 0;
  const double v = std::strtod(t.c_str(), &end);
  if (end != t.c_str() + t.size() || errno == ERANGE || !std::isfinite(v)) throw invalid("not a number: '" + t + "'");
  return v;
}

int parse_int(const std::string& key, const std::string& value) {
  const double v = parse_number(value);
  if (v != std::floor(v) || std::abs(v) > 1e9) throw invalid(key + " must be an integer");
  return static_cast<int>(v);
}

bool parse_bool(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v == "true" || v == "1" || v == "yes") return true;
  if (v == "false" || v == "0" || v == "no") return false;
  throw invalid(key + " must be true or false");
}

std::uint64_t parse_u64(const std::string& key, const std::string& value) {
  const std::string v = trim(value);
  if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
    throw invalid(key + " must be a non-negative integer");
  errno = 0;
  const unsigned long long x = std::strtoull(v.c_str(), nullptr, 10);
  if (errno == ERANGE) throw invalid(key + " out of range");
  return x;
}

unsigned parse_channels(const std::string& value) {
  const std::string v = trim(value);
  if (v == "all") return kAllNoiseChannels;
  if (v == "none") return 0u;
  unsigned mask = 0;
  std::stringstream ss(v);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (item == "amplitude") mask |= static_cast<unsigned>(NoiseChannel::Amplitude);
    else if (item == "angle") mask |= static_cast<unsigned>(NoiseChannel::Angle);
    else if (item == "detuning") mask |= static_cast<unsigned>(NoiseChannel::Detuning);
    else throw invalid("unknown noise channel '" + item + "'");
  }
  return mask;
}

std::string channels_text(unsigned mask) {
  if (mask == kAllNoiseChannels) return "all";
  if (mask == 0u) return "none";
  std::string out;
  auto add = [&](NoiseChannel c, const char* name) {
    if (mask & static_cast<unsigned>(c)) out += (out.empty() ? "" : ",") + std::string(name);
  };
  add(NoiseChannel::Amplitude, "amplitude");
  add(NoiseChannel::Angle, "angle");
  add(NoiseChannel::Detuning, "detuning");
  return out;
}

}  // namespace

double parse_number(const std::string& text) {
  const std::string t = trim(text);
  if (t.empty()) throw invalid("empty number");
  // Split on '*' and '/' while leaving exponent signs such as 1e-3 alone.
  double value = 1.0;
  char op = '*';
  std::size_t start = 0;
  for (std::size_t i = 0; i <= t.size(); ++i) {
    if (i == t.size() || t[i] == '*' || t[i] == '/') {
      const double f = parse_factor(t.substr(start, i - start));
      if (op == '*') {
        value *= f;
      } else {
        if (f == 0.0) throw invalid("division by zero in '" + t + "'");
        value /= f;
      }
      if (i < t.size()) op = t[i];
      start = i + 1;
    }
  }
  return value;
}

const std::vector<std::string>& config_keys() {
  static const std::vector<std::string> keys = {
      "T",           "tau",          "tau_c",          "gamma0",        "phi",        "omega0_ref",
      "chi",         "T0",           "n",              "mode",          "steps",      "record_stride",
      "check_convergence", "noise_amplitude", "noise_interval", "noise_channels", "noise_shared", "seed",
      "n_runs",      "jobs",         "gamma1",         "gamma3",        "decay_units", "gamma_a",
      "grid_points", "experiment",   "output"};
  return keys;
}

void apply_setting(RunConfig& c, const std::string& raw_key, const std::string& value) {
  const std::string key = trim(raw_key);
  auto num = [&] { return parse_number(value); };
  if (key == "T") c.pulse.T = num();
  else if (key == "tau") c.pulse.tau = num();
  else if (key == "tau_c") c.pulse.tau_c = num();
  else if (key == "gamma0") c.pulse.gamma0 = num();
  else if (key == "phi") c.pulse.phi = num();
  else if (key == "omega0_ref") c.pulse.omega0_ref = num();
  else if (key == "chi") c.pulse.chi = num();
  else if (key == "T0") c.pulse.T0 = num();
  else if (key == "n") c.pulse.n = parse_int(key, value);
  else if (key == "mode") {
    const std::string v = trim(value);
    if (v == "shortcut") c.mode = RunMode::Shortcut;
    else if (v == "original") c.mode = RunMode::Original;
    else throw invalid("mode must be shortcut or original");
  } else if (key == "steps") c.steps = parse_int(key, value);
  else if (key == "record_stride") c.record_stride = parse_int(key, value);
  else if (key == "check_convergence") c.check_convergence = parse_bool(key, value);
  else if (key == "noise_amplitude") c.noise.amplitude = num();
  else if (key == "noise_interval") c.noise.resample_interval = num();
  else if (key == "noise_channels") c.noise.channels = parse_channels(value);
  else if (key == "noise_shared") c.noise.shared = parse_bool(key, value);
  else if (key == "seed") c.noise.master_seed = parse_u64(key, value);
  else if (key == "n_runs") c.n_runs = parse_int(key, value);
  else if (key == "jobs") c.jobs = parse_int(key, value);
  else if (key == "gamma1") c.lindblad.gamma1 = num();
  else if (key == "gamma3") c.lindblad.gamma3 = num();
  else if (key == "decay_units") {
    const std::string v = trim(value);
    if (v == "absolute") c.decay_units = DecayUnits::Absolute;
    else if (v == "omega_max") c.decay_units = DecayUnits::OmegaMax;
    else throw invalid("decay_units must be absolute or omega_max");
  } else if (key == "gamma_a") c.gamma_a = num();
  else if (key == "grid_points") c.grid_points = parse_int(key, value);
  else if (key == "experiment") c.experiment = trim(value);
  else if (key == "output") c.output = trim(value);
  else throw invalid("unknown key '" + key + "'");
}

std::string get_setting(const RunConfig& c, const std::string& raw_key) {
  const std::string key = trim(raw_key);
  auto opt = [](const auto& o) { return o ? fmt(static_cast<double>(*o)) : std::string("unset"); };
  if (key == "T") return fmt(c.pulse.T);
  if (key == "tau") return fmt(c.pulse.tau);
  if (key == "tau_c") return fmt(c.pulse.tau_c);
  if (key == "gamma0") return fmt(c.pulse.gamma0);
  if (key == "phi") return fmt(c.pulse.phi);
  if (key == "omega0_ref") return fmt(c.pulse.omega0_ref);
  if (key == "chi") return opt(c.pulse.chi);
  if (key == "T0") return opt(c.pulse.T0);
  if (key == "n") return c.pulse.n ? std::to_string(*c.pulse.n) : "unset";
  if (key == "mode") return c.mode == RunMode::Shortcut ? "shortcut" : "original";
  if (key == "steps") return std::to_string(c.steps);
  if (key == "record_stride") return std::to_string(c.record_stride);
  if (key == "check_convergence") return c.check_convergence ? "true" : "false";
  if (key == "noise_amplitude") return fmt(c.noise.amplitude);
  if (key == "noise_interval") return fmt(c.noise.resample_interval);
  if (key == "noise_channels") return channels_text(c.noise.channels);
  if (key == "noise_shared") return c.noise.shared ? "true" : "false";
  if (key == "seed") return std::to_string(c.noise.master_seed);
  if (key == "n_runs") return std::to_string(c.n_runs);
  if (key == "jobs") return std::to_string(c.jobs);
  if (key == "gamma1") return fmt(c.lindblad.gamma1);
  if (key == "gamma3") return fmt(c.lindblad.gamma3);
  if (key == "decay_units") return c.decay_units == DecayUnits::Absolute ? "absolute" : "omega_max";
  if (key == "gamma_a") return fmt(c.gamma_a);
  if (key == "grid_points") return std::to_string(c.grid_points);
  if (key == "experiment") return c.experiment;
  if (key == "output") return c.output;
  throw invalid("unknown key '" + key + "'");
}

void RunConfig::validate() const {
  pulse.validate();
  if (!(pulse.omega0_ref > 0.0)) throw invalid("omega0_ref must be positive");
  if (steps < 16) throw invalid("steps must be at least 16");
  if (record_stride < 1) throw invalid("record_stride must be at least 1");
  noise.validate();
  if (n_runs < 1) throw invalid("n_runs must be at least 1");
  if (jobs < 1) throw invalid("jobs must be at least 1");
  lindblad.validate();
  if (!(gamma_a >= 0.0)) throw invalid("gamma_a must be non-negative");
  if (grid_points < 2) throw invalid("grid_points must be at least 2");
}

RunConfig parse_config(const std::string& text, RunConfig base) {
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    const auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    line = trim(line);
    if (line.empty()) continue;
    const auto eq = line.find('=');
    if (eq == std::string::npos) throw invalid("line " + std::to_string(lineno) + ": expected key = value");
    try {
      apply_setting(base, line.substr(0, eq), line.substr(eq + 1));
    } catch (const Error& e) {
      throw invalid("line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return base;
}

RunConfig load_config(const std::string& path, RunConfig base) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw Error(ErrorCode::ConfigMissing, "cannot read config file '" + path + "'");
  std::ostringstream ss;
  ss << f.rdbuf();
  return parse_config(ss.str(), std::move(base));
}

std::string format_config(const RunConfig& c) {
  std::string out;
  for (const auto& k : config_keys()) {
    const std::string v = get_setting(c, k);
    if (v == "unset") continue;
    out += k + " = " + v + "\n";
  }
  return out;
}

}  // namespace stashort
