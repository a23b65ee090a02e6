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

#pragma once

// Run configuration: flat `key = value` text with `#` comments. Numbers may
// use products and quotients of literals and `pi`, e.g. `pi/5` or `4.3/171`.

#include <cstdint>
#include <string>
#include <vector>

#include "stashort/dynamics.hpp"
#include "stashort/noise.hpp"
#include "stashort/pulses.hpp"

namespace stashort {

enum class RunMode { Shortcut, Original };
// Units of gamma1 / gamma3: plain rates, or multiples of the peak shortcut amplitude.
enum class DecayUnits { Absolute, OmegaMax };

struct RunConfig {
  PulseParams pulse;
  RunMode mode = RunMode::Shortcut;
  int steps = 4096;
  int record_stride = 8;
  bool check_convergence = true;

  NoiseConfig noise;
  int n_runs = 100;
  int jobs = 1;

  LindbladParams lindblad;
  DecayUnits decay_units = DecayUnits::Absolute;
  double gamma_a = 0.5;

  int grid_points = 11;  // per axis for figure sweeps
  std::string experiment = "simulate";
  std::string output = "out";

  // Throws Error(ConfigInvalid) naming the first violated bound.
  void validate() const;
};

// Evaluates a numeric expression; throws Error(ConfigInvalid) on bad syntax.
double parse_number(const std::string& text);

// Throws Error(ConfigInvalid) for unknown keys or malformed values.
void apply_setting(RunConfig& cfg, const std::string& key, const std::string& value);
std::string get_setting(const RunConfig& cfg, const std::string& key);

// Parses `key = value` text on top of `base`; errors carry the line number.
RunConfig parse_config(const std::string& text, RunConfig base = {});
// Throws Error(ConfigMissing) if the file cannot be read.
RunConfig load_config(const std::string& path, RunConfig base = {});

// Canonical `key = value` listing of every setting, round-trippable through parse_config.
std::string format_config(const RunConfig& cfg);

const std::vector<std::string>& config_keys();

}  // namespace stashort
