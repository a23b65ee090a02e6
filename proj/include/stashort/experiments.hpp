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

// Experiment runners behind the command line: single simulations, figure
// sweeps and the noise Monte Carlo. Every runner writes plain CSV/text files
// into an output directory together with an echo of its configuration.

#include <string>
#include <vector>

#include "stashort/config.hpp"
#include "stashort/dynamics.hpp"
#include "stashort/errors.hpp"
#include "stashort/metrics.hpp"

namespace stashort {

struct DriveRow {
  double omega_p = 0.0;
  double omega_s = 0.0;
  double delta = 0.0;
  double theta = 0.0;
  double gamma = 0.0;
};

struct SimulationResult {
  Trajectory trajectory;
  std::vector<DriveRow> drive;  // one per recorded time
  RunSummary summary;
  OmegaMax omega_max;
  PulseArea area;          // from pump and Stokes
  PulseArea area_omega0;   // from the total amplitude
  double p2_bar_trajectory = 0.0;
  double gamma1 = 0.0;     // absolute rates actually used
  double gamma3 = 0.0;
  bool lindblad = false;
  int steps = 0;
};

TimeDependentHamiltonian original_hamiltonian(const PulseParams& p, double omega0);

// Propagates from |1>. Lindblad when either decay rate is positive.
SimulationResult simulate(const RunConfig& cfg);

// Writes trajectory.csv, summary.txt and config.txt.
void cmd_simulate(const RunConfig& cfg, const std::string& out_dir);
// Writes figN*.csv (and summaries) plus config.txt. Throws Error(ConfigInvalid) for n outside 1..8.
void cmd_figure(int n, const RunConfig& cfg, const std::string& out_dir);
// Writes noise_mc.csv, noise_mc_summary.txt and config.txt.
void cmd_noise_mc(const RunConfig& cfg, const std::string& out_dir);

// 0 ok, 2 configuration error, 3 numeric or I/O failure.
int exit_code_for(ErrorCode code);

std::string format_double(double v);

}  // namespace stashort
