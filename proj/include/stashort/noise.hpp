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

// Multiplicative piecewise-constant fluctuations on the shortcut drive and a
// seeded Monte Carlo harness around them.

#include <cstdint>
#include <functional>
#include <vector>

#include "stashort/dynamics.hpp"
#include "stashort/pulses.hpp"
#include "stashort/shortcut.hpp"

namespace stashort {

enum class NoiseChannel : unsigned { Amplitude = 1u, Angle = 2u, Detuning = 4u };

inline constexpr unsigned kAllNoiseChannels = 7u;

struct NoiseConfig {
  double amplitude = 0.1;              // varpi drawn from uniform(-amplitude, amplitude)
  double resample_interval = 1.0 / 512.0;
  std::uint64_t master_seed = 20260101;
  unsigned channels = kAllNoiseChannels;
  // One varpi track shared by every selected channel instead of one per channel.
  bool shared = false;

  bool has(NoiseChannel c) const { return (channels & static_cast<unsigned>(c)) != 0u; }
  void validate() const;
};

using DriveFunction = std::function<ModifiedDrive(double)>;

DriveFunction shortcut_drive(const PulseParams& p);

// Per-channel relative fluctuation varpi(t), constant on each resample bin
// starting at t_initial.
class NoiseTrack {
 public:
  // Random track for one run; the stream key is derived from (master_seed, run_index).
  NoiseTrack(const NoiseConfig& cfg, double t_initial, double duration, std::uint64_t run_index);
  // Frozen values for every time.
  static NoiseTrack constant(double amplitude, double angle, double detuning);

  std::uint64_t seed() const noexcept { return seed_; }
  double amplitude_factor(double t) const { return value(0, t); }
  double angle_factor(double t) const { return value(1, t); }
  double detuning_factor(double t) const { return value(2, t); }

  // Bin edges strictly inside (t_initial, t_end) where some channel jumps.
  std::vector<double> jump_times(double t_end) const;
  // Constant track holding the values in force at time t.
  NoiseTrack frozen_at(double t) const;

 private:
  NoiseTrack() = default;
  double value(int channel, double t) const;

  std::uint64_t seed_ = 0;
  double t_initial_ = 0.0;
  double interval_ = 1.0;
  std::vector<double> bins_[3];
};

// G_F = G (1 + varpi_G) for G in {omega0~, theta~, delta~}; pump and Stokes
// rebuilt from the noisy amplitude and angle, phases untouched. Channels with
// varpi = 0 return the base values unchanged.
DriveFunction noisy_drive(DriveFunction base, NoiseTrack track);

TimeDependentHamiltonian hamiltonian_from_drive(DriveFunction drive);

// Schrodinger propagation under noisy_drive(base, track), split at the jumps of
// the track so no RK4 step straddles a discontinuity. The grid's step budget is
// shared out in proportion to segment length. A track without jumps gives
// exactly propagate_schrodinger on the whole grid.
Trajectory propagate_noisy(const DriveFunction& base, const NoiseTrack& track, const CVector& psi0,
                           const TimeGrid& grid, const PropagationOptions& options = {});

struct MonteCarloStats {
  int n_runs = 0;
  int failed = 0;
  double mean_p3 = 0.0;
  double std_p3 = 0.0;
  double min_p3 = 0.0;
  double max_p3 = 0.0;
  std::vector<std::uint64_t> seeds;
  std::vector<double> p3;     // NaN for failed runs
  std::vector<bool> ok;
};

struct MonteCarloOptions {
  int steps = 4096;
  int jobs = 1;
};

MonteCarloStats monte_carlo(const PulseParams& p, const NoiseConfig& cfg, int n_runs,
                            const MonteCarloOptions& options = {});

// Final target population for a single noisy run.
double noisy_run_p3(const PulseParams& p, const NoiseConfig& cfg, std::uint64_t run_index, int steps = 4096);

}  // namespace stashort
