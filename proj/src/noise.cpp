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

#include "stashort/noise.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <utility>

#include "parallel.hpp"
#include "stashort/errors.hpp"

namespace stashort {

void NoiseConfig::validate() const {
  if (!(amplitude >= 0.0 && amplitude < 1.0))
    throw Error(ErrorCode::ConfigInvalid, "noise amplitude must lie in [0, 1)");
  if (!(resample_interval > 0.0) || !std::isfinite(resample_interval))
    throw Error(ErrorCode::ConfigInvalid, "noise resample interval must be positive");
  if ((channels & ~kAllNoiseChannels) != 0u) throw Error(ErrorCode::ConfigInvalid, "unknown noise channel");
}

DriveFunction shortcut_drive(const PulseParams& p) {
  p.validate();
  return [p](double t) { return modified_drive(frame_at(t, p)); };
}

NoiseTrack::NoiseTrack(const NoiseConfig& cfg, double t_initial, double duration, std::uint64_t run_index) {
  cfg.validate();
  const RandomStream base = RandomStream::derive(cfg.master_seed, run_index);
  seed_ = base.key();
  t_initial_ = t_initial;
  interval_ = cfg.resample_interval;
  // One extra bin covers the closing endpoint.
  const auto n = static_cast<std::size_t>(std::ceil(duration / interval_ - 1e-9)) + 1;
  const NoiseChannel order[3] = {NoiseChannel::Amplitude, NoiseChannel::Angle, NoiseChannel::Detuning};
  for (int c = 0; c < 3; ++c) {
    bins_[c].assign(n, 0.0);
    if (!cfg.has(order[c]) || cfg.amplitude == 0.0) continue;
    // Channel streams are counter-offset so each bin is random access.
    const int src = cfg.shared ? 0 : c;
    for (std::size_t k = 0; k < n; ++k) {
      RandomStream s(seed_, 3 * k + static_cast<std::uint64_t>(src));
      bins_[c][k] = s.uniform(-cfg.amplitude, cfg.amplitude);
    }
  }
}

NoiseTrack NoiseTrack::constant(double amplitude, double angle, double detuning) {
  NoiseTrack tr;
  tr.interval_ = std::numeric_limits<double>::infinity();
  tr.bins_[0] = {amplitude};
  tr.bins_[1] = {angle};
  tr.bins_[2] = {detuning};
  return tr;
}

double NoiseTrack::value(int channel, double t) const {
  const auto& b = bins_[channel];
  if (b.size() == 1) return b[0];
  const double x = (t - t_initial_) / interval_;
  const auto k = static_cast<std::size_t>(std::clamp(std::floor(x), 0.0, static_cast<double>(b.size() - 1)));
  return b[k];
}

std::vector<double> NoiseTrack::jump_times(double t_end) const {
  std::vector<double> out;
  const std::size_t n = bins_[0].size();
  for (std::size_t k = 1; k < n; ++k) {
    const double edge = t_initial_ + static_cast<double>(k) * interval_;
    if (!(edge < t_end)) break;
    if (edge <= t_initial_) continue;
    bool jumps = false;
    for (const auto& b : bins_) jumps = jumps || b[k] != b[k - 1];
    if (jumps) out.push_back(edge);
  }
  return out;
}

NoiseTrack NoiseTrack::frozen_at(double t) const {
  return constant(amplitude_factor(t), angle_factor(t), detuning_factor(t));
}

DriveFunction noisy_drive(DriveFunction base, NoiseTrack track) {
  return [base = std::move(base), track = std::move(track)](double t) {
    ModifiedDrive d = base(t);
    const double wa = track.amplitude_factor(t);
    const double wt = track.angle_factor(t);
    const double wd = track.detuning_factor(t);
    if (wd != 0.0) d.delta_t *= 1.0 + wd;
    if (wt != 0.0) {
      d.omega0_t *= 1.0 + wa;
      d.theta_t *= 1.0 + wt;
      d.omega_p_t = d.omega0_t * std::sin(d.theta_t);
      d.omega_s_t = d.omega0_t * std::cos(d.theta_t);
    } else if (wa != 0.0) {
      d.omega0_t *= 1.0 + wa;
      d.omega_p_t *= 1.0 + wa;
      d.omega_s_t *= 1.0 + wa;
    }
    return d;
  };
}

TimeDependentHamiltonian hamiltonian_from_drive(DriveFunction drive) {
  return [drive = std::move(drive)](double t) { return h_tilde(drive(t)); };
}

Trajectory propagate_noisy(const DriveFunction& base, const NoiseTrack& track, const CVector& psi0,
                           const TimeGrid& grid, const PropagationOptions& options) {
  const std::vector<double> jumps = track.jump_times(grid.t1);
  if (jumps.empty()) return propagate_schrodinger(hamiltonian_from_drive(noisy_drive(base, track)), psi0, grid, options);
  if (!(grid.steps > 0) || !(grid.record_stride > 0) || !(grid.t1 > grid.t0))
    throw Error(ErrorCode::ConfigInvalid, "time grid needs t1 > t0 and positive step counts");

  std::vector<double> edges{grid.t0};
  edges.insert(edges.end(), jumps.begin(), jumps.end());
  edges.push_back(grid.t1);

  PropagationOptions inner = options;
  inner.check_convergence = false;
  Trajectory traj;
  CVector psi = psi0;
  const double n0 = psi0.norm();
  for (std::size_t s = 0; s + 1 < edges.size(); ++s) {
    const double a = edges[s], b = edges[s + 1];
    const int steps =
        std::max(1, static_cast<int>(std::lround(grid.steps * (b - a) / (grid.t1 - grid.t0))));
    const auto h = hamiltonian_from_drive(noisy_drive(base, track.frozen_at(0.5 * (a + b))));
    Trajectory seg = propagate_schrodinger(h, psi, TimeGrid{a, b, steps, grid.record_stride}, inner);
    const std::size_t skip = s == 0 ? 0 : 1;
    traj.times.insert(traj.times.end(), seg.times.begin() + skip, seg.times.end());
    traj.populations.insert(traj.populations.end(), seg.populations.begin() + skip, seg.populations.end());
    if (options.record_states) traj.states.insert(traj.states.end(), seg.states.begin() + skip, seg.states.end());
    traj.norm_drift = std::max(traj.norm_drift, seg.norm_drift + std::abs(psi.norm() - n0));
    psi = seg.final_vector();
  }
  traj.final_state = psi;
  if (options.check_convergence) {
    TimeGrid fine_grid = grid;
    fine_grid.steps *= 2;
    const Trajectory fine = propagate_noisy(base, track, psi0, fine_grid, inner);
    traj.convergence_checked = true;
    for (int i = 0; i < psi.size(); ++i)
      traj.convergence_delta =
          std::max(traj.convergence_delta, std::abs(std::norm(psi[i]) - fine.final_population(i)));
    traj.convergence_warning = traj.convergence_delta >= options.convergence_tol;
  }
  return traj;
}

double noisy_run_p3(const PulseParams& p, const NoiseConfig& cfg, std::uint64_t run_index, int steps) {
  const NoiseTrack track(cfg, p.t_initial(), p.T, run_index);
  TimeGrid grid{p.t_initial(), p.t_final(), steps, steps};
  PropagationOptions opt;
  opt.check_convergence = false;
  return propagate_noisy(shortcut_drive(p), track, CVector::basis(3, 0), grid, opt).final_population(2);
}

MonteCarloStats monte_carlo(const PulseParams& p, const NoiseConfig& cfg, int n_runs, const MonteCarloOptions& options) {
  if (n_runs < 1) throw Error(ErrorCode::ConfigInvalid, "monte carlo needs at least one run");
  p.validate();
  cfg.validate();
  MonteCarloStats st;
  st.n_runs = n_runs;
  st.seeds.resize(n_runs);
  st.p3.assign(n_runs, std::numeric_limits<double>::quiet_NaN());
  std::vector<char> ok(n_runs, 0);
  detail::parallel_for(static_cast<std::size_t>(n_runs), options.jobs, [&](std::size_t i) {
    st.seeds[i] = RandomStream::derive(cfg.master_seed, i).key();
    try {
      st.p3[i] = noisy_run_p3(p, cfg, i, options.steps);
      ok[i] = std::isfinite(st.p3[i]) ? 1 : 0;
    } catch (const Error&) {
      ok[i] = 0;
    }
  });
  st.ok.assign(ok.begin(), ok.end());
  double sum = 0.0;
  int good = 0;
  st.min_p3 = std::numeric_limits<double>::infinity();
  st.max_p3 = -std::numeric_limits<double>::infinity();
  for (int i = 0; i < n_runs; ++i) {
    if (!ok[i]) {
      ++st.failed;
      continue;
    }
    ++good;
    sum += st.p3[i];
    st.min_p3 = std::min(st.min_p3, st.p3[i]);
    st.max_p3 = std::max(st.max_p3, st.p3[i]);
  }
  if (good == 0) {
    st.mean_p3 = st.std_p3 = st.min_p3 = st.max_p3 = std::numeric_limits<double>::quiet_NaN();
    return st;
  }
  st.mean_p3 = sum / good;
  double var = 0.0;
  for (int i = 0; i < n_runs; ++i)
    if (ok[i]) var += (st.p3[i] - st.mean_p3) * (st.p3[i] - st.mean_p3);
  st.std_p3 = good > 1 ? std::sqrt(var / (good - 1)) : 0.0;
  return st;
}

}  // namespace stashort
