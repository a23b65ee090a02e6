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

#include "stashort/experiments.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <sstream>

#include "parallel.hpp"
#include "stashort/lambda3.hpp"
#include "stashort/noise.hpp"
#include "stashort/shortcut.hpp"

namespace stashort {

namespace fs = std::filesystem;

namespace {

// Values quoted by the original figures for the default shape; reported next
// to the computed ones, never used in a computation.
constexpr double kPublishedTOmegaMax = 16.0;
constexpr double kPublishedAreaOverPi = 4.1;

class CsvWriter {
 public:
  explicit CsvWriter(const fs::path& path) : path_(path), out_(path, std::ios::binary) {
    if (!out_) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  }
  void header(const std::string& h) { out_ << h << '\n'; }
  template <typename... Cells>
  void row(const Cells&... cells) {
    bool first = true;
    ((out_ << (first ? "" : ",") << cell(cells), first = false), ...);
    out_ << '\n';
  }
  void close() {
    out_.close();
    if (!out_) throw Error(ErrorCode::IoError, "failed writing '" + path_.string() + "'");
  }

 private:
  static std::string cell(double v) { return format_double(v); }
  static std::string cell(int v) { return std::to_string(v); }
  static std::string cell(std::uint64_t v) { return std::to_string(v); }
  static std::string cell(const std::string& s) { return s; }
  static std::string cell(const char* s) { return s; }

  fs::path path_;
  std::ofstream out_;
};

void write_text(const fs::path& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error(ErrorCode::IoError, "cannot open '" + path.string() + "' for writing");
  out << text;
  out.close();
  if (!out) throw Error(ErrorCode::IoError, "failed writing '" + path.string() + "'");
}

fs::path prepare(const RunConfig& cfg, const std::string& out_dir) {
  cfg.validate();
  fs::path dir(out_dir);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::IoError, "cannot create '" + out_dir + "': " + ec.message());
  write_text(dir / "config.txt", format_config(cfg));
  return dir;
}

class Summary {
 public:
  void add(const std::string& k, double v) { text_ += k + ": " + format_double(v) + "\n"; }
  void add(const std::string& k, int v) { text_ += k + ": " + std::to_string(v) + "\n"; }
  void add(const std::string& k, const std::string& v) { text_ += k + ": " + v + "\n"; }
  const std::string& text() const { return text_; }

 private:
  std::string text_;
};

// Trapezoid over a possibly non-uniform grid, divided by its length.
double time_average(const std::vector<double>& t, const std::vector<double>& f) {
  double s = 0.0;
  for (std::size_t k = 1; k < t.size(); ++k) s += 0.5 * (f[k] + f[k - 1]) * (t[k] - t[k - 1]);
  return s / (t.back() - t.front());
}

std::vector<double> column(const Trajectory& tr, int level) {
  std::vector<double> v;
  v.reserve(tr.populations.size());
  for (const auto& p : tr.populations) v.push_back(p[level]);
  return v;
}

DriveRow shortcut_row(const ModifiedDrive& d, double gamma) {
  return {d.omega_p_t, d.omega_s_t, d.delta_t, d.theta_t, gamma};
}

TimeGrid grid_for(const RunConfig& cfg, int steps) {
  return TimeGrid{cfg.pulse.t_initial(), cfg.pulse.t_final(), steps, cfg.record_stride};
}

int adequate_steps(const TimeDependentHamiltonian& h, const PulseParams& p, int base) {
  return recommended_steps(h, p.t_initial(), p.t_final(), base);
}

void write_trajectory(const fs::path& path, const SimulationResult& r) {
  CsvWriter csv(path);
  csv.header("t,P1,P2,P3,omega_p,omega_s,delta,theta,gamma");
  const auto& tr = r.trajectory;
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const auto& p = tr.populations[k];
    const auto& d = r.drive[k];
    csv.row(tr.times[k], p[0], p[1], p[2], d.omega_p, d.omega_s, d.delta, d.theta, d.gamma);
  }
  csv.close();
}

Summary summary_of(const RunConfig& cfg, const SimulationResult& r) {
  Summary s;
  s.add("mode", std::string(cfg.mode == RunMode::Shortcut ? "shortcut" : "original"));
  s.add("p3_final", r.summary.p3_final);
  s.add("fidelity_sq", r.summary.fidelity_sq);
  s.add("deviation", r.summary.deviation);
  s.add("area_over_pi", r.area.over_pi);
  s.add("area_over_pi_omega0", r.area_omega0.over_pi);
  s.add("t_omega_max_numeric", r.omega_max.numeric_max * cfg.pulse.T);
  s.add("t_omega_max_argmax", r.omega_max.t_at_max);
  s.add("t_omega_max_closed_at_argmax", r.omega_max.closed_at_argmax * cfg.pulse.T);
  s.add("t_omega_max_t0", r.omega_max.at_t0 * cfg.pulse.T);
  s.add("t_omega_max_peak_formula", r.omega_max.closed_form_peak * cfg.pulse.T);
  s.add("published_t_omega_max", kPublishedTOmegaMax);
  s.add("published_area_over_pi", kPublishedAreaOverPi);
  s.add("p2_bar", r.summary.p2_bar);
  s.add("p2_bar_trajectory", r.p2_bar_trajectory);
  s.add("gamma_a", cfg.gamma_a);
  s.add("epsilon", r.summary.epsilon);
  s.add("norm_drift", r.trajectory.norm_drift);
  s.add("steps", r.steps);
  s.add("convergence_delta", r.trajectory.convergence_delta);
  s.add("convergence_warning", std::string(r.trajectory.convergence_warning ? "true" : "false"));
  if (r.lindblad) {
    s.add("gamma1", r.gamma1);
    s.add("gamma3", r.gamma3);
    s.add("min_eigenvalue", r.trajectory.min_eigenvalue);
  }
  return s;
}

}  // namespace

std::string format_double(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.15e", v);
  return buf;
}

int exit_code_for(ErrorCode code) { return is_config_error(code) ? 2 : 3; }

TimeDependentHamiltonian original_hamiltonian(const PulseParams& p, double omega0) {
  return [p, omega0](double t) { return h0(reference_drive(t, p, omega0)); };
}

SimulationResult simulate(const RunConfig& cfg) {
  cfg.validate();
  const PulseParams& p = cfg.pulse;
  SimulationResult r;
  r.steps = cfg.steps;
  r.omega_max = omega_max(p);

  TimeDependentHamiltonian h;
  if (cfg.mode == RunMode::Shortcut) {
    h = shortcut_hamiltonian(p);
    const DriveSamples s = sample_drive(p, cfg.steps);
    r.area = pulse_area(s.t, s.omega_p, s.omega_s);
    r.area_omega0 = pulse_area(s.t, s.omega0);
  } else {
    h = original_hamiltonian(p, p.omega0_ref);
    std::vector<double> t, wp, ws, w0;
    for (int k = 0; k <= cfg.steps; ++k) {
      const double tk = p.t_initial() + k * p.T / cfg.steps;
      const LambdaDrive d = reference_drive(tk, p, p.omega0_ref);
      t.push_back(tk);
      wp.push_back(d.omega_p);
      ws.push_back(d.omega_s);
      w0.push_back(p.omega0_ref);
    }
    r.area = pulse_area(t, wp, ws);
    r.area_omega0 = pulse_area(t, w0);
  }

  PropagationOptions opt;
  opt.check_convergence = cfg.check_convergence;
  const TimeGrid grid = grid_for(cfg, cfg.steps);
  const double scale = cfg.decay_units == DecayUnits::OmegaMax ? r.omega_max.numeric_max : 1.0;
  r.gamma1 = cfg.lindblad.gamma1 * scale;
  r.gamma3 = cfg.lindblad.gamma3 * scale;
  r.lindblad = r.gamma1 > 0.0 || r.gamma3 > 0.0;
  if (r.lindblad) {
    const CVector e1 = CVector::basis(3, 0);
    r.trajectory = propagate_lindblad(h, CMatrix::outer(e1, e1), LindbladParams{r.gamma1, r.gamma3}, grid, opt);
  } else {
    r.trajectory = propagate_schrodinger(h, CVector::basis(3, 0), grid, opt);
  }

  for (double t : r.trajectory.times) {
    if (cfg.mode == RunMode::Shortcut) {
      const ShortcutFrame f = frame_at(t, p);
      r.drive.push_back(shortcut_row(modified_drive(f), f.gamma));
    } else {
      const LambdaDrive d = reference_drive(t, p, p.omega0_ref);
      r.drive.push_back({d.omega_p, d.omega_s, d.delta, theta(t, p), 0.0});
    }
  }

  r.p2_bar_trajectory = time_average(r.trajectory.times, column(r.trajectory, 1));
  const double tmax = cfg.mode == RunMode::Shortcut ? r.omega_max.numeric_max * p.T : p.omega0_ref * p.T;
  const double p2 = cfg.mode == RunMode::Shortcut ? p2_bar(p.gamma0) : r.p2_bar_trajectory;
  r.summary = make_run_summary(r.trajectory.final_population(2), r.area.over_pi, tmax, p2, cfg.gamma_a);
  return r;
}

void cmd_simulate(const RunConfig& cfg, const std::string& out_dir) {
  const fs::path dir = prepare(cfg, out_dir);
  const SimulationResult r = simulate(cfg);
  write_trajectory(dir / "trajectory.csv", r);
  write_text(dir / "summary.txt", summary_of(cfg, r).text());
}

namespace {

// T * omega0~(t) curves for a few widths, plus the peak over a finer width grid.
void figure1(const RunConfig& cfg, const fs::path& dir) {
  struct Curve {
    std::string panel;
    PulseParams p;
  };
  std::vector<Curve> curves;
  for (double tau : {0.06, 0.08, 0.10, 0.12}) {
    PulseParams p = cfg.pulse;
    p.tau = tau * p.T;
    p.tau_c = 0.3 * p.T;
    curves.push_back({"a", p});
  }
  for (double tc : {0.22, 0.25, 0.28, 0.30}) {
    PulseParams p = cfg.pulse;
    p.tau = 0.12 * p.T;
    p.tau_c = tc * p.T;
    curves.push_back({"b", p});
  }
  CsvWriter csv(dir / "fig1.csv");
  csv.header("panel,tau,tau_c,t,t_omega0");
  for (const auto& c : curves) {
    c.p.validate();
    const DriveSamples s = sample_drive(c.p, cfg.steps);
    for (std::size_t k = 0; k < s.t.size(); k += cfg.record_stride)
      csv.row(c.panel, c.p.tau, c.p.tau_c, s.t[k], s.omega0[k] * c.p.T);
  }
  csv.close();

  std::vector<PulseParams> pts;
  std::vector<std::string> panels;
  for (double tau : linspace(0.06, 0.12, cfg.grid_points)) {
    PulseParams p = cfg.pulse;
    p.tau = tau * p.T;
    p.tau_c = 0.3 * p.T;
    pts.push_back(p);
    panels.push_back("a");
  }
  for (double tc : linspace(0.21, 0.30, cfg.grid_points)) {
    PulseParams p = cfg.pulse;
    p.tau = 0.12 * p.T;
    p.tau_c = tc * p.T;
    pts.push_back(p);
    panels.push_back("b");
  }
  const auto res = sweep(pts, cfg.gamma_a, cfg.jobs);
  CsvWriter mx(dir / "fig1_max.csv");
  mx.header("panel,tau,tau_c,t_omega_max");
  for (std::size_t i = 0; i < res.size(); ++i) mx.row(panels[i], pts[i].tau, pts[i].tau_c, res[i].t_omega_max);
  mx.close();
}

std::vector<double> gamma0_axis(int n) { return linspace(0.05, 0.3, n); }
std::vector<double> phi_axis(int n) { return linspace(std::numbers::pi / 16.0, std::numbers::pi / 4.0, n); }

void figure2_or_7(const RunConfig& cfg, const fs::path& dir, int n) {
  const auto pts = gamma_phi_grid(cfg.pulse, gamma0_axis(cfg.grid_points), phi_axis(cfg.grid_points));
  const auto res = sweep(pts, cfg.gamma_a, cfg.jobs);
  CsvWriter csv(dir / (n == 2 ? "fig2.csv" : "fig7.csv"));
  if (n == 2) {
    csv.header("gamma0,phi,area_over_pi,t_omega_max");
    for (const auto& r : res) csv.row(r.params.gamma0, r.params.phi, r.area_over_pi, r.t_omega_max);
  } else {
    csv.header("gamma0,phi,gamma_a,p2_bar,t_omega_max,epsilon");
    for (const auto& r : res) csv.row(r.params.gamma0, r.params.phi, cfg.gamma_a, r.p2_bar, r.t_omega_max, r.epsilon);
  }
  csv.close();
}

double shortcut_p3(const PulseParams& p, int base_steps) {
  const auto h = shortcut_hamiltonian(p);
  const int steps = adequate_steps(h, p, base_steps);
  PropagationOptions opt;
  opt.check_convergence = false;
  return propagate_schrodinger(h, CVector::basis(3, 0), TimeGrid{p.t_initial(), p.t_final(), steps, steps}, opt)
      .final_population(2);
}

void figure3(const RunConfig& cfg, const fs::path& dir) {
  struct Preset {
    std::string name;
    double phi;
  };
  std::vector<Preset> presets = {{"pi/4", std::numbers::pi / 4.0},
                                 {"pi/5", std::numbers::pi / 5.0},
                                 {"pi/10_interpretation", std::numbers::pi / 10.0}};
  bool listed = false;
  for (const auto& pr : presets) listed = listed || std::abs(pr.phi - cfg.pulse.phi) < 1e-12;
  if (!listed) presets.push_back({"config", cfg.pulse.phi});

  std::vector<PulseParams> pts;
  std::vector<std::string> names;
  for (const auto& pr : presets)
    for (double g : gamma0_axis(cfg.grid_points)) {
      PulseParams p = cfg.pulse;
      p.phi = pr.phi;
      p.gamma0 = g;
      pts.push_back(p);
      names.push_back(pr.name);
    }
  const auto res = sweep(pts, cfg.gamma_a, cfg.jobs);
  std::vector<double> p3(pts.size());
  detail::parallel_for(pts.size(), cfg.jobs, [&](std::size_t i) { p3[i] = shortcut_p3(pts[i], cfg.steps); });
  CsvWriter csv(dir / "fig3.csv");
  csv.header("preset,phi,gamma0,area_over_pi,t_omega_max,p3_final,deviation");
  for (std::size_t i = 0; i < pts.size(); ++i)
    csv.row(names[i], pts[i].phi, pts[i].gamma0, res[i].area_over_pi, res[i].t_omega_max, p3[i],
            1.0 - p3[i]);
  csv.close();
}

void write_full_trajectory(const fs::path& path, const Trajectory& tr, const std::vector<ModifiedDrive>& drive,
                           const std::vector<double>& gammas) {
  CsvWriter csv(path);
  csv.header("t,P1,P2,P3,omega_p,omega_s,delta,theta,gamma,omega0,phase_p,phase_s");
  for (std::size_t k = 0; k < tr.times.size(); ++k) {
    const auto& p = tr.populations[k];
    const auto& d = drive[k];
    csv.row(tr.times[k], p[0], p[1], p[2], d.omega_p_t, d.omega_s_t, d.delta_t, d.theta_t, gammas[k], d.omega0_t,
            d.phase_p, d.phase_s);
  }
  csv.close();
}

void figure4(const RunConfig& cfg, const fs::path& dir) {
  RunConfig c = cfg;
  c.mode = RunMode::Shortcut;
  c.lindblad = {};
  const SimulationResult r = simulate(c);
  std::vector<ModifiedDrive> drive;
  std::vector<double> gammas;
  for (double t : r.trajectory.times) {
    const ShortcutFrame f = frame_at(t, c.pulse);
    drive.push_back(modified_drive(f));
    gammas.push_back(f.gamma);
  }
  write_full_trajectory(dir / "fig4.csv", r.trajectory, drive, gammas);
  write_text(dir / "fig4_summary.txt", summary_of(c, r).text());
}

void figure5(const RunConfig& cfg, const fs::path& dir) {
  RunConfig c = cfg;
  c.mode = RunMode::Original;
  c.lindblad = {};
  const SimulationResult r = simulate(c);
  write_trajectory(dir / "fig5.csv", r);
  write_text(dir / "fig5_summary.txt", summary_of(c, r).text());
}

void figure6(const RunConfig& cfg, const fs::path& dir) {
  const PulseParams& p = cfg.pulse;
  const NoiseTrack track(cfg.noise, p.t_initial(), p.T, 0);
  const DriveFunction drive = noisy_drive(shortcut_drive(p), track);
  PropagationOptions opt;
  opt.check_convergence = false;
  const Trajectory tr = propagate_noisy(shortcut_drive(p), track, CVector::basis(3, 0), grid_for(cfg, cfg.steps), opt);
  std::vector<ModifiedDrive> rows;
  std::vector<double> gammas;
  for (double t : tr.times) {
    rows.push_back(drive(t));
    gammas.push_back(gamma(t, p));
  }
  write_full_trajectory(dir / "fig6.csv", tr, rows, gammas);

  MonteCarloOptions mo;
  mo.steps = cfg.steps;
  mo.jobs = cfg.jobs;
  const MonteCarloStats st = monte_carlo(p, cfg.noise, cfg.n_runs, mo);
  CsvWriter csv(dir / "fig6_mc.csv");
  csv.header("run,seed,p3_final");
  for (int i = 0; i < st.n_runs; ++i) csv.row(i, st.seeds[i], st.p3[i]);
  csv.close();
  Summary s;
  s.add("single_run_p3_final", tr.final_population(2));
  s.add("single_run_seed", std::to_string(track.seed()));
  s.add("n_runs", st.n_runs);
  s.add("failed", st.failed);
  s.add("mean_p3", st.mean_p3);
  s.add("std_p3", st.std_p3);
  s.add("min_p3", st.min_p3);
  s.add("max_p3", st.max_p3);
  write_text(dir / "fig6_summary.txt", s.text());
}

struct DecayPoint {
  double g1_rel = 0.0;
  double g3_rel = 0.0;
  double p3 = 0.0;
  double trace_drift = 0.0;
  double min_eig = 0.0;
};

DecayPoint decay_run(const PulseParams& p, double omax, double g1_rel, double g3_rel, int steps) {
  const CVector e1 = CVector::basis(3, 0);
  PropagationOptions opt;
  opt.check_convergence = false;
  const Trajectory tr = propagate_lindblad(shortcut_hamiltonian(p), CMatrix::outer(e1, e1),
                                           LindbladParams{g1_rel * omax, g3_rel * omax},
                                           TimeGrid{p.t_initial(), p.t_final(), steps, steps}, opt);
  return {g1_rel, g3_rel, tr.final_population(2), tr.norm_drift, tr.min_eigenvalue};
}

void figure8(const RunConfig& cfg, const fs::path& dir) {
  const PulseParams& p = cfg.pulse;
  const double omax = omega_max(p).numeric_max;
  const auto axis = linspace(0.0, 0.5, 6);
  std::vector<std::pair<double, double>> pts;
  for (double g1 : axis)
    for (double g3 : axis) pts.emplace_back(g1, g3);
  std::vector<DecayPoint> res(pts.size());
  detail::parallel_for(pts.size(), cfg.jobs,
                       [&](std::size_t i) { res[i] = decay_run(p, omax, pts[i].first, pts[i].second, cfg.steps); });
  CsvWriter csv(dir / "fig8.csv");
  csv.header("gamma1_over_omega_max,gamma3_over_omega_max,p3_final,fidelity_sq,trace_drift,min_eigenvalue");
  for (const auto& r : res) csv.row(r.g1_rel, r.g3_rel, r.p3, r.p3 * r.p3, r.trace_drift, r.min_eig);
  csv.close();

  const DecayPoint strong = decay_run(p, omax, 0.5, 0.5, cfg.steps);
  const DecayPoint nv = decay_run(p, omax, 4.3 / 171.0, 8.5 / 171.0, cfg.steps);
  CsvWriter named(dir / "fig8_points.csv");
  named.header("point,gamma1_over_omega_max,gamma3_over_omega_max,p3_final,fidelity_sq");
  named.row("equal_half", strong.g1_rel, strong.g3_rel, strong.p3, strong.p3 * strong.p3);
  named.row("nv_center", nv.g1_rel, nv.g3_rel, nv.p3, nv.p3 * nv.p3);
  named.close();
}

}  // namespace

void cmd_figure(int n, const RunConfig& cfg, const std::string& out_dir) {
  if (n < 1 || n > 8) throw Error(ErrorCode::ConfigInvalid, "figure number must be 1..8");
  const fs::path dir = prepare(cfg, out_dir);
  switch (n) {
    case 1: figure1(cfg, dir); break;
    case 2: figure2_or_7(cfg, dir, 2); break;
    case 3: figure3(cfg, dir); break;
    case 4: figure4(cfg, dir); break;
    case 5: figure5(cfg, dir); break;
    case 6: figure6(cfg, dir); break;
    case 7: figure2_or_7(cfg, dir, 7); break;
    default: figure8(cfg, dir); break;
  }
}

void cmd_noise_mc(const RunConfig& cfg, const std::string& out_dir) {
  const fs::path dir = prepare(cfg, out_dir);
  MonteCarloOptions mo;
  mo.steps = cfg.steps;
  mo.jobs = cfg.jobs;
  const MonteCarloStats st = monte_carlo(cfg.pulse, cfg.noise, cfg.n_runs, mo);
  CsvWriter csv(dir / "noise_mc.csv");
  csv.header("run,seed,p3_final");
  for (int i = 0; i < st.n_runs; ++i) csv.row(i, st.seeds[i], st.p3[i]);
  csv.close();
  Summary s;
  s.add("n_runs", st.n_runs);
  s.add("failed", st.failed);
  s.add("mean_p3", st.mean_p3);
  s.add("std_p3", st.std_p3);
  s.add("min_p3", st.min_p3);
  s.add("max_p3", st.max_p3);
  s.add("master_seed", std::to_string(cfg.noise.master_seed));
  write_text(dir / "noise_mc_summary.txt", s.text());
}

}  // namespace stashort
