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

// Command line front end. Everything goes through the C interface.

#include <cstdio>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "stashort/stashort.h"

namespace {

struct Options {
  std::string config;
  std::vector<std::string> sets;
  std::string out = "out";
  std::string seed;
  int jobs = 0;
  int figure = 0;
};

int report(sta_status s) {
  if (s != STA_OK) std::fprintf(stderr, "stashort: %s\n", sta_last_error());
  return sta_exit_code(s);
}

sta_status configure(sta_config* cfg, const Options& o) {
  sta_status s = STA_OK;
  if (!o.config.empty() && (s = sta_config_load_file(cfg, o.config.c_str())) != STA_OK) return s;
  for (const auto& kv : o.sets) {
    const auto eq = kv.find('=');
    if (eq == std::string::npos) {
      std::fprintf(stderr, "stashort: --set expects key=value, got '%s'\n", kv.c_str());
      return STA_ERR_CONFIG;
    }
    if ((s = sta_config_set(cfg, kv.substr(0, eq).c_str(), kv.substr(eq + 1).c_str())) != STA_OK) return s;
  }
  if (!o.seed.empty() && (s = sta_config_set(cfg, "seed", o.seed.c_str())) != STA_OK) return s;
  if (o.jobs > 0 && (s = sta_config_set(cfg, "jobs", std::to_string(o.jobs).c_str())) != STA_OK) return s;
  return sta_config_validate(cfg);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Shortcut-to-adiabaticity runs for off-resonant three-level STIRAP"};
  app.set_version_flag("--version", std::string(sta_version()));
  app.require_subcommand(1);

  Options o;
  app.add_option("--config", o.config, "Configuration file (key = value lines)");
  app.add_option("--set", o.sets, "Override one setting, key=value (repeatable)");
  app.add_option("--out", o.out, "Output directory");
  app.add_option("--seed", o.seed, "Master seed for noise runs");
  app.add_option("--jobs", o.jobs, "Worker threads for sweeps and Monte Carlo")->check(CLI::PositiveNumber);

  auto* simulate = app.add_subcommand("simulate", "Propagate one configuration, write trajectory and summary");
  auto* figure = app.add_subcommand("figure", "Write the data behind figure N (1..8)");
  figure->add_option("n", o.figure, "Figure number")->required()->check(CLI::Range(1, 8));
  auto* noise_mc = app.add_subcommand("noise-mc", "Monte Carlo over noisy drives");
  for (auto* sub : {simulate, figure, noise_mc}) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  sta_config* cfg = nullptr;
  if (sta_config_create(&cfg) != STA_OK) return report(STA_ERR_NUMERIC);
  sta_status s = configure(cfg, o);
  if (s == STA_OK) {
    if (simulate->parsed()) s = sta_run_simulate(cfg, o.out.c_str());
    else if (figure->parsed()) s = sta_run_figure(cfg, o.figure, o.out.c_str());
    else s = sta_run_noise_mc(cfg, o.out.c_str());
  }
  sta_config_destroy(cfg);
  return report(s);
}
