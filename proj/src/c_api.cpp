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

#include "stashort/stashort.h"

#include <cstring>
#include <new>
#include <string>

#include "stashort/config.hpp"
#include "stashort/errors.hpp"
#include "stashort/experiments.hpp"
#include "stashort/shortcut.hpp"

struct sta_config {
  stashort::RunConfig cfg;
};

namespace {

thread_local std::string g_last_error;

sta_status fail(sta_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

sta_status status_for(stashort::ErrorCode code) {
  if (stashort::is_config_error(code)) return STA_ERR_CONFIG;
  if (code == stashort::ErrorCode::IoError) return STA_ERR_IO;
  return STA_ERR_NUMERIC;
}

template <typename Fn>
sta_status guarded(Fn&& fn) {
  try {
    g_last_error.clear();
    fn();
    return STA_OK;
  } catch (const stashort::Error& e) {
    return fail(status_for(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(STA_ERR_NUMERIC, "out of memory");
  } catch (const std::exception& e) {
    return fail(STA_ERR_NUMERIC, e.what());
  }
}

}  // namespace

extern "C" {

const char* sta_version(void) { return "0.1.0"; }

const char* sta_last_error(void) { return g_last_error.c_str(); }

int sta_exit_code(sta_status status) {
  switch (status) {
    case STA_OK: return 0;
    case STA_ERR_ARGUMENT:
    case STA_ERR_CONFIG: return 2;
    default: return 3;
  }
}

sta_status sta_config_create(sta_config** out) {
  if (!out) return fail(STA_ERR_ARGUMENT, "null output pointer");
  *out = new (std::nothrow) sta_config();
  if (!*out) return fail(STA_ERR_NUMERIC, "out of memory");
  return STA_OK;
}

void sta_config_destroy(sta_config* cfg) { delete cfg; }

sta_status sta_config_load_file(sta_config* cfg, const char* path) {
  if (!cfg || !path) return fail(STA_ERR_ARGUMENT, "null argument");
  return guarded([&] { cfg->cfg = stashort::load_config(path, cfg->cfg); });
}

sta_status sta_config_set(sta_config* cfg, const char* key, const char* value) {
  if (!cfg || !key || !value) return fail(STA_ERR_ARGUMENT, "null argument");
  return guarded([&] { stashort::apply_setting(cfg->cfg, key, value); });
}

sta_status sta_config_get(const sta_config* cfg, const char* key, char* buf, size_t len) {
  if (!cfg || !key || !buf) return fail(STA_ERR_ARGUMENT, "null argument");
  std::string v;
  const sta_status s = guarded([&] { v = stashort::get_setting(cfg->cfg, key); });
  if (s != STA_OK) return s;
  if (v.size() + 1 > len) return fail(STA_ERR_ARGUMENT, "buffer too small");
  std::memcpy(buf, v.c_str(), v.size() + 1);
  return STA_OK;
}

sta_status sta_config_validate(const sta_config* cfg) {
  if (!cfg) return fail(STA_ERR_ARGUMENT, "null argument");
  return guarded([&] { cfg->cfg.validate(); });
}

sta_status sta_run_simulate(const sta_config* cfg, const char* out_dir) {
  if (!cfg || !out_dir) return fail(STA_ERR_ARGUMENT, "null argument");
  return guarded([&] { stashort::cmd_simulate(cfg->cfg, out_dir); });
}

sta_status sta_run_figure(const sta_config* cfg, int figure, const char* out_dir) {
  if (!cfg || !out_dir) return fail(STA_ERR_ARGUMENT, "null argument");
  if (figure < 1 || figure > 8) return fail(STA_ERR_ARGUMENT, "figure number must be 1..8");
  return guarded([&] { stashort::cmd_figure(figure, cfg->cfg, out_dir); });
}

sta_status sta_run_noise_mc(const sta_config* cfg, const char* out_dir) {
  if (!cfg || !out_dir) return fail(STA_ERR_ARGUMENT, "null argument");
  return guarded([&] { stashort::cmd_noise_mc(cfg->cfg, out_dir); });
}

sta_status sta_simulate_p3(const sta_config* cfg, double* p3) {
  if (!cfg || !p3) return fail(STA_ERR_ARGUMENT, "null argument");
  return guarded([&] { *p3 = stashort::simulate(cfg->cfg).summary.p3_final; });
}

sta_status sta_drive_at(const sta_config* cfg, double t, sta_drive* out) {
  if (!cfg || !out) return fail(STA_ERR_ARGUMENT, "null argument");
  return guarded([&] {
    cfg->cfg.pulse.validate();
    const stashort::ShortcutFrame f = stashort::frame_at(t, cfg->cfg.pulse);
    const stashort::ModifiedDrive d = stashort::modified_drive(f);
    *out = sta_drive{d.omega_p_t, d.omega_s_t, d.phase_p, d.phase_s, d.delta_t, d.omega0_t, d.theta_t, f.gamma};
  });
}

}  // extern "C"
