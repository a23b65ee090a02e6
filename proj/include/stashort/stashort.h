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

#ifndef STASHORT_STASHORT_H_
#define STASHORT_STASHORT_H_

/* C interface to the stashort engine. All objects are opaque; every call
 * returns a status code and leaves a message for sta_last_error() on failure. */

#include <stddef.h>

#if defined(_WIN32)
#define STA_API __declspec(dllexport)
#else
#define STA_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef struct sta_config sta_config;

typedef enum sta_status {
  STA_OK = 0,
  STA_ERR_ARGUMENT = 1, /* null pointer, short buffer, bad figure number */
  STA_ERR_CONFIG = 2,   /* missing file, unknown key, value out of range */
  STA_ERR_NUMERIC = 3,  /* propagation or eigensolver failure */
  STA_ERR_IO = 4        /* output could not be written */
} sta_status;

typedef struct sta_drive {
  double omega_p;
  double omega_s;
  double phase_p;
  double phase_s;
  double delta;
  double omega0;
  double theta;
  double gamma;
} sta_drive;

STA_API const char* sta_version(void);

/* Message of the last failed call on this thread, "" if none. */
STA_API const char* sta_last_error(void);

/* Process exit code for a status: 0, 2 (configuration) or 3 (anything else). */
STA_API int sta_exit_code(sta_status status);

STA_API sta_status sta_config_create(sta_config** out);
STA_API void sta_config_destroy(sta_config* cfg);
STA_API sta_status sta_config_load_file(sta_config* cfg, const char* path);
STA_API sta_status sta_config_set(sta_config* cfg, const char* key, const char* value);
/* Writes the canonical value text, NUL terminated; STA_ERR_ARGUMENT if len is too small. */
STA_API sta_status sta_config_get(const sta_config* cfg, const char* key, char* buf, size_t len);
STA_API sta_status sta_config_validate(const sta_config* cfg);

STA_API sta_status sta_run_simulate(const sta_config* cfg, const char* out_dir);
STA_API sta_status sta_run_figure(const sta_config* cfg, int figure, const char* out_dir);
STA_API sta_status sta_run_noise_mc(const sta_config* cfg, const char* out_dir);

/* Final target population of the configured simulation, without writing files. */
STA_API sta_status sta_simulate_p3(const sta_config* cfg, double* p3);
/* Shortcut drive of the configured pulse shape at time t. */
STA_API sta_status sta_drive_at(const sta_config* cfg, double t, sta_drive* out);

#ifdef __cplusplus
}
#endif

#endif /* STASHORT_STASHORT_H_ */
