/*
  Copyright 2026 The offloadsim Authors

  Licensed under the Apache License, Version 2.0 (the "License");
  you may not use this file except in compliance with the License.
  You may obtain a copy of the License at

  http://www.apache.org/licenses/LICENSE-2.0

  Unless required by applicable law or agreed to in writing, software
  distributed under the License is distributed on an "AS IS" BASIS,
  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
  See the License for the specific language governing permissions and
  limitations under the License.
*/

/*
 * C interface to the offloading simulator.
 *
 * Objects are opaque handles created and destroyed through this API. Every
 * fallible call returns an offsim_status; on failure the calling thread's
 * last error (machine-readable code + message) describes what went wrong.
 * Strings returned through `char**` out-parameters are owned by the caller
 * and must be released with offsim_string_free().
 */

#ifndef OFFLOADSIM_OFFLOADSIM_H
#define OFFLOADSIM_OFFLOADSIM_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(OFFLOADSIM_BUILDING)
#    define OFFSIM_API __declspec(dllexport)
#  else
#    define OFFSIM_API __declspec(dllimport)
#  endif
#else
#  define OFFSIM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

/* Values double as CLI exit codes. */
typedef enum offsim_status {
  OFFSIM_OK = 0,
  OFFSIM_ERR_IO = 1,
  OFFSIM_ERR_CONFIG = 2,
  OFFSIM_ERR_EVALUATION = 3,
  OFFSIM_ERR_INVALID_ARGUMENT = 4,
  OFFSIM_ERR_INTERNAL = 5
} offsim_status;

typedef enum offsim_scenario {
  OFFSIM_SCENARIO_LOCAL = 0,
  OFFSIM_SCENARIO_MOBILE = 1,
  OFFSIM_SCENARIO_EDGE = 2
} offsim_scenario;

typedef enum offsim_objective_kind {
  OFFSIM_OBJECTIVE_TIME = 0,
  OFFSIM_OBJECTIVE_ENERGY = 1,
  OFFSIM_OBJECTIVE_WEIGHTED = 2
} offsim_objective_kind;

typedef enum offsim_preset {
  OFFSIM_PRESET_FIG2 = 0,
  OFFSIM_PRESET_FIG3,
  OFFSIM_PRESET_FIG4,
  OFFSIM_PRESET_FIG5,
  OFFSIM_PRESET_FIG6,
  OFFSIM_PRESET_FIG7
} offsim_preset;

#define OFFSIM_PRESET_COUNT 6

typedef struct offsim_latency {
  double transfer_glasses_to_mobile_s;
  double transfer_mobile_to_edge_s;
  double execution_s;
  double total_s;
} offsim_latency;

typedef struct offsim_energy {
  double glasses_tx_j;
  double mobile_rx_j;
  double mobile_tx_j;
  double execution_j;
  double glasses_idle_j;
  double mobile_idle_j;
  double total_j;
} offsim_energy;

typedef struct offsim_config offsim_config;

OFFSIM_API const char* offsim_version(void);

/* Thread-local details of the most recent failure on this thread. The code
 * is e.g. "DISTANCE_OUT_OF_COVERAGE"; both are "" after a success. */
OFFSIM_API const char* offsim_last_error_code(void);
OFFSIM_API const char* offsim_last_error_message(void);

OFFSIM_API void offsim_string_free(char* str);

/* Config lifecycle. */
OFFSIM_API offsim_status offsim_config_new_default(offsim_config** out);
OFFSIM_API offsim_status offsim_config_parse(const char* json_text, offsim_config** out);
OFFSIM_API offsim_status offsim_config_load(const char* path, offsim_config** out);
OFFSIM_API offsim_status offsim_config_clone(const offsim_config* config, offsim_config** out);
OFFSIM_API void offsim_config_free(offsim_config* config);

/* Overrides, in presentation units. */
OFFSIM_API offsim_status offsim_config_set_data_size_mb(offsim_config* config, double mb);
OFFSIM_API offsim_status offsim_config_set_distance_m(offsim_config* config, double meters);
OFFSIM_API offsim_status offsim_config_set_glasses_freq_ghz(offsim_config* config, double ghz);

/* Canonical JSON of the effective config. */
OFFSIM_API offsim_status offsim_config_to_json(const offsim_config* config, char** out_json);

/* Writes the validation report as JSON and the number of issues found. The
 * call itself succeeds for any config. */
OFFSIM_API offsim_status offsim_validate(const offsim_config* config, char** out_report_json,
                                         size_t* out_issue_count);

OFFSIM_API offsim_status offsim_evaluate(const offsim_config* config, offsim_scenario scenario,
                                         offsim_latency* out_latency, offsim_energy* out_energy);
OFFSIM_API offsim_status offsim_evaluate_json(const offsim_config* config,
                                              offsim_scenario scenario, char** out_json);

/* Parses "time", "energy" or "weighted:<lambda>". */
OFFSIM_API offsim_status offsim_objective_parse(const char* text, offsim_objective_kind* out_kind,
                                                double* out_lambda);
OFFSIM_API offsim_status offsim_decide_json(const offsim_config* config,
                                            offsim_objective_kind kind, double lambda,
                                            char** out_json);

/* Runs the sweep named in the config file and writes CSV to out_path (or the
 * sweep's own `output` when out_path is NULL). */
OFFSIM_API offsim_status offsim_run_sweep(const offsim_config* config, const char* sweep_name,
                                          const char* out_path, size_t* out_rows);

OFFSIM_API const char* offsim_preset_name(offsim_preset preset);
OFFSIM_API offsim_status offsim_preset_parse(const char* name, offsim_preset* out);

/* Writes <out_dir>/<preset>.csv. */
OFFSIM_API offsim_status offsim_run_preset(const offsim_config* config, offsim_preset preset,
                                           const char* out_dir, size_t* out_rows);
/* Renders the preset's CSV into a newly allocated string. */
OFFSIM_API offsim_status offsim_preset_csv(const offsim_config* config, offsim_preset preset,
                                           char** out_csv);

#ifdef __cplusplus
}
#endif

#endif /* OFFLOADSIM_OFFLOADSIM_H */
