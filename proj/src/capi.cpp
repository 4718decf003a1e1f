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

#include "offloadsim/offloadsim.h"

#include <cstdlib>
#include <cstring>
#include <filesystem>
#include <new>
#include <string>

#include "json.hpp"
#include "offloadsim/config_io.hpp"
#include "offloadsim/policy.hpp"
#include "offloadsim/units.hpp"

struct offsim_config {
  offloadsim::ConfigFile file;
};

namespace {

using namespace offloadsim;
using json = nlohmann::ordered_json;

thread_local std::string g_error_code;
thread_local std::string g_error_message;

void clear_error() {
  g_error_code.clear();
  g_error_message.clear();
}

offsim_status fail(offsim_status status, std::string_view code, std::string message) {
  g_error_code = code;
  g_error_message = std::move(message);
  return status;
}

offsim_status status_for(ErrorCategory category) {
  switch (category) {
    case ErrorCategory::Io: return OFFSIM_ERR_IO;
    case ErrorCategory::Config: return OFFSIM_ERR_CONFIG;
    case ErrorCategory::Evaluation: return OFFSIM_ERR_EVALUATION;
  }
  return OFFSIM_ERR_INTERNAL;
}

// Runs `body`, translating exceptions into status codes + last error.
template <typename Body>
offsim_status guarded(Body&& body) {
  clear_error();
  try {
    body();
    return OFFSIM_OK;
  } catch (const OffloadError& err) {
    return fail(status_for(err.category()), err.code_name(), err.what());
  } catch (const std::bad_alloc&) {
    return fail(OFFSIM_ERR_INTERNAL, "OUT_OF_MEMORY", "allocation failed");
  } catch (const std::exception& err) {
    return fail(OFFSIM_ERR_INTERNAL, "INTERNAL", err.what());
  }
}

offsim_status null_argument(const char* name) {
  return fail(OFFSIM_ERR_INVALID_ARGUMENT, "INVALID_ARGUMENT", std::string(name) + " is null");
}

char* copy_string(const std::string& s) {
  auto* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

bool to_kind(offsim_scenario scenario, ScenarioKind& kind) {
  switch (scenario) {
    case OFFSIM_SCENARIO_LOCAL: kind = ScenarioKind::Local; return true;
    case OFFSIM_SCENARIO_MOBILE: kind = ScenarioKind::MobileOffload; return true;
    case OFFSIM_SCENARIO_EDGE: kind = ScenarioKind::EdgeOffload; return true;
  }
  return false;
}

bool to_preset(offsim_preset preset, PresetId& id) {
  const int index = static_cast<int>(preset);
  if (index < 0 || index >= OFFSIM_PRESET_COUNT) return false;
  id = kAllPresets[static_cast<std::size_t>(index)];
  return true;
}

json result_json(const ScenarioResult& r, const ScenarioConfig& config) {
  return {
      {"scenario", scenario_name(r.kind)},
      {"data_size_mb", units::bits_to_megabytes(config.task.data_size_bits)},
      {"glasses_freq_ghz", units::hz_to_ghz(config.glasses.cpu.frequency_hz)},
      {"distance_m", config.mobile_to_edge_distance_m},
      {"t_transfer_gm_s", r.latency.transfer_glasses_to_mobile_s},
      {"t_transfer_me_s", r.latency.transfer_mobile_to_edge_s},
      {"t_exec_s", r.latency.execution_s},
      {"t_total_s", r.latency.total_s},
      {"e_glasses_tx_j", r.energy.glasses_tx_j},
      {"e_mobile_rx_j", r.energy.mobile_rx_j},
      {"e_mobile_tx_j", r.energy.mobile_tx_j},
      {"e_exec_j", r.energy.execution_j},
      {"e_glasses_idle_j", r.energy.glasses_idle_j},
      {"e_mobile_idle_j", r.energy.mobile_idle_j},
      {"e_total_j", r.energy.total_j},
  };
}

json decision_json(const Decision& d, const Objective& objective) {
  json scores = json::object();
  for (const auto& [kind, s] : d.scores) {
    scores[std::string(scenario_name(kind))] = {
        {"total_s", s.total_s}, {"total_j", s.total_j}, {"objective_score", s.objective_score}};
  }
  json skipped = json::object();
  for (const auto& [kind, s] : d.skipped) {
    skipped[std::string(scenario_name(kind))] = {{"code", error_code_name(s.code)},
                                                 {"message", s.message}};
  }
  return {{"objective", objective_name(objective)},
          {"chosen", scenario_name(d.chosen)},
          {"scores", scores},
          {"skipped", skipped}};
}

json report_json(const ValidationReport& report) {
  json issues = json::array();
  for (const auto& issue : report.issues) {
    issues.push_back({{"code", error_code_name(issue.code)},
                      {"scope", issue.scope == IssueScope::Config ? "config" : "edge_offload"},
                      {"path", issue.path},
                      {"message", issue.message}});
  }
  return {{"valid", report.empty()}, {"issues", issues}};
}

}  // namespace

extern "C" {

const char* offsim_version(void) { return "1.0.0"; }

const char* offsim_last_error_code(void) { return g_error_code.c_str(); }

const char* offsim_last_error_message(void) { return g_error_message.c_str(); }

void offsim_string_free(char* str) { std::free(str); }

offsim_status offsim_config_new_default(offsim_config** out) {
  if (!out) return null_argument("out");
  return guarded([&] { *out = new offsim_config{}; });
}

offsim_status offsim_config_parse(const char* json_text, offsim_config** out) {
  if (!json_text) return null_argument("json_text");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new offsim_config{parse_config(json_text)}; });
}

offsim_status offsim_config_load(const char* path, offsim_config** out) {
  if (!path) return null_argument("path");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new offsim_config{load_config(path)}; });
}

offsim_status offsim_config_clone(const offsim_config* config, offsim_config** out) {
  if (!config) return null_argument("config");
  if (!out) return null_argument("out");
  return guarded([&] { *out = new offsim_config{*config}; });
}

void offsim_config_free(offsim_config* config) { delete config; }

offsim_status offsim_config_set_data_size_mb(offsim_config* config, double mb) {
  if (!config) return null_argument("config");
  return guarded([&] { config->file.config.task.data_size_bits = units::megabytes_to_bits(mb); });
}

offsim_status offsim_config_set_distance_m(offsim_config* config, double meters) {
  if (!config) return null_argument("config");
  return guarded([&] { config->file.config.mobile_to_edge_distance_m = meters; });
}

offsim_status offsim_config_set_glasses_freq_ghz(offsim_config* config, double ghz) {
  if (!config) return null_argument("config");
  return guarded([&] { config->file.config.glasses.cpu.frequency_hz = units::ghz_to_hz(ghz); });
}

offsim_status offsim_config_to_json(const offsim_config* config, char** out_json) {
  if (!config) return null_argument("config");
  if (!out_json) return null_argument("out_json");
  return guarded([&] { *out_json = copy_string(serialize_config(config->file)); });
}

offsim_status offsim_validate(const offsim_config* config, char** out_report_json,
                              size_t* out_issue_count) {
  if (!config) return null_argument("config");
  return guarded([&] {
    const auto report = validate(config->file.config);
    if (out_issue_count) *out_issue_count = report.issues.size();
    if (out_report_json) *out_report_json = copy_string(report_json(report).dump(2));
  });
}

offsim_status offsim_evaluate(const offsim_config* config, offsim_scenario scenario,
                              offsim_latency* out_latency, offsim_energy* out_energy) {
  if (!config) return null_argument("config");
  ScenarioKind kind;
  if (!to_kind(scenario, kind)) {
    return fail(OFFSIM_ERR_INVALID_ARGUMENT, "INVALID_ARGUMENT", "unknown scenario");
  }
  return guarded([&] {
    const auto r = evaluate(config->file.config, kind);
    if (out_latency) {
      *out_latency = {r.latency.transfer_glasses_to_mobile_s, r.latency.transfer_mobile_to_edge_s,
                      r.latency.execution_s, r.latency.total_s};
    }
    if (out_energy) {
      *out_energy = {r.energy.glasses_tx_j,   r.energy.mobile_rx_j,    r.energy.mobile_tx_j,
                     r.energy.execution_j,    r.energy.glasses_idle_j, r.energy.mobile_idle_j,
                     r.energy.total_j};
    }
  });
}

offsim_status offsim_evaluate_json(const offsim_config* config, offsim_scenario scenario,
                                   char** out_json) {
  if (!config) return null_argument("config");
  if (!out_json) return null_argument("out_json");
  ScenarioKind kind;
  if (!to_kind(scenario, kind)) {
    return fail(OFFSIM_ERR_INVALID_ARGUMENT, "INVALID_ARGUMENT", "unknown scenario");
  }
  return guarded([&] {
    const auto r = evaluate(config->file.config, kind);
    *out_json = copy_string(result_json(r, config->file.config).dump(2));
  });
}

offsim_status offsim_objective_parse(const char* text, offsim_objective_kind* out_kind,
                                     double* out_lambda) {
  if (!text) return null_argument("text");
  if (!out_kind || !out_lambda) return null_argument("out");
  return guarded([&] {
    const auto objective = parse_objective(text);
    *out_kind = static_cast<offsim_objective_kind>(objective.kind);
    *out_lambda = objective.lambda;
  });
}

offsim_status offsim_decide_json(const offsim_config* config, offsim_objective_kind kind,
                                 double lambda, char** out_json) {
  if (!config) return null_argument("config");
  if (!out_json) return null_argument("out_json");
  return guarded([&] {
    Objective objective;
    switch (kind) {
      case OFFSIM_OBJECTIVE_TIME: objective = Objective::min_time(); break;
      case OFFSIM_OBJECTIVE_ENERGY: objective = Objective::min_energy(); break;
      case OFFSIM_OBJECTIVE_WEIGHTED: objective = Objective::weighted(lambda); break;
      default: throw OffloadError(ErrorCode::ConfigParseError, "unknown objective kind");
    }
    const auto decision = decide(config->file.config, objective);
    *out_json = copy_string(decision_json(decision, objective).dump(2));
  });
}

offsim_status offsim_run_sweep(const offsim_config* config, const char* sweep_name,
                               const char* out_path, size_t* out_rows) {
  if (!config) return null_argument("config");
  if (!sweep_name) return null_argument("sweep_name");
  return guarded([&] {
    const auto it = config->file.sweeps.find(sweep_name);
    if (it == config->file.sweeps.end()) {
      throw OffloadError(ErrorCode::UnknownSweep,
                         std::string("no sweep named '") + sweep_name + "' in config");
    }
    auto spec = it->second;
    spec.base = config->file.config;  // pick up overrides applied after parsing
    const std::string path = out_path ? out_path : spec.output;
    if (path.empty()) {
      throw OffloadError(ErrorCode::SweepInvalid, "sweep has no output path");
    }
    require_valid(spec.base);
    const auto table = run_sweep(spec);
    write_csv(table, path);
    if (out_rows) *out_rows = table.rows.size();
  });
}

const char* offsim_preset_name(offsim_preset preset) {
  PresetId id;
  if (!to_preset(preset, id)) return "";
  return preset_name(id).data();
}

offsim_status offsim_preset_parse(const char* name, offsim_preset* out) {
  if (!name) return null_argument("name");
  if (!out) return null_argument("out");
  clear_error();
  const auto id = parse_preset(name);
  if (!id) {
    return fail(OFFSIM_ERR_INVALID_ARGUMENT, "UNKNOWN_PRESET", std::string("unknown preset '") + name + "'");
  }
  *out = static_cast<offsim_preset>(*id);
  return OFFSIM_OK;
}

offsim_status offsim_run_preset(const offsim_config* config, offsim_preset preset,
                                const char* out_dir, size_t* out_rows) {
  if (!config) return null_argument("config");
  if (!out_dir) return null_argument("out_dir");
  PresetId id;
  if (!to_preset(preset, id)) return fail(OFFSIM_ERR_INVALID_ARGUMENT, "UNKNOWN_PRESET", "unknown preset");
  return guarded([&] {
    require_valid(config->file.config);
    const auto table = run_preset(id, config->file.config);
    const auto path = std::filesystem::path(out_dir) / (std::string(preset_name(id)) + ".csv");
    write_csv(table, path.string());
    if (out_rows) *out_rows = table.rows.size();
  });
}

offsim_status offsim_preset_csv(const offsim_config* config, offsim_preset preset, char** out_csv) {
  if (!config) return null_argument("config");
  if (!out_csv) return null_argument("out_csv");
  PresetId id;
  if (!to_preset(preset, id)) return fail(OFFSIM_ERR_INVALID_ARGUMENT, "UNKNOWN_PRESET", "unknown preset");
  return guarded([&] {
    require_valid(config->file.config);
    *out_csv = copy_string(run_preset(id, config->file.config).to_csv());
  });
}

}  // extern "C"
