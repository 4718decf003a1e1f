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

// offloadsim: evaluate, compare and sweep wearable offloading scenarios.

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "offloadsim/offloadsim.h"

namespace {

struct ConfigDeleter {
  void operator()(offsim_config* c) const { offsim_config_free(c); }
};
using ConfigPtr = std::unique_ptr<offsim_config, ConfigDeleter>;

struct StringDeleter {
  void operator()(char* s) const { offsim_string_free(s); }
};
using OwnedString = std::unique_ptr<char, StringDeleter>;

struct Options {
  std::string config_path;
  std::optional<double> data_size_mb;
  std::optional<double> distance_m;
  std::optional<double> glasses_freq_ghz;
  bool print_effective_config = false;

  std::string scenario;
  std::string objective = "time";
  std::string sweep_name;
  std::string sweep_out;
  std::string preset;
  std::string out_dir = ".";
};

int report_error(offsim_status status) {
  nlohmann::ordered_json err = {{"error",
                         {{"code", offsim_last_error_code()},
                          {"message", offsim_last_error_message()}}}};
  std::cerr << err.dump(2) << "\n";
  return static_cast<int>(status);
}

int usage_error(const std::string& code, const std::string& message) {
  nlohmann::ordered_json err = {{"error", {{"code", code}, {"message", message}}}};
  std::cerr << err.dump(2) << "\n";
  return OFFSIM_ERR_CONFIG;
}

void print_owned(char* raw) {
  OwnedString text(raw);
  std::cout << text.get() << "\n";
}

// Defaults <- config file <- command-line overrides.
offsim_status load_effective(const Options& opts, ConfigPtr& out) {
  offsim_config* raw = nullptr;
  const offsim_status st = opts.config_path.empty() ? offsim_config_new_default(&raw)
                                                    : offsim_config_load(opts.config_path.c_str(), &raw);
  if (st != OFFSIM_OK) return st;
  out.reset(raw);
  if (opts.data_size_mb) offsim_config_set_data_size_mb(raw, *opts.data_size_mb);
  if (opts.distance_m) offsim_config_set_distance_m(raw, *opts.distance_m);
  if (opts.glasses_freq_ghz) offsim_config_set_glasses_freq_ghz(raw, *opts.glasses_freq_ghz);
  return OFFSIM_OK;
}

std::optional<offsim_scenario> scenario_from(const std::string& name) {
  if (name == "local") return OFFSIM_SCENARIO_LOCAL;
  if (name == "mobile" || name == "mobile_offload") return OFFSIM_SCENARIO_MOBILE;
  if (name == "edge" || name == "edge_offload") return OFFSIM_SCENARIO_EDGE;
  return std::nullopt;
}

int cmd_validate(const offsim_config* config) {
  char* report = nullptr;
  size_t issues = 0;
  if (const auto st = offsim_validate(config, &report, &issues); st != OFFSIM_OK) return report_error(st);
  print_owned(report);
  return issues == 0 ? 0 : OFFSIM_ERR_CONFIG;
}

int cmd_eval(const offsim_config* config, const Options& opts) {
  const auto scenario = scenario_from(opts.scenario);
  if (!scenario) return usage_error("UNKNOWN_SCENARIO", "unknown scenario '" + opts.scenario + "'");
  char* out = nullptr;
  if (const auto st = offsim_evaluate_json(config, *scenario, &out); st != OFFSIM_OK) {
    return report_error(st);
  }
  print_owned(out);
  return 0;
}

int cmd_decide(const offsim_config* config, const Options& opts) {
  offsim_objective_kind kind{};
  double lambda = 0.0;
  if (const auto st = offsim_objective_parse(opts.objective.c_str(), &kind, &lambda); st != OFFSIM_OK) {
    return report_error(st);
  }
  char* out = nullptr;
  if (const auto st = offsim_decide_json(config, kind, lambda, &out); st != OFFSIM_OK) {
    return report_error(st);
  }
  print_owned(out);
  return 0;
}

int cmd_sweep(const offsim_config* config, const Options& opts) {
  size_t rows = 0;
  const char* out = opts.sweep_out.empty() ? nullptr : opts.sweep_out.c_str();
  if (const auto st = offsim_run_sweep(config, opts.sweep_name.c_str(), out, &rows); st != OFFSIM_OK) {
    return report_error(st);
  }
  std::cout << opts.sweep_name << ": " << rows << " rows";
  if (out) std::cout << " -> " << out;
  std::cout << "\n";
  return 0;
}

int cmd_reproduce(const offsim_config* config, const Options& opts) {
  std::vector<offsim_preset> presets;
  if (opts.preset == "all") {
    for (int i = 0; i < OFFSIM_PRESET_COUNT; ++i) presets.push_back(static_cast<offsim_preset>(i));
  } else {
    offsim_preset id{};
    if (offsim_preset_parse(opts.preset.c_str(), &id) != OFFSIM_OK) {
      return usage_error("UNKNOWN_PRESET", "preset must be fig2..fig7 or all, got '" + opts.preset + "'");
    }
    presets.push_back(id);
  }

  std::error_code ec;
  std::filesystem::create_directories(opts.out_dir, ec);
  if (ec) {
    nlohmann::ordered_json err = {{"error", {{"code", "IO_ERROR"}, {"message", "cannot create " + opts.out_dir}}}};
    std::cerr << err.dump(2) << "\n";
    return OFFSIM_ERR_IO;
  }
  for (auto preset : presets) {
    size_t rows = 0;
    if (const auto st = offsim_run_preset(config, preset, opts.out_dir.c_str(), &rows); st != OFFSIM_OK) {
      return report_error(st);
    }
    const auto path = std::filesystem::path(opts.out_dir) / (std::string(offsim_preset_name(preset)) + ".csv");
    std::cout << offsim_preset_name(preset) << ": " << rows << " rows -> " << path.string() << "\n";
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  Options opts;
  CLI::App app{"Latency/energy simulator for offloading wearable tasks to a phone or edge server",
               "offloadsim"};
  app.fallthrough();
  app.set_version_flag("--version", std::string(offsim_version()));

  if (const char* env = std::getenv("OFFLOADSIM_CONFIG")) opts.config_path = env;
  app.add_option("-c,--config", opts.config_path,
                 "JSON config file (default: $OFFLOADSIM_CONFIG, else built-in defaults)");
  app.add_option("--data-size-mb", opts.data_size_mb, "override task data size (MB)");
  app.add_option("--distance-m", opts.distance_m, "override mobile-to-edge distance (m)");
  app.add_option("--glasses-freq-ghz", opts.glasses_freq_ghz, "override glasses CPU frequency (GHz)");
  app.add_flag("--print-effective-config", opts.print_effective_config,
               "print the merged defaults+file+flags config and exit");

  auto* validate = app.add_subcommand("validate", "check a config and print the validation report");
  auto* eval = app.add_subcommand("eval", "evaluate one scenario and print its breakdowns");
  eval->add_option("-s,--scenario", opts.scenario, "local | mobile | edge")->required();
  auto* decide = app.add_subcommand("decide", "pick the cheapest execution site");
  decide->add_option("-o,--objective", opts.objective, "time | energy | weighted:<lambda>");
  auto* sweep = app.add_subcommand("sweep", "run a named sweep from the config file");
  sweep->add_option("name", opts.sweep_name, "sweep name")->required();
  sweep->add_option("--out", opts.sweep_out, "CSV output path (default: the sweep's output)");
  auto* reproduce = app.add_subcommand("reproduce", "write the figure presets as CSV");
  reproduce->add_option("preset", opts.preset, "fig2..fig7 or all")->required();
  reproduce->add_option("--out", opts.out_dir, "output directory");
  app.require_subcommand(0, 1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return OFFSIM_ERR_CONFIG;
  }

  ConfigPtr config;
  if (const auto st = load_effective(opts, config); st != OFFSIM_OK) return report_error(st);

  if (opts.print_effective_config) {
    char* json = nullptr;
    if (const auto st = offsim_config_to_json(config.get(), &json); st != OFFSIM_OK) {
      return report_error(st);
    }
    OwnedString text(json);
    std::cout << text.get();
    return 0;
  }

  if (*validate) return cmd_validate(config.get());
  if (*eval) return cmd_eval(config.get(), opts);
  if (*decide) return cmd_decide(config.get(), opts);
  if (*sweep) return cmd_sweep(config.get(), opts);
  if (*reproduce) return cmd_reproduce(config.get(), opts);

  std::cerr << app.help();
  return OFFSIM_ERR_CONFIG;
}
