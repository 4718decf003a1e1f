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

#ifndef OFFLOADSIM_HARNESS_HPP
#define OFFLOADSIM_HARNESS_HPP

#include <array>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "offloadsim/engine.hpp"

namespace offloadsim {

// Sweep parameters, in the presentation units of the CSV columns.
enum class SweepParam {
  DataSizeMb,      // "task.data_size"
  GlassesFreqGhz,  // "glasses.frequency"
  DistanceM,       // "distance"
};

std::string_view sweep_param_name(SweepParam param);
std::optional<SweepParam> parse_sweep_param(std::string_view text);

struct SweepAxis {
  SweepParam param = SweepParam::DataSizeMb;
  std::vector<double> values;
};

/// One plotted curve: a placement, optionally pinned to a mobile-to-edge
/// distance (e.g. "edge @ 400 m").
struct Series {
  ScenarioKind kind = ScenarioKind::Local;
  std::optional<double> distance_m;

  bool operator==(const Series&) const = default;
};

/// Grid of at most two axes, evaluated once per series. Rows come out series
/// first, then the axes in declaration order with the last axis varying
/// fastest.
struct SweepSpec {
  ScenarioConfig base;
  std::vector<SweepAxis> axes;
  std::vector<Series> series;
  std::string output;  // optional default output path
};

inline constexpr std::size_t kMaxSweepAxes = 2;

/// Throws SweepInvalid describing the first structural problem.
void validate_sweep(const SweepSpec& spec);

struct ResultRow {
  ScenarioKind kind = ScenarioKind::Local;
  double data_size_mb = 0.0;
  double glasses_freq_ghz = 0.0;
  double distance_m = 0.0;
  std::optional<ScenarioResult> result;
  std::optional<ErrorCode> error;
};

struct ResultTable {
  std::vector<ResultRow> rows;

  std::size_t error_count() const;
  std::string to_csv() const;
};

inline constexpr std::string_view kCsvHeader =
    "scenario,data_size_mb,glasses_freq_ghz,distance_m,t_transfer_gm_s,t_transfer_me_s,t_exec_s,"
    "t_total_s,e_glasses_tx_j,e_mobile_rx_j,e_mobile_tx_j,e_exec_j,e_glasses_idle_j,"
    "e_mobile_idle_j,e_total_j,error";

/// Evaluates every grid point. Points that fail (e.g. out of coverage) stay
/// in the table with their error code; they are never dropped.
ResultTable run_sweep(const SweepSpec& spec);

/// Writes the table's CSV to `path`; throws IoError on failure.
void write_csv(const ResultTable& table, const std::string& path);

enum class PresetId { Fig2, Fig3, Fig4, Fig5, Fig6, Fig7 };

inline constexpr std::array<PresetId, 6> kAllPresets = {PresetId::Fig2, PresetId::Fig3,
                                                        PresetId::Fig4, PresetId::Fig5,
                                                        PresetId::Fig6, PresetId::Fig7};

/// "fig2" ... "fig7".
std::string_view preset_name(PresetId id);
std::optional<PresetId> parse_preset(std::string_view text);

/// Pinned grid for one figure on top of `base`.
SweepSpec preset_spec(PresetId id, const ScenarioConfig& base);

inline ResultTable run_preset(PresetId id, const ScenarioConfig& base) {
  return run_sweep(preset_spec(id, base));
}

inline ResultTable run_preset(PresetId id) { return run_preset(id, default_config()); }

// Preset grids.
std::vector<double> figure_data_sizes_mb();        // 0.1 .. 2.0 step 0.1
std::vector<double> figure_glasses_freqs_ghz();    // 0.4 .. 1.5 step 0.1
std::vector<double> figure_distances_m();          // 50 .. 600 step 50
std::vector<Series> figure_comparison_series();    // local, mobile, edge@{150,400,500}

inline constexpr double kPresetGlassesFreqGhz = 1.0;

}  // namespace offloadsim

#endif  // OFFLOADSIM_HARNESS_HPP
