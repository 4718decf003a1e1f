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

#include "offloadsim/harness.hpp"

#include <charconv>
#include <cmath>
#include <fstream>
#include <set>

#include "offloadsim/units.hpp"

namespace offloadsim {

std::string_view sweep_param_name(SweepParam param) {
  switch (param) {
    case SweepParam::DataSizeMb: return "task.data_size";
    case SweepParam::GlassesFreqGhz: return "glasses.frequency";
    case SweepParam::DistanceM: return "distance";
  }
  return "unknown";
}

std::optional<SweepParam> parse_sweep_param(std::string_view text) {
  for (auto p : {SweepParam::DataSizeMb, SweepParam::GlassesFreqGhz, SweepParam::DistanceM}) {
    if (text == sweep_param_name(p)) return p;
  }
  return std::nullopt;
}

void validate_sweep(const SweepSpec& spec) {
  auto fail = [](const std::string& msg) { throw OffloadError(ErrorCode::SweepInvalid, msg); };
  if (spec.axes.size() > kMaxSweepAxes) fail("a sweep has at most 2 axes");
  if (spec.series.empty()) fail("a sweep needs at least one series");
  std::set<SweepParam> seen;
  for (const auto& axis : spec.axes) {
    const std::string name(sweep_param_name(axis.param));
    if (!seen.insert(axis.param).second) fail("axis " + name + " appears twice");
    if (axis.values.empty()) fail("axis " + name + " has no values");
    for (double v : axis.values) {
      if (!(v > 0.0 && std::isfinite(v))) fail("axis " + name + " has a non-positive or non-finite value");
    }
  }
  for (const auto& s : spec.series) {
    if (s.distance_m && !(*s.distance_m > 0.0 && std::isfinite(*s.distance_m))) {
      fail("series distance must be a positive finite number");
    }
    if (s.distance_m && s.kind != ScenarioKind::EdgeOffload) {
      fail("only edge-offload series take a distance");
    }
  }
}

namespace {

struct GridPoint {
  ScenarioConfig config;
  double data_size_mb;
  double glasses_freq_ghz;
  double distance_m;
};

GridPoint apply(GridPoint point, SweepParam param, double value) {
  switch (param) {
    case SweepParam::DataSizeMb:
      point.config.task.data_size_bits = units::megabytes_to_bits(value);
      point.data_size_mb = value;
      break;
    case SweepParam::GlassesFreqGhz:
      point.config.glasses.cpu.frequency_hz = units::ghz_to_hz(value);
      point.glasses_freq_ghz = value;
      break;
    case SweepParam::DistanceM:
      point.config.mobile_to_edge_distance_m = value;
      point.distance_m = value;
      break;
  }
  return point;
}

void expand(const SweepSpec& spec, std::size_t axis, const GridPoint& point,
            std::vector<GridPoint>& out) {
  if (axis == spec.axes.size()) {
    out.push_back(point);
    return;
  }
  for (double value : spec.axes[axis].values) {
    expand(spec, axis + 1, apply(point, spec.axes[axis].param, value), out);
  }
}

void put_number(std::string& out, double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  out.append(buf, res.ptr);
}

void put_cell(std::string& out, double value, bool applicable) {
  out += ',';
  if (applicable) put_number(out, value);
}

}  // namespace

ResultTable run_sweep(const SweepSpec& spec) {
  validate_sweep(spec);
  const GridPoint origin{spec.base, units::bits_to_megabytes(spec.base.task.data_size_bits),
                         units::hz_to_ghz(spec.base.glasses.cpu.frequency_hz),
                         spec.base.mobile_to_edge_distance_m};

  ResultTable table;
  for (const auto& series : spec.series) {
    GridPoint start = origin;
    if (series.distance_m) start = apply(start, SweepParam::DistanceM, *series.distance_m);
    std::vector<GridPoint> points;
    expand(spec, 0, start, points);
    for (const auto& point : points) {
      ResultRow row{series.kind, point.data_size_mb, point.glasses_freq_ghz, point.distance_m, {}, {}};
      try {
        row.result = evaluate(point.config, series.kind);
      } catch (const OffloadError& err) {
        row.error = err.code();
      }
      table.rows.push_back(std::move(row));
    }
  }
  return table;
}

std::size_t ResultTable::error_count() const {
  std::size_t n = 0;
  for (const auto& row : rows) n += row.error.has_value();
  return n;
}

std::string ResultTable::to_csv() const {
  std::string out(kCsvHeader);
  out += '\n';
  for (const auto& row : rows) {
    out += scenario_name(row.kind);
    put_cell(out, row.data_size_mb, true);
    put_cell(out, row.glasses_freq_ghz, true);
    put_cell(out, row.distance_m, true);

    const bool ok = row.result.has_value();
    const bool offloaded = row.kind != ScenarioKind::Local;
    const bool edge = row.kind == ScenarioKind::EdgeOffload;
    const LatencyBreakdown t = ok ? row.result->latency : LatencyBreakdown{};
    const EnergyBreakdown e = ok ? row.result->energy : EnergyBreakdown{};
    put_cell(out, t.transfer_glasses_to_mobile_s, ok && offloaded);
    put_cell(out, t.transfer_mobile_to_edge_s, ok && edge);
    put_cell(out, t.execution_s, ok);
    put_cell(out, t.total_s, ok);
    put_cell(out, e.glasses_tx_j, ok && offloaded);
    put_cell(out, e.mobile_rx_j, ok && offloaded);
    put_cell(out, e.mobile_tx_j, ok && edge);
    put_cell(out, e.execution_j, ok);
    put_cell(out, e.glasses_idle_j, ok && offloaded);
    put_cell(out, e.mobile_idle_j, ok && edge);
    put_cell(out, e.total_j, ok);
    out += ',';
    if (row.error) out += error_code_name(*row.error);
    out += '\n';
  }
  return out;
}

void write_csv(const ResultTable& table, const std::string& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw OffloadError(ErrorCode::IoError, "cannot open " + path + " for writing");
  const auto csv = table.to_csv();
  file.write(csv.data(), static_cast<std::streamsize>(csv.size()));
  if (!file) throw OffloadError(ErrorCode::IoError, "failed writing " + path);
}

// ---------------------------------------------------------------------------
// Presets

std::string_view preset_name(PresetId id) {
  switch (id) {
    case PresetId::Fig2: return "fig2";
    case PresetId::Fig3: return "fig3";
    case PresetId::Fig4: return "fig4";
    case PresetId::Fig5: return "fig5";
    case PresetId::Fig6: return "fig6";
    case PresetId::Fig7: return "fig7";
  }
  return "unknown";
}

std::optional<PresetId> parse_preset(std::string_view text) {
  for (auto id : kAllPresets) {
    if (text == preset_name(id)) return id;
  }
  return std::nullopt;
}

// Grids are built from integer tenths so every point is the nearest double
// to its decimal value.
std::vector<double> figure_data_sizes_mb() {
  std::vector<double> v;
  for (int tenths = 1; tenths <= 20; ++tenths) v.push_back(tenths / 10.0);
  return v;
}

std::vector<double> figure_glasses_freqs_ghz() {
  std::vector<double> v;
  for (int tenths = 4; tenths <= 15; ++tenths) v.push_back(tenths / 10.0);
  return v;
}

std::vector<double> figure_distances_m() {
  std::vector<double> v;
  for (int d = 50; d <= 600; d += 50) v.push_back(d);
  return v;
}

std::vector<Series> figure_comparison_series() {
  return {{ScenarioKind::Local, std::nullopt},
          {ScenarioKind::MobileOffload, std::nullopt},
          {ScenarioKind::EdgeOffload, 150.0},
          {ScenarioKind::EdgeOffload, 400.0},
          {ScenarioKind::EdgeOffload, 500.0}};
}

SweepSpec preset_spec(PresetId id, const ScenarioConfig& base) {
  SweepSpec spec;
  spec.base = base;
  spec.output = std::string(preset_name(id)) + ".csv";
  switch (id) {
    case PresetId::Fig2:
    case PresetId::Fig3:
      spec.axes = {{SweepParam::GlassesFreqGhz, figure_glasses_freqs_ghz()},
                   {SweepParam::DataSizeMb, figure_data_sizes_mb()}};
      spec.series = {{ScenarioKind::Local, std::nullopt}};
      break;
    case PresetId::Fig4:
      spec.base.glasses.cpu.frequency_hz = units::ghz_to_hz(kPresetGlassesFreqGhz);
      spec.axes = {{SweepParam::DataSizeMb, figure_data_sizes_mb()}};
      spec.series = figure_comparison_series();
      break;
    case PresetId::Fig5:
      spec.base.glasses.cpu.frequency_hz = units::ghz_to_hz(kPresetGlassesFreqGhz);
      spec.axes = {{SweepParam::DataSizeMb, {0.3, 2.0}},
                   {SweepParam::DistanceM, figure_distances_m()}};
      spec.series = {{ScenarioKind::Local, std::nullopt},
                     {ScenarioKind::MobileOffload, std::nullopt},
                     {ScenarioKind::EdgeOffload, std::nullopt}};
      break;
    case PresetId::Fig6:
    case PresetId::Fig7:
      spec.base.glasses.cpu.frequency_hz = units::ghz_to_hz(kPresetGlassesFreqGhz);
      spec.axes = {{SweepParam::DataSizeMb, {2.0}}};
      spec.series = figure_comparison_series();
      break;
  }
  return spec;
}

}  // namespace offloadsim
