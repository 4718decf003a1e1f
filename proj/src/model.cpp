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

#include "offloadsim/model.hpp"

#include <cmath>

#include "offloadsim/units.hpp"

namespace offloadsim {

std::string_view scenario_name(ScenarioKind kind) {
  switch (kind) {
    case ScenarioKind::Local: return "local";
    case ScenarioKind::MobileOffload: return "mobile_offload";
    case ScenarioKind::EdgeOffload: return "edge_offload";
  }
  return "unknown";
}

std::optional<ScenarioKind> parse_scenario(std::string_view text) {
  if (text == "local") return ScenarioKind::Local;
  if (text == "mobile" || text == "mobile_offload") return ScenarioKind::MobileOffload;
  if (text == "edge" || text == "edge_offload") return ScenarioKind::EdgeOffload;
  return std::nullopt;
}

Task Task::checked(double data_size_bits, double intensity_cycles_per_bit) {
  Task task{data_size_bits, intensity_cycles_per_bit};
  std::vector<ValidationIssue> issues;
  validate_task(task, "task", issues);
  if (!issues.empty()) throw OffloadError(issues.front().code, issues.front().message);
  return task;
}

CpuPowerModel CpuPowerModel::fitted(double power_w, double frequency_hz) {
  return {power_w / (frequency_hz * frequency_hz * frequency_hz), 0.0};
}

namespace defaults {

LinkModel short_link() { return LinkModel{{{10.0, units::mbps_to_bps(54.0)}}}; }

LinkModel long_link() {
  return LinkModel{{
      {100.0, units::mbps_to_bps(54.0)},
      {200.0, units::mbps_to_bps(36.0)},
      {300.0, units::mbps_to_bps(18.0)},
      {400.0, units::mbps_to_bps(9.0)},
      {500.0, units::mbps_to_bps(2.0)},
      {600.0, units::mbps_to_bps(1.0)},
  }};
}

}  // namespace defaults

ScenarioConfig default_config() {
  using namespace defaults;
  ScenarioConfig config;
  config.task = {units::megabytes_to_bits(kDataSizeMb), kIntensityCyclesPerBit};

  config.glasses.cpu = {"glasses", units::ghz_to_hz(kGlassesFrequencyGhz),
                        CpuPowerModel::fitted(kGlassesReferencePowerW,
                                              units::ghz_to_hz(kGlassesReferenceFrequencyGhz))};
  config.glasses.radio = {kGlassesTxW, kGlassesRxW, kGlassesIdleW};

  const double mobile_hz = units::ghz_to_hz(kMobileFrequencyGhz);
  config.mobile.cpu = {"mobile", mobile_hz, CpuPowerModel::fitted(kMobileExecutionPowerW, mobile_hz)};
  config.mobile.radio = {kMobileTxW, kMobileRxW, kMobileIdleW};

  const double edge_hz = units::ghz_to_hz(kEdgeFrequencyGhz);
  config.edge = {"edge", edge_hz, CpuPowerModel::fitted(kEdgeExecutionPowerW, edge_hz)};

  config.short_link = short_link();
  config.long_link = long_link();
  config.mobile_to_edge_distance_m = kMobileToEdgeDistanceM;
  return config;
}

// ---------------------------------------------------------------------------

namespace {

std::string join(std::string_view path, std::string_view field) {
  std::string out(path);
  out += '.';
  out += field;
  return out;
}

void add(std::vector<ValidationIssue>& issues, ErrorCode code, std::string path, std::string message,
         IssueScope scope = IssueScope::Config) {
  issues.push_back({code, scope, std::move(path), std::move(message)});
}

// Reports infinities and NaNs; returns true when the value is finite.
bool check_finite(double value, const std::string& path, std::vector<ValidationIssue>& issues) {
  if (std::isfinite(value)) return true;
  add(issues, ErrorCode::NonfiniteValue, path, path + " must be a finite number");
  return false;
}

}  // namespace

void validate_task(const Task& task, std::string_view path, std::vector<ValidationIssue>& issues) {
  const auto size_path = join(path, "data_size_bits");
  if (check_finite(task.data_size_bits, size_path, issues) && !(task.data_size_bits > 0.0)) {
    add(issues, ErrorCode::TaskSizeNonpositive, size_path, "task data size must be > 0 bits");
  }
  const auto intensity_path = join(path, "intensity_cycles_per_bit");
  if (check_finite(task.intensity_cycles_per_bit, intensity_path, issues) &&
      !(task.intensity_cycles_per_bit > 0.0)) {
    add(issues, ErrorCode::TaskIntensityNonpositive, intensity_path,
        "computational intensity must be > 0 cycles/bit");
  }
}

void validate_resource(const ComputeResource& resource, std::string_view path,
                       std::vector<ValidationIssue>& issues) {
  const auto freq_path = join(path, "frequency_hz");
  if (check_finite(resource.frequency_hz, freq_path, issues) && !(resource.frequency_hz > 0.0)) {
    add(issues, ErrorCode::FrequencyNonpositive, freq_path, "CPU frequency must be > 0 Hz");
  }
  const auto kappa_path = join(path, "power.kappa_w_per_hz3");
  if (check_finite(resource.power.kappa_w_per_hz3, kappa_path, issues) &&
      resource.power.kappa_w_per_hz3 < 0.0) {
    add(issues, ErrorCode::CpuPowerNegative, kappa_path, "dynamic power coefficient must be >= 0");
  }
  const auto static_path = join(path, "power.static_w");
  if (check_finite(resource.power.static_w, static_path, issues) && resource.power.static_w < 0.0) {
    add(issues, ErrorCode::CpuPowerNegative, static_path, "static CPU power must be >= 0 W");
  }
}

void validate_radio(const RadioPowerProfile& radio, std::string_view path,
                    std::vector<ValidationIssue>& issues) {
  bool all_ok = true;
  for (auto [field, value] : {std::pair{"tx_w", radio.tx_w}, std::pair{"rx_w", radio.rx_w},
                              std::pair{"idle_w", radio.idle_w}}) {
    const auto field_path = join(path, field);
    if (!check_finite(value, field_path, issues)) {
      all_ok = false;
    } else if (value < 0.0) {
      all_ok = false;
      add(issues, ErrorCode::RadioPowerNegative, field_path, field_path + " must be >= 0 W");
    }
  }
  if (all_ok && (radio.idle_w > radio.tx_w || radio.idle_w > radio.rx_w)) {
    add(issues, ErrorCode::RadioIdleExceedsActive, join(path, "idle_w"),
        "idle power must not exceed transmit or receive power");
  }
}

void validate_link(const LinkModel& link, std::string_view path, std::vector<ValidationIssue>& issues) {
  const auto table_path = join(path, "rate_table");
  if (link.rate_table.empty()) {
    add(issues, ErrorCode::RateTableEmpty, table_path, "rate table needs at least one row");
    return;
  }
  for (std::size_t i = 0; i < link.rate_table.size(); ++i) {
    const auto& row = link.rate_table[i];
    const auto row_path = table_path + "[" + std::to_string(i) + "]";
    const bool dist_ok = check_finite(row.max_distance_m, row_path + ".max_distance_m", issues);
    const bool rate_ok = check_finite(row.rate_bps, row_path + ".rate_bps", issues);
    if (dist_ok && !(row.max_distance_m > 0.0)) {
      add(issues, ErrorCode::RateTableDistanceNonpositive, row_path + ".max_distance_m",
          "row distance bound must be > 0 m");
    }
    if (rate_ok && !(row.rate_bps > 0.0)) {
      add(issues, ErrorCode::NonpositiveRate, row_path + ".rate_bps", "row rate must be > 0 bit/s");
    }
    if (i == 0) continue;
    const auto& prev = link.rate_table[i - 1];
    if (!(row.max_distance_m > prev.max_distance_m)) {
      add(issues, ErrorCode::RateTableDistanceNotIncreasing, row_path + ".max_distance_m",
          "row distance bounds must be strictly increasing");
    }
    if (!(row.rate_bps < prev.rate_bps)) {
      add(issues, ErrorCode::RateTableNotDecreasing, row_path + ".rate_bps",
          "rates must be strictly decreasing with distance");
    }
  }
}

ValidationReport validate(const ScenarioConfig& config) {
  ValidationReport report;
  auto& issues = report.issues;
  validate_task(config.task, "task", issues);
  validate_resource(config.glasses.cpu, "glasses", issues);
  validate_radio(config.glasses.radio, "glasses.radio", issues);
  validate_resource(config.mobile.cpu, "mobile", issues);
  validate_radio(config.mobile.radio, "mobile.radio", issues);
  validate_resource(config.edge, "edge", issues);
  validate_link(config.short_link, "short_link", issues);

  const std::size_t before_long = issues.size();
  validate_link(config.long_link, "long_link", issues);
  // The long hop is only used by the edge scenario.
  for (std::size_t i = before_long; i < issues.size(); ++i) issues[i].scope = IssueScope::EdgeScenario;

  const double d = config.mobile_to_edge_distance_m;
  const std::string d_path = "mobile_to_edge_distance_m";
  if (!std::isfinite(d)) {
    add(issues, ErrorCode::NonfiniteValue, d_path, d_path + " must be a finite number",
        IssueScope::EdgeScenario);
  } else if (!(d > 0.0)) {
    add(issues, ErrorCode::DistanceNonpositive, d_path, "mobile-to-edge distance must be > 0 m",
        IssueScope::EdgeScenario);
  } else if (!config.long_link.rate_table.empty() && d > config.long_link.coverage_m()) {
    add(issues, ErrorCode::DistanceOutOfCoverage, d_path,
        "distance " + format_number(d) + " m exceeds long-link coverage of " +
            format_number(config.long_link.coverage_m()) + " m",
        IssueScope::EdgeScenario);
  }
  return report;
}

bool ValidationReport::has(ErrorCode code) const {
  for (const auto& issue : issues) {
    if (issue.code == code) return true;
  }
  return false;
}

const ValidationIssue* ValidationReport::first_blocking() const {
  for (const auto& issue : issues) {
    if (issue.scope == IssueScope::Config) return &issue;
  }
  return nullptr;
}

void require_valid(const ScenarioConfig& config) {
  const auto report = validate(config);
  if (const auto* issue = report.first_blocking()) {
    throw OffloadError(issue->code, ErrorCategory::Config, issue->path + ": " + issue->message);
  }
}

}  // namespace offloadsim
