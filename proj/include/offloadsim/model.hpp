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

#ifndef OFFLOADSIM_MODEL_HPP
#define OFFLOADSIM_MODEL_HPP

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "offloadsim/error.hpp"

namespace offloadsim {

enum class ScenarioKind { Local, MobileOffload, EdgeOffload };

inline constexpr ScenarioKind kAllScenarios[] = {
    ScenarioKind::Local, ScenarioKind::MobileOffload, ScenarioKind::EdgeOffload};

/// "local", "mobile_offload", "edge_offload".
std::string_view scenario_name(ScenarioKind kind);

/// Accepts the canonical names plus the short forms "mobile" and "edge".
std::optional<ScenarioKind> parse_scenario(std::string_view text);

/// An indivisible workload: input size and CPU cycles needed per input bit.
struct Task {
  double data_size_bits = 0.0;
  double intensity_cycles_per_bit = 0.0;

  /// Throws OffloadError if either field is not strictly positive.
  static Task checked(double data_size_bits, double intensity_cycles_per_bit);

  double cycles() const { return data_size_bits * intensity_cycles_per_bit; }
};

/// Execution power as a function of clock: static + kappa * f^3.
struct CpuPowerModel {
  double kappa_w_per_hz3 = 0.0;
  double static_w = 0.0;

  double power_w(double frequency_hz) const {
    return static_w + kappa_w_per_hz3 * frequency_hz * frequency_hz * frequency_hz;
  }

  /// Pure cubic model that draws `power_w` when clocked at `frequency_hz`.
  static CpuPowerModel fitted(double power_w, double frequency_hz);
};

struct ComputeResource {
  std::string name;
  double frequency_hz = 0.0;
  CpuPowerModel power;

  double execution_power_w() const { return power.power_w(frequency_hz); }
  double execution_time_s(const Task& task) const { return task.cycles() / frequency_hz; }
};

struct RadioPowerProfile {
  double tx_w = 0.0;
  double rx_w = 0.0;
  double idle_w = 0.0;
};

/// A CPU with a Wi-Fi radio attached (the glasses and the phone).
struct Device {
  ComputeResource cpu;
  RadioPowerProfile radio;
};

struct RateStep {
  double max_distance_m = 0.0;
  double rate_bps = 0.0;

  bool operator==(const RateStep&) const = default;
};

/// Step-wise rate adaptation: the first row whose max distance covers the
/// link length gives the achievable rate. Rows are ordered by distance with
/// strictly decreasing rates.
struct LinkModel {
  std::vector<RateStep> rate_table;

  double coverage_m() const { return rate_table.empty() ? 0.0 : rate_table.back().max_distance_m; }
};

struct ScenarioConfig {
  Task task;
  Device glasses;
  Device mobile;
  ComputeResource edge;
  LinkModel short_link;  // glasses <-> mobile
  LinkModel long_link;   // mobile <-> edge access point
  double mobile_to_edge_distance_m = 0.0;
};

struct LatencyBreakdown {
  double transfer_glasses_to_mobile_s = 0.0;
  double transfer_mobile_to_edge_s = 0.0;
  double execution_s = 0.0;
  double total_s = 0.0;
};

struct EnergyBreakdown {
  double glasses_tx_j = 0.0;
  double mobile_rx_j = 0.0;
  double mobile_tx_j = 0.0;
  double execution_j = 0.0;
  double glasses_idle_j = 0.0;
  double mobile_idle_j = 0.0;
  double total_j = 0.0;
};

// ---------------------------------------------------------------------------
// Defaults

namespace defaults {

inline constexpr double kDataSizeMb = 2.0;
inline constexpr double kIntensityCyclesPerBit = 1000.0;

inline constexpr double kGlassesFrequencyGhz = 1.0;
inline constexpr double kGlassesReferencePowerW = 2.0;  // drawn at 1.5 GHz
inline constexpr double kGlassesReferenceFrequencyGhz = 1.5;
inline constexpr double kGlassesTxW = 1.0;
inline constexpr double kGlassesRxW = 1.0;
inline constexpr double kGlassesIdleW = 0.3;

inline constexpr double kMobileFrequencyGhz = 2.2;
inline constexpr double kMobileExecutionPowerW = 2.5;
inline constexpr double kMobileTxW = 1.2;
inline constexpr double kMobileRxW = 1.0;
inline constexpr double kMobileIdleW = 0.5;

inline constexpr double kEdgeFrequencyGhz = 20.0;
inline constexpr double kEdgeExecutionPowerW = 20.0;

inline constexpr double kMobileToEdgeDistanceM = 150.0;

LinkModel short_link();
LinkModel long_link();

}  // namespace defaults

/// The simulator's reference world: Google-Glass-class wearable, 2.2 GHz
/// phone, 20 GHz edge server, 54 Mbps Wi-Fi, 2 MB task at 1000 cycles/bit.
ScenarioConfig default_config();

// ---------------------------------------------------------------------------
// Validation

enum class IssueScope {
  Config,        // blocks every scenario
  EdgeScenario,  // blocks only the edge-offload scenario
};

struct ValidationIssue {
  ErrorCode code;
  IssueScope scope = IssueScope::Config;
  std::string path;
  std::string message;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;

  bool empty() const { return issues.empty(); }
  bool has(ErrorCode code) const;
  /// First issue that blocks every scenario, if any.
  const ValidationIssue* first_blocking() const;
};

ValidationReport validate(const ScenarioConfig& config);

// Per-type checks used by validate(); each appends to `issues`.
void validate_task(const Task& task, std::string_view path, std::vector<ValidationIssue>& issues);
void validate_resource(const ComputeResource& resource, std::string_view path,
                       std::vector<ValidationIssue>& issues);
void validate_radio(const RadioPowerProfile& radio, std::string_view path,
                    std::vector<ValidationIssue>& issues);
void validate_link(const LinkModel& link, std::string_view path, std::vector<ValidationIssue>& issues);

/// Throws the first config-scoped issue as an OffloadError.
void require_valid(const ScenarioConfig& config);

}  // namespace offloadsim

#endif  // OFFLOADSIM_MODEL_HPP
