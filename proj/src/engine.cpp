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

#include "offloadsim/engine.hpp"

#include "offloadsim/link.hpp"

namespace offloadsim {

namespace {

void require_nonnegative_size(const Task& task) {
  if (!(task.data_size_bits >= 0.0)) {
    throw OffloadError(ErrorCode::NegativeDataSize, "data size must be >= 0 bits");
  }
}

LatencyBreakdown make_latency(double to_mobile_s, double to_edge_s, double execution_s) {
  return {to_mobile_s, to_edge_s, execution_s, to_mobile_s + to_edge_s + execution_s};
}

EnergyBreakdown finish(EnergyBreakdown e) {
  e.total_j = e.glasses_tx_j + e.mobile_rx_j + e.mobile_tx_j + e.execution_j + e.glasses_idle_j +
              e.mobile_idle_j;
  return e;
}

}  // namespace

LatencyBreakdown latency_local(const Task& task, const ComputeResource& glasses) {
  require_nonnegative_size(task);
  return make_latency(0.0, 0.0, glasses.execution_time_s(task));
}

LatencyBreakdown latency_mobile(const Task& task, const ComputeResource& mobile,
                                const LinkModel& short_link) {
  require_nonnegative_size(task);
  const double to_mobile = transfer_time(task.data_size_bits, short_hop_rate(short_link));
  return make_latency(to_mobile, 0.0, mobile.execution_time_s(task));
}

LatencyBreakdown latency_edge(const Task& task, const ComputeResource& edge,
                              const LinkModel& short_link, const LinkModel& long_link,
                              double distance_m) {
  require_nonnegative_size(task);
  const double to_mobile = transfer_time(task.data_size_bits, short_hop_rate(short_link));
  const double to_edge = transfer_time(task.data_size_bits, rate_at(long_link, distance_m));
  return make_latency(to_mobile, to_edge, edge.execution_time_s(task));
}

EnergyBreakdown energy_local(const Task& task, const ComputeResource& glasses) {
  const auto t = latency_local(task, glasses);
  EnergyBreakdown e;
  e.execution_j = glasses.execution_power_w() * t.execution_s;
  return finish(e);
}

EnergyBreakdown energy_mobile(const Task& task, const Device& glasses, const Device& mobile,
                              const LinkModel& short_link) {
  const auto t = latency_mobile(task, mobile.cpu, short_link);
  EnergyBreakdown e;
  e.glasses_tx_j = glasses.radio.tx_w * t.transfer_glasses_to_mobile_s;
  e.mobile_rx_j = mobile.radio.rx_w * t.transfer_glasses_to_mobile_s;
  e.execution_j = mobile.cpu.execution_power_w() * t.execution_s;
  e.glasses_idle_j = glasses.radio.idle_w * t.execution_s;
  return finish(e);
}

EnergyBreakdown energy_edge(const Task& task, const Device& glasses, const Device& mobile,
                            const ComputeResource& edge, const LinkModel& short_link,
                            const LinkModel& long_link, double distance_m) {
  const auto t = latency_edge(task, edge, short_link, long_link, distance_m);
  EnergyBreakdown e;
  e.glasses_tx_j = glasses.radio.tx_w * t.transfer_glasses_to_mobile_s;
  e.mobile_rx_j = mobile.radio.rx_w * t.transfer_glasses_to_mobile_s;
  e.mobile_tx_j = mobile.radio.tx_w * t.transfer_mobile_to_edge_s;
  e.execution_j = edge.execution_power_w() * t.execution_s;
  e.glasses_idle_j = glasses.radio.idle_w * (t.transfer_mobile_to_edge_s + t.execution_s);
  e.mobile_idle_j = mobile.radio.idle_w * t.execution_s;
  return finish(e);
}

ScenarioResult evaluate_unchecked(const ScenarioConfig& config, ScenarioKind kind) {
  ScenarioResult result;
  result.kind = kind;
  switch (kind) {
    case ScenarioKind::Local:
      result.latency = latency_local(config.task, config.glasses.cpu);
      result.energy = energy_local(config.task, config.glasses.cpu);
      break;
    case ScenarioKind::MobileOffload:
      result.latency = latency_mobile(config.task, config.mobile.cpu, config.short_link);
      result.energy = energy_mobile(config.task, config.glasses, config.mobile, config.short_link);
      break;
    case ScenarioKind::EdgeOffload:
      result.latency = latency_edge(config.task, config.edge, config.short_link, config.long_link,
                                    config.mobile_to_edge_distance_m);
      result.energy = energy_edge(config.task, config.glasses, config.mobile, config.edge,
                                  config.short_link, config.long_link,
                                  config.mobile_to_edge_distance_m);
      break;
  }
  return result;
}

ScenarioResult evaluate(const ScenarioConfig& config, ScenarioKind kind) {
  const auto report = validate(config);
  for (const auto& issue : report.issues) {
    const bool blocks = issue.scope == IssueScope::Config || kind == ScenarioKind::EdgeOffload;
    if (!blocks) continue;
    const auto category = issue.code == ErrorCode::DistanceOutOfCoverage ? ErrorCategory::Evaluation
                                                                          : ErrorCategory::Config;
    throw OffloadError(issue.code, category, issue.path + ": " + issue.message);
  }
  return evaluate_unchecked(config, kind);
}

}  // namespace offloadsim
