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

#ifndef OFFLOADSIM_ENGINE_HPP
#define OFFLOADSIM_ENGINE_HPP

#include "offloadsim/model.hpp"

namespace offloadsim {

// Completion time and energy for the three execution placements. Every
// energy term is (state power) x (state duration) with durations taken from
// the matching latency breakdown. Result return is treated as free in both
// time and energy, and transmit/receive on a hop overlap for the full
// transfer time.
//
// The per-scenario functions accept D == 0 (everything evaluates to zero);
// evaluate() additionally rejects configs that fail validation.

LatencyBreakdown latency_local(const Task& task, const ComputeResource& glasses);

LatencyBreakdown latency_mobile(const Task& task, const ComputeResource& mobile,
                                const LinkModel& short_link);

/// Throws DistanceOutOfCoverage when `distance_m` is past the long link.
LatencyBreakdown latency_edge(const Task& task, const ComputeResource& edge,
                              const LinkModel& short_link, const LinkModel& long_link,
                              double distance_m);

EnergyBreakdown energy_local(const Task& task, const ComputeResource& glasses);

/// The glasses idle only while the phone computes; during the transfer their
/// radio is transmitting.
EnergyBreakdown energy_mobile(const Task& task, const Device& glasses, const Device& mobile,
                              const LinkModel& short_link);

/// Glasses idle over (mobile->edge transfer + edge execution); the phone
/// idles over edge execution. Edge execution energy is kept as its own
/// component since it is not drawn from either battery.
EnergyBreakdown energy_edge(const Task& task, const Device& glasses, const Device& mobile,
                            const ComputeResource& edge, const LinkModel& short_link,
                            const LinkModel& long_link, double distance_m);

struct ScenarioResult {
  ScenarioKind kind = ScenarioKind::Local;
  LatencyBreakdown latency;
  EnergyBreakdown energy;
};

/// Validates `config` and dispatches to the scenario's latency/energy pair.
/// Config-wide validation failures throw with ErrorCategory::Config; an
/// edge distance beyond coverage throws DistanceOutOfCoverage.
ScenarioResult evaluate(const ScenarioConfig& config, ScenarioKind kind);

/// evaluate() without the validation pass, for callers that already ran it.
ScenarioResult evaluate_unchecked(const ScenarioConfig& config, ScenarioKind kind);

}  // namespace offloadsim

#endif  // OFFLOADSIM_ENGINE_HPP
