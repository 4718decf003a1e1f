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

#ifndef OFFLOADSIM_POLICY_HPP
#define OFFLOADSIM_POLICY_HPP

#include <map>
#include <string>
#include <string_view>

#include "offloadsim/engine.hpp"

namespace offloadsim {

enum class ObjectiveKind { MinTime, MinEnergy, Weighted };

/// Weighted scores lambda * t/t_local + (1 - lambda) * e/e_local.
struct Objective {
  ObjectiveKind kind = ObjectiveKind::MinTime;
  double lambda = 1.0;

  static Objective min_time() { return {ObjectiveKind::MinTime, 1.0}; }
  static Objective min_energy() { return {ObjectiveKind::MinEnergy, 0.0}; }
  /// Throws WeightOutOfRange unless 0 <= lambda <= 1.
  static Objective weighted(double lambda);
};

/// "time", "energy" or "weighted:<lambda>".
Objective parse_objective(std::string_view text);
std::string objective_name(const Objective& objective);

struct ScenarioScore {
  double total_s = 0.0;
  double total_j = 0.0;
  double objective_score = 0.0;
};

struct SkippedScenario {
  ErrorCode code;
  std::string message;
};

struct Decision {
  ScenarioKind chosen = ScenarioKind::Local;
  std::map<ScenarioKind, ScenarioScore> scores;
  std::map<ScenarioKind, SkippedScenario> skipped;
};

/// Relative score gap below which two scenarios count as tied; ties go to
/// the placement with fewer network hops.
inline constexpr double kTieTolerance = 1e-9;

/// Scores the objective given the local reference totals. Zero references
/// leave the corresponding term unnormalized.
double objective_score(const Objective& objective, double total_s, double total_j,
                       double local_total_s, double local_total_j);

/// Evaluates all three placements and picks the cheapest under `objective`.
/// Placements that fail to evaluate (e.g. out of coverage) are recorded in
/// `skipped`. Throws the config error if the config is invalid, and
/// AllScenariosFailed if nothing is evaluable.
Decision decide(const ScenarioConfig& config, const Objective& objective);

}  // namespace offloadsim

#endif  // OFFLOADSIM_POLICY_HPP
