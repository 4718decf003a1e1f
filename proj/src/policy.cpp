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

#include "offloadsim/policy.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <limits>
#include <string>

namespace offloadsim {

Objective Objective::weighted(double lambda) {
  if (!(lambda >= 0.0 && lambda <= 1.0)) {
    throw OffloadError(ErrorCode::WeightOutOfRange, "objective weight must lie in [0, 1]");
  }
  return {ObjectiveKind::Weighted, lambda};
}

Objective parse_objective(std::string_view text) {
  if (text == "time") return Objective::min_time();
  if (text == "energy") return Objective::min_energy();
  constexpr std::string_view prefix = "weighted:";
  if (text.substr(0, prefix.size()) == prefix) {
    const std::string number(text.substr(prefix.size()));
    char* end = nullptr;
    const double lambda = std::strtod(number.c_str(), &end);
    if (!number.empty() && end == number.c_str() + number.size()) return Objective::weighted(lambda);
  }
  throw OffloadError(ErrorCode::ConfigParseError,
                     "objective must be time, energy or weighted:<lambda>, got '" +
                         std::string(text) + "'");
}

std::string objective_name(const Objective& objective) {
  switch (objective.kind) {
    case ObjectiveKind::MinTime: return "time";
    case ObjectiveKind::MinEnergy: return "energy";
    case ObjectiveKind::Weighted: break;
  }
  char buf[64];
  std::snprintf(buf, sizeof buf, "weighted:%.17g", objective.lambda);
  return buf;
}

double objective_score(const Objective& objective, double total_s, double total_j,
                       double local_total_s, double local_total_j) {
  switch (objective.kind) {
    case ObjectiveKind::MinTime: return total_s;
    case ObjectiveKind::MinEnergy: return total_j;
    case ObjectiveKind::Weighted: break;
  }
  const double t = local_total_s > 0.0 ? total_s / local_total_s : total_s;
  const double e = local_total_j > 0.0 ? total_j / local_total_j : total_j;
  return objective.lambda * t + (1.0 - objective.lambda) * e;
}

Decision decide(const ScenarioConfig& config, const Objective& objective) {
  require_valid(config);

  Decision decision;
  std::map<ScenarioKind, ScenarioResult> results;
  for (const auto kind : kAllScenarios) {
    try {
      results.emplace(kind, evaluate(config, kind));
    } catch (const OffloadError& err) {
      decision.skipped.emplace(kind, SkippedScenario{err.code(), err.what()});
    }
  }
  if (results.empty()) {
    throw OffloadError(ErrorCode::AllScenariosFailed, "no scenario could be evaluated");
  }

  // Local needs no links, so it is evaluable whenever the config is valid.
  const auto& local = results.at(ScenarioKind::Local);
  double best = std::numeric_limits<double>::infinity();
  for (const auto& [kind, result] : results) {
    const double score = objective_score(objective, result.latency.total_s, result.energy.total_j,
                                         local.latency.total_s, local.energy.total_j);
    decision.scores.emplace(kind, ScenarioScore{result.latency.total_s, result.energy.total_j, score});
    best = std::min(best, score);
  }
  // std::map iterates in hop order: the first placement within tolerance of
  // the minimum wins.
  for (const auto& [kind, score] : decision.scores) {
    const double gap = score.objective_score - best;
    if (gap <= kTieTolerance * std::max(std::fabs(best), std::fabs(score.objective_score))) {
      decision.chosen = kind;
      break;
    }
  }
  return decision;
}

}  // namespace offloadsim
