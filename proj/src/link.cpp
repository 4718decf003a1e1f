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

#include "offloadsim/link.hpp"

#include <algorithm>
#include <cmath>
#include <string>

namespace offloadsim {

double rate_at(const LinkModel& link, double distance_m) {
  if (std::isnan(distance_m) || distance_m < 0.0) {
    throw OffloadError(ErrorCode::DistanceNegative, "distance must be >= 0 m");
  }
  if (link.rate_table.empty()) {
    throw OffloadError(ErrorCode::RateTableEmpty, ErrorCategory::Config, "rate table is empty");
  }
  auto row = std::find_if(link.rate_table.begin(), link.rate_table.end(),
                          [&](const RateStep& step) { return distance_m <= step.max_distance_m; });
  if (row == link.rate_table.end()) {
    throw OffloadError(ErrorCode::DistanceOutOfCoverage,
                       "distance " + format_number(distance_m) + " m exceeds link coverage of " +
                           format_number(link.coverage_m()) + " m");
  }
  return row->rate_bps;
}

double transfer_time(double data_size_bits, double rate_bps) {
  if (!(rate_bps > 0.0)) {
    throw OffloadError(ErrorCode::NonpositiveRate, "link rate must be > 0 bit/s");
  }
  if (!(data_size_bits >= 0.0)) {
    throw OffloadError(ErrorCode::NegativeDataSize, "data size must be >= 0 bits");
  }
  return data_size_bits / rate_bps;
}

}  // namespace offloadsim
