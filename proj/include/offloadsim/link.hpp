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

#ifndef OFFLOADSIM_LINK_HPP
#define OFFLOADSIM_LINK_HPP

#include "offloadsim/model.hpp"

namespace offloadsim {

/// Rate of the first table row whose max distance covers `distance_m`.
/// Throws DistanceNegative for d < 0 and DistanceOutOfCoverage past the
/// last row; never clamps.
double rate_at(const LinkModel& link, double distance_m);

/// D / B. Throws NonpositiveRate when rate_bps <= 0 and NegativeDataSize
/// when data_size_bits < 0.
double transfer_time(double data_size_bits, double rate_bps);

/// Rate of the glasses<->phone hop. The two devices are body-adjacent, so
/// the hop is evaluated at zero separation (the table's best row).
inline double short_hop_rate(const LinkModel& short_link) { return rate_at(short_link, 0.0); }

}  // namespace offloadsim

#endif  // OFFLOADSIM_LINK_HPP
