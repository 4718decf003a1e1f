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

#ifndef OFFLOADSIM_UNITS_HPP
#define OFFLOADSIM_UNITS_HPP

// The engine works in SI base units only: bits, bit/s, Hz, W, J, s.
// These helpers are the only place where presentation units are converted.
// Storage and rate units are decimal: 1 MB = 10^6 bytes, 1 Mbps = 10^6 bit/s.

namespace offloadsim::units {

inline constexpr double kBitsPerByte = 8.0;
inline constexpr double kBytesPerMegabyte = 1.0e6;
inline constexpr double kBitsPerMegabyte = kBitsPerByte * kBytesPerMegabyte;
inline constexpr double kHzPerGhz = 1.0e9;
inline constexpr double kBpsPerMbps = 1.0e6;

constexpr double megabytes_to_bits(double mb) { return mb * kBitsPerMegabyte; }
constexpr double bits_to_megabytes(double bits) { return bits / kBitsPerMegabyte; }

constexpr double ghz_to_hz(double ghz) { return ghz * kHzPerGhz; }
constexpr double hz_to_ghz(double hz) { return hz / kHzPerGhz; }

constexpr double mbps_to_bps(double mbps) { return mbps * kBpsPerMbps; }
constexpr double bps_to_mbps(double bps) { return bps / kBpsPerMbps; }

// kappa expressed per GHz^3 -> per Hz^3
constexpr double kappa_per_ghz3_to_per_hz3(double kappa) {
  return kappa / (kHzPerGhz * kHzPerGhz * kHzPerGhz);
}

}  // namespace offloadsim::units

#endif  // OFFLOADSIM_UNITS_HPP
