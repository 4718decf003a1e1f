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

#ifndef OFFLOADSIM_ERROR_HPP
#define OFFLOADSIM_ERROR_HPP

#include <stdexcept>
#include <string>
#include <string_view>

namespace offloadsim {

enum class ErrorCode {
  TaskSizeNonpositive,
  TaskIntensityNonpositive,
  FrequencyNonpositive,
  CpuPowerNegative,
  RadioPowerNegative,
  RadioIdleExceedsActive,
  RateTableEmpty,
  RateTableDistanceNonpositive,
  RateTableDistanceNotIncreasing,
  RateTableNotDecreasing,
  NonpositiveRate,
  DistanceNegative,
  DistanceNonpositive,
  DistanceOutOfCoverage,
  NegativeDataSize,
  NonfiniteValue,
  WeightOutOfRange,
  AllScenariosFailed,
  ConfigParseError,
  ConfigUnknownKey,
  ConfigTypeError,
  SchemaVersionUnsupported,
  SweepInvalid,
  UnknownSweep,
  IoError,
};

// Decides the process exit status at the CLI boundary.
enum class ErrorCategory {
  Io,
  Config,
  Evaluation,
};

/// Stable machine-readable name, e.g. "DISTANCE_OUT_OF_COVERAGE".
std::string_view error_code_name(ErrorCode code);

ErrorCategory default_category(ErrorCode code);

/// Shortest round-trip decimal form of `value`, for messages.
std::string format_number(double value);

class OffloadError : public std::runtime_error {
 public:
  OffloadError(ErrorCode code, const std::string& message);
  OffloadError(ErrorCode code, ErrorCategory category, const std::string& message);

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return category_; }
  std::string_view code_name() const { return error_code_name(code_); }

 private:
  ErrorCode code_;
  ErrorCategory category_;
};

}  // namespace offloadsim

#endif  // OFFLOADSIM_ERROR_HPP
