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

#include "offloadsim/error.hpp"

#include <charconv>

namespace offloadsim {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::TaskSizeNonpositive: return "TASK_SIZE_NONPOSITIVE";
    case ErrorCode::TaskIntensityNonpositive: return "TASK_INTENSITY_NONPOSITIVE";
    case ErrorCode::FrequencyNonpositive: return "FREQUENCY_NONPOSITIVE";
    case ErrorCode::CpuPowerNegative: return "CPU_POWER_NEGATIVE";
    case ErrorCode::RadioPowerNegative: return "RADIO_POWER_NEGATIVE";
    case ErrorCode::RadioIdleExceedsActive: return "RADIO_IDLE_EXCEEDS_ACTIVE";
    case ErrorCode::RateTableEmpty: return "RATE_TABLE_EMPTY";
    case ErrorCode::RateTableDistanceNonpositive: return "RATE_TABLE_DISTANCE_NONPOSITIVE";
    case ErrorCode::RateTableDistanceNotIncreasing: return "RATE_TABLE_DISTANCE_NOT_INCREASING";
    case ErrorCode::RateTableNotDecreasing: return "RATE_TABLE_NOT_DECREASING";
    case ErrorCode::NonpositiveRate: return "NONPOSITIVE_RATE";
    case ErrorCode::DistanceNegative: return "DISTANCE_NEGATIVE";
    case ErrorCode::DistanceNonpositive: return "DISTANCE_NONPOSITIVE";
    case ErrorCode::DistanceOutOfCoverage: return "DISTANCE_OUT_OF_COVERAGE";
    case ErrorCode::NegativeDataSize: return "NEGATIVE_DATA_SIZE";
    case ErrorCode::NonfiniteValue: return "NONFINITE_VALUE";
    case ErrorCode::WeightOutOfRange: return "WEIGHT_OUT_OF_RANGE";
    case ErrorCode::AllScenariosFailed: return "ALL_SCENARIOS_FAILED";
    case ErrorCode::ConfigParseError: return "CONFIG_PARSE_ERROR";
    case ErrorCode::ConfigUnknownKey: return "CONFIG_UNKNOWN_KEY";
    case ErrorCode::ConfigTypeError: return "CONFIG_TYPE_ERROR";
    case ErrorCode::SchemaVersionUnsupported: return "SCHEMA_VERSION_UNSUPPORTED";
    case ErrorCode::SweepInvalid: return "SWEEP_INVALID";
    case ErrorCode::UnknownSweep: return "UNKNOWN_SWEEP";
    case ErrorCode::IoError: return "IO_ERROR";
  }
  return "UNKNOWN";
}

ErrorCategory default_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::IoError:
      return ErrorCategory::Io;
    case ErrorCode::NonpositiveRate:
    case ErrorCode::DistanceNegative:
    case ErrorCode::DistanceOutOfCoverage:
    case ErrorCode::NegativeDataSize:
    case ErrorCode::AllScenariosFailed:
      return ErrorCategory::Evaluation;
    default:
      return ErrorCategory::Config;
  }
}

std::string format_number(double value) {
  char buf[32];
  const auto res = std::to_chars(buf, buf + sizeof buf, value);
  return std::string(buf, res.ptr);
}

OffloadError::OffloadError(ErrorCode code, const std::string& message)
    : OffloadError(code, default_category(code), message) {}

OffloadError::OffloadError(ErrorCode code, ErrorCategory category, const std::string& message)
    : std::runtime_error(message), code_(code), category_(category) {}

}  // namespace offloadsim
