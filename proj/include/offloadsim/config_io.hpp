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

#ifndef OFFLOADSIM_CONFIG_IO_HPP
#define OFFLOADSIM_CONFIG_IO_HPP

#include <map>
#include <string>
#include <string_view>

#include "offloadsim/harness.hpp"

namespace offloadsim {

inline constexpr int kSchemaVersion = 1;

/// The on-disk document: a scenario config plus named sweeps. Every named
/// sweep uses `config` as its base.
struct ConfigFile {
  ScenarioConfig config = default_config();
  std::map<std::string, SweepSpec> sweeps;
};

/// Parses a JSON config document. Omitted keys keep their defaults; unknown
/// keys, wrong types and malformed JSON throw (ConfigUnknownKey,
/// ConfigTypeError, ConfigParseError). Semantic checks are left to validate().
ConfigFile parse_config(std::string_view json_text);

/// Reads and parses `path`; throws IoError if it cannot be read.
ConfigFile load_config(const std::string& path);

/// Canonical JSON form of the effective config (all keys present).
std::string serialize_config(const ConfigFile& file);

}  // namespace offloadsim

#endif  // OFFLOADSIM_CONFIG_IO_HPP
