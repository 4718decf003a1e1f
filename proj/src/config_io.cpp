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

#include "offloadsim/config_io.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>

#include "json.hpp"

namespace offloadsim {

using json = nlohmann::ordered_json;

namespace {

[[noreturn]] void type_error(const std::string& path, std::string_view expected) {
  throw OffloadError(ErrorCode::ConfigTypeError, path + " must be " + std::string(expected));
}

// Rejects keys outside `allowed`.
void check_keys(const json& object, const std::string& path,
                std::initializer_list<std::string_view> allowed) {
  if (!object.is_object()) type_error(path, "an object");
  for (const auto& item : object.items()) {
    bool known = false;
    for (auto key : allowed) known = known || item.key() == key;
    if (!known) {
      throw OffloadError(ErrorCode::ConfigUnknownKey,
                         "unknown key '" + item.key() + "' in " + (path.empty() ? "<root>" : path));
    }
  }
}

std::string child(const std::string& path, std::string_view key) {
  return path.empty() ? std::string(key) : path + "." + std::string(key);
}

double as_number(const json& value, const std::string& path) {
  if (!value.is_number()) type_error(path, "a number");
  return value.get<double>();
}

void read_number(const json& object, const std::string& path, std::string_view key, double& out) {
  const auto it = object.find(key);
  if (it != object.end()) out = as_number(*it, child(path, key));
}

void read_string(const json& object, const std::string& path, std::string_view key,
                 std::string& out) {
  const auto it = object.find(key);
  if (it == object.end()) return;
  if (!it->is_string()) type_error(child(path, key), "a string");
  out = it->get<std::string>();
}

void read_power(const json& j, const std::string& path, CpuPowerModel& power) {
  check_keys(j, path, {"kappa_w_per_hz3", "static_w"});
  read_number(j, path, "kappa_w_per_hz3", power.kappa_w_per_hz3);
  read_number(j, path, "static_w", power.static_w);
}

void read_resource_fields(const json& j, const std::string& path, ComputeResource& cpu) {
  read_string(j, path, "name", cpu.name);
  read_number(j, path, "frequency_hz", cpu.frequency_hz);
  if (const auto it = j.find("power"); it != j.end()) read_power(*it, child(path, "power"), cpu.power);
}

void read_device(const json& j, const std::string& path, Device& device) {
  check_keys(j, path, {"name", "frequency_hz", "power", "radio"});
  read_resource_fields(j, path, device.cpu);
  if (const auto it = j.find("radio"); it != j.end()) {
    const auto radio_path = child(path, "radio");
    check_keys(*it, radio_path, {"tx_w", "rx_w", "idle_w"});
    read_number(*it, radio_path, "tx_w", device.radio.tx_w);
    read_number(*it, radio_path, "rx_w", device.radio.rx_w);
    read_number(*it, radio_path, "idle_w", device.radio.idle_w);
  }
}

void read_link(const json& j, const std::string& path, LinkModel& link) {
  check_keys(j, path, {"rate_table"});
  const auto it = j.find("rate_table");
  if (it == j.end()) return;
  const auto table_path = child(path, "rate_table");
  if (!it->is_array()) type_error(table_path, "an array");
  link.rate_table.clear();
  for (std::size_t i = 0; i < it->size(); ++i) {
    const auto row_path = table_path + "[" + std::to_string(i) + "]";
    const auto& row = (*it)[i];
    check_keys(row, row_path, {"max_distance_m", "rate_bps"});
    if (!row.contains("max_distance_m") || !row.contains("rate_bps")) {
      type_error(row_path, "an object with max_distance_m and rate_bps");
    }
    link.rate_table.push_back({as_number(row["max_distance_m"], child(row_path, "max_distance_m")),
                               as_number(row["rate_bps"], child(row_path, "rate_bps"))});
  }
}

SweepSpec read_sweep(const json& j, const std::string& path, const ScenarioConfig& base) {
  check_keys(j, path, {"axes", "series", "output"});
  SweepSpec spec;
  spec.base = base;
  read_string(j, path, "output", spec.output);

  if (const auto it = j.find("axes"); it != j.end()) {
    if (!it->is_array()) type_error(child(path, "axes"), "an array");
    for (std::size_t i = 0; i < it->size(); ++i) {
      const auto axis_path = child(path, "axes") + "[" + std::to_string(i) + "]";
      const auto& axis = (*it)[i];
      check_keys(axis, axis_path, {"param", "values"});
      std::string name;
      read_string(axis, axis_path, "param", name);
      const auto param = parse_sweep_param(name);
      if (!param) {
        throw OffloadError(ErrorCode::SweepInvalid,
                           axis_path + ".param: unknown sweep parameter '" + name + "'");
      }
      SweepAxis parsed{*param, {}};
      const auto values = axis.find("values");
      if (values == axis.end() || !values->is_array()) type_error(child(axis_path, "values"), "an array");
      for (const auto& v : *values) parsed.values.push_back(as_number(v, child(axis_path, "values")));
      spec.axes.push_back(std::move(parsed));
    }
  }

  const auto series = j.find("series");
  if (series == j.end()) {
    for (auto kind : kAllScenarios) spec.series.push_back({kind, std::nullopt});
  } else {
    if (!series->is_array()) type_error(child(path, "series"), "an array");
    for (std::size_t i = 0; i < series->size(); ++i) {
      const auto s_path = child(path, "series") + "[" + std::to_string(i) + "]";
      const auto& s = (*series)[i];
      check_keys(s, s_path, {"scenario", "distance_m"});
      std::string name;
      read_string(s, s_path, "scenario", name);
      const auto kind = parse_scenario(name);
      if (!kind) {
        throw OffloadError(ErrorCode::SweepInvalid, s_path + ".scenario: unknown scenario '" + name + "'");
      }
      Series parsed{*kind, std::nullopt};
      if (const auto d = s.find("distance_m"); d != s.end()) {
        parsed.distance_m = as_number(*d, child(s_path, "distance_m"));
      }
      spec.series.push_back(parsed);
    }
  }
  return spec;
}

json power_json(const CpuPowerModel& p) {
  return {{"kappa_w_per_hz3", p.kappa_w_per_hz3}, {"static_w", p.static_w}};
}

json resource_json(const ComputeResource& r) {
  return {{"name", r.name}, {"frequency_hz", r.frequency_hz}, {"power", power_json(r.power)}};
}

json device_json(const Device& d) {
  auto j = resource_json(d.cpu);
  j["radio"] = {{"tx_w", d.radio.tx_w}, {"rx_w", d.radio.rx_w}, {"idle_w", d.radio.idle_w}};
  return j;
}

json link_json(const LinkModel& link) {
  json rows = json::array();
  for (const auto& row : link.rate_table) {
    rows.push_back({{"max_distance_m", row.max_distance_m}, {"rate_bps", row.rate_bps}});
  }
  return {{"rate_table", rows}};
}

json sweep_json(const SweepSpec& spec) {
  json axes = json::array();
  for (const auto& axis : spec.axes) {
    axes.push_back({{"param", sweep_param_name(axis.param)}, {"values", axis.values}});
  }
  json series = json::array();
  for (const auto& s : spec.series) {
    json item = {{"scenario", scenario_name(s.kind)}};
    if (s.distance_m) item["distance_m"] = *s.distance_m;
    series.push_back(item);
  }
  json j = {{"axes", axes}, {"series", series}};
  if (!spec.output.empty()) j["output"] = spec.output;
  return j;
}

}  // namespace

ConfigFile parse_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& err) {
    throw OffloadError(ErrorCode::ConfigParseError, std::string("malformed JSON: ") + err.what());
  }
  check_keys(root, "", {"schema_version", "task", "glasses", "mobile", "edge", "short_link",
                        "long_link", "mobile_to_edge_distance_m", "sweeps"});

  if (const auto it = root.find("schema_version"); it != root.end()) {
    if (!it->is_number_integer()) type_error("schema_version", "an integer");
    if (it->get<int>() != kSchemaVersion) {
      throw OffloadError(ErrorCode::SchemaVersionUnsupported,
                         "schema_version " + it->dump() + " is not supported (expected " +
                             std::to_string(kSchemaVersion) + ")");
    }
  }

  ConfigFile file;
  auto& config = file.config;
  if (const auto it = root.find("task"); it != root.end()) {
    check_keys(*it, "task", {"data_size_bits", "intensity_cycles_per_bit"});
    read_number(*it, "task", "data_size_bits", config.task.data_size_bits);
    read_number(*it, "task", "intensity_cycles_per_bit", config.task.intensity_cycles_per_bit);
  }
  if (const auto it = root.find("glasses"); it != root.end()) read_device(*it, "glasses", config.glasses);
  if (const auto it = root.find("mobile"); it != root.end()) read_device(*it, "mobile", config.mobile);
  if (const auto it = root.find("edge"); it != root.end()) {
    check_keys(*it, "edge", {"name", "frequency_hz", "power"});
    read_resource_fields(*it, "edge", config.edge);
  }
  if (const auto it = root.find("short_link"); it != root.end()) read_link(*it, "short_link", config.short_link);
  if (const auto it = root.find("long_link"); it != root.end()) read_link(*it, "long_link", config.long_link);
  read_number(root, "", "mobile_to_edge_distance_m", config.mobile_to_edge_distance_m);

  if (const auto it = root.find("sweeps"); it != root.end()) {
    if (!it->is_object()) type_error("sweeps", "an object");
    for (const auto& item : it->items()) {
      file.sweeps.emplace(item.key(), read_sweep(item.value(), "sweeps." + item.key(), config));
    }
  }
  return file;
}

ConfigFile load_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw OffloadError(ErrorCode::IoError, "cannot read config file " + path);
  std::ostringstream text;
  text << in.rdbuf();
  return parse_config(text.str());
}

std::string serialize_config(const ConfigFile& file) {
  const auto& c = file.config;
  json root = {
      {"schema_version", kSchemaVersion},
      {"task",
       {{"data_size_bits", c.task.data_size_bits},
        {"intensity_cycles_per_bit", c.task.intensity_cycles_per_bit}}},
      {"glasses", device_json(c.glasses)},
      {"mobile", device_json(c.mobile)},
      {"edge", resource_json(c.edge)},
      {"short_link", link_json(c.short_link)},
      {"long_link", link_json(c.long_link)},
      {"mobile_to_edge_distance_m", c.mobile_to_edge_distance_m},
  };
  if (!file.sweeps.empty()) {
    json sweeps = json::object();
    for (const auto& [name, spec] : file.sweeps) sweeps[name] = sweep_json(spec);
    root["sweeps"] = sweeps;
  }
  return root.dump(2) + "\n";
}

}  // namespace offloadsim
