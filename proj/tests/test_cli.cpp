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

// End-to-end runs of the offloadsim executable.

#include <sys/wait.h>

#include <algorithm>
#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>

#include "doctest.h"
#include "json.hpp"

namespace fs = std::filesystem;

namespace {

struct Run {
  int exit_code = -1;
  std::string out;
  std::string err;

  nlohmann::json json() const { return nlohmann::json::parse(out); }
  nlohmann::json error() const { return nlohmann::json::parse(err)["error"]; }
};

fs::path scratch() {
  static const fs::path dir = [] {
    auto d = fs::temp_directory_path() / "offloadsim_cli_test";
    fs::remove_all(d);
    fs::create_directories(d);
    return d;
  }();
  return dir;
}

Run run(const std::string& args, const std::string& env = "OFFLOADSIM_CONFIG=") {
  const auto err_path = scratch() / "stderr.txt";
  const std::string cmd = "env " + env + " " + OFFLOADSIM_CLI_PATH + " " + args + " 2>" + err_path.string();
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  size_t n = 0;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), n);
  const int status = pclose(pipe);
  r.exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  std::ifstream err(err_path);
  std::stringstream text;
  text << err.rdbuf();
  r.err = text.str();
  return r;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream text;
  text << in.rdbuf();
  return text.str();
}

fs::path write_file(const std::string& name, const std::string& content) {
  const auto p = scratch() / name;
  std::ofstream(p, std::ios::binary) << content;
  return p;
}

const std::string kShippedConfig = std::string(OFFLOADSIM_SOURCE_DIR) + "/configs/default.json";

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("eval local at 1 GHz takes 16 s for 2 MB") {
  const auto r = run("eval --scenario local --data-size-mb 2 --glasses-freq-ghz 1.0");
  REQUIRE(r.exit_code == 0);
  CHECK(r.json()["t_total_s"].get<double>() == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(r.json()["scenario"] == "local");
}

TEST_CASE("eval edge out of coverage exits 3") {
  const auto r = run("eval --scenario edge --distance-m 700");
  CHECK(r.exit_code == 3);
  CHECK(r.error()["code"] == "DISTANCE_OUT_OF_COVERAGE");
}

TEST_CASE("eval with zero data size exits 2") {
  const auto r = run("eval --scenario mobile --data-size-mb 0.0");
  CHECK(r.exit_code == 2);
  CHECK(r.error()["code"] == "TASK_SIZE_NONPOSITIVE");
}

TEST_CASE("eval rejects unknown scenarios and missing flags") {
  CHECK(run("eval --scenario cloud").exit_code == 2);
  CHECK(run("eval").exit_code == 2);
}

TEST_CASE("decide follows distance") {
  auto r = run("decide --data-size-mb 2 --distance-m 150 --objective time");
  REQUIRE(r.exit_code == 0);
  CHECK(r.json()["chosen"] == "edge_offload");

  r = run("decide --data-size-mb 2 --distance-m 500");
  REQUIRE(r.exit_code == 0);
  CHECK(r.json()["chosen"] == "mobile_offload");
  CHECK(r.json()["scores"]["edge_offload"]["total_s"].get<double>() == doctest::Approx(9.096).epsilon(1e-3));
}

TEST_CASE("weighted:1.0 chooses like time") {
  for (const char* flags : {"--distance-m 50", "--distance-m 450", "--data-size-mb 0.1 --distance-m 600",
                            "--glasses-freq-ghz 1.5 --data-size-mb 0.2", "--distance-m 650"}) {
    const auto by_time = run(std::string("decide --objective time ") + flags);
    const auto weighted = run(std::string("decide --objective weighted:1.0 ") + flags);
    REQUIRE(by_time.exit_code == 0);
    REQUIRE(weighted.exit_code == 0);
    CHECK(by_time.json()["chosen"] == weighted.json()["chosen"]);
  }
}

TEST_CASE("decide rejects bad objectives") {
  const auto r = run("decide --objective weighted:7");
  CHECK(r.exit_code == 2);
  CHECK(r.error()["code"] == "WEIGHT_OUT_OF_RANGE");
  CHECK(run("decide --objective fastest").exit_code == 2);
}

TEST_CASE("reproduce all writes six deterministic files") {
  const auto a = scratch() / "run_a", b = scratch() / "run_b";
  auto r = run("reproduce all --out " + a.string());
  REQUIRE(r.exit_code == 0);
  r = run("reproduce all --out " + b.string());
  REQUIRE(r.exit_code == 0);
  int files = 0;
  for (int fig = 2; fig <= 7; ++fig) {
    const auto name = "fig" + std::to_string(fig) + ".csv";
    REQUIRE(fs::exists(a / name));
    CHECK(slurp(a / name) == slurp(b / name));
    CHECK(r.out.find(name) != std::string::npos);
    ++files;
  }
  CHECK(files == 6);
}

TEST_CASE("reproduce fig4 has 100 data rows") {
  const auto dir = scratch() / "fig4_only";
  const auto r = run("reproduce fig4 --out " + dir.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("fig4: 100 rows") != std::string::npos);
  const auto text = slurp(dir / "fig4.csv");
  CHECK(std::count(text.begin(), text.end(), '\n') == 101);
  CHECK_FALSE(fs::exists(dir / "fig5.csv"));
}

TEST_CASE("reproduce failures") {
  CHECK(run("reproduce fig9").exit_code == 2);
  const auto blocker = write_file("not_a_dir", "x");
  CHECK(run("reproduce fig2 --out " + (blocker / "sub").string()).exit_code == 1);
}

TEST_CASE("validate") {
  auto r = run("validate --config " + kShippedConfig);
  CHECK(r.exit_code == 0);
  CHECK(r.json()["valid"] == true);

  const auto neg = write_file("neg_tx.json", R"({"glasses": {"radio": {"tx_w": -1.0}}})");
  r = run("validate --config " + neg.string());
  CHECK(r.exit_code == 2);
  CHECK(r.json()["issues"][0]["code"] == "RADIO_POWER_NEGATIVE");

  const auto flat = write_file("flat_rates.json", R"({"long_link": {"rate_table": [
      {"max_distance_m": 100, "rate_bps": 54e6}, {"max_distance_m": 200, "rate_bps": 54e6}]}})");
  r = run("validate --config " + flat.string());
  CHECK(r.exit_code == 2);
  CHECK(r.json()["issues"][0]["code"] == "RATE_TABLE_NOT_DECREASING");

  const auto far = write_file("far.json", R"({"mobile_to_edge_distance_m": 700})");
  r = run("validate --config " + far.string());
  CHECK(r.exit_code == 2);
  CHECK(r.json()["issues"][0]["code"] == "DISTANCE_OUT_OF_COVERAGE");
}

TEST_CASE("config loading errors") {
  auto r = run("validate --config " + (scratch() / "missing.json").string());
  CHECK(r.exit_code == 1);
  CHECK(r.error()["code"] == "IO_ERROR");

  const auto typo = write_file("typo.json", R"({"task": {"data_size_bit": 1}})");
  r = run("eval --scenario local --config " + typo.string());
  CHECK(r.exit_code == 2);
  CHECK(r.error()["code"] == "CONFIG_UNKNOWN_KEY");
}

TEST_CASE("OFFLOADSIM_CONFIG supplies the default config path") {
  const auto small = write_file("small.json", R"({"task": {"data_size_bits": 2.4e6}})");
  const auto r = run("eval --scenario edge", "OFFLOADSIM_CONFIG=" + small.string());
  REQUIRE(r.exit_code == 0);
  CHECK(r.json()["t_total_s"].get<double>() == doctest::Approx(0.2311).epsilon(1e-3 / 0.2311));
}

TEST_CASE("effective config round-trips") {
  const auto first = run("--print-effective-config --data-size-mb 0.7 --distance-m 321");
  REQUIRE(first.exit_code == 0);
  const auto saved = write_file("effective.json", first.out);
  const auto second = run("--print-effective-config --config " + saved.string());
  REQUIRE(second.exit_code == 0);
  CHECK(first.out == second.out);
  CHECK(second.out == slurp(saved));
  CHECK(nlohmann::json::parse(second.out)["mobile_to_edge_distance_m"] == 321.0);
}

TEST_CASE("shipped config equals the built-in defaults") {
  CHECK(run("--print-effective-config").out == slurp(kShippedConfig));
}

TEST_CASE("presets after a config round trip are unchanged") {
  const auto saved = write_file("roundtrip.json", run("--print-effective-config").out);
  const auto a = scratch() / "rt_a", b = scratch() / "rt_b";
  REQUIRE(run("reproduce all --out " + a.string()).exit_code == 0);
  REQUIRE(run("reproduce all --out " + b.string() + " --config " + saved.string()).exit_code == 0);
  for (int fig = 2; fig <= 7; ++fig) {
    const auto name = "fig" + std::to_string(fig) + ".csv";
    CHECK(slurp(a / name) == slurp(b / name));
  }
}

TEST_CASE("named sweep") {
  const auto cfg = write_file("sweep.json", R"({"sweeps": {"dist": {
      "axes": [{"param": "distance", "values": [100, 450, 700]}],
      "series": [{"scenario": "edge"}], "output": ")" + (scratch() / "dist.csv").string() + R"("}}})");
  auto r = run("sweep dist --config " + cfg.string());
  REQUIRE(r.exit_code == 0);
  const auto text = slurp(scratch() / "dist.csv");
  CHECK(std::count(text.begin(), text.end(), '\n') == 4);
  CHECK(text.find("DISTANCE_OUT_OF_COVERAGE") != std::string::npos);

  r = run("sweep nope --config " + cfg.string());
  CHECK(r.exit_code == 2);
  CHECK(r.error()["code"] == "UNKNOWN_SWEEP");
}

TEST_CASE("help and version exit cleanly") {
  CHECK(run("--help").exit_code == 0);
  const auto v = run("--version");
  CHECK(v.exit_code == 0);
  CHECK(v.out.find("1.0.0") != std::string::npos);
}

}
