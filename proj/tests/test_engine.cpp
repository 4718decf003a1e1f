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

#include <limits>

#include "doctest.h"
#include "offloadsim/engine.hpp"
#include "offloadsim/units.hpp"
#include "support/oracle.hpp"

using namespace offloadsim;

namespace {

ScenarioConfig with(double data_mb, double distance_m = 150.0) {
  auto c = default_config();
  c.task.data_size_bits = units::megabytes_to_bits(data_mb);
  c.mobile_to_edge_distance_m = distance_m;
  return c;
}

double latency_sum(const LatencyBreakdown& t) {
  return t.transfer_glasses_to_mobile_s + t.transfer_mobile_to_edge_s + t.execution_s;
}

double energy_sum(const EnergyBreakdown& e) {
  return e.glasses_tx_j + e.mobile_rx_j + e.mobile_tx_j + e.execution_j + e.glasses_idle_j +
         e.mobile_idle_j;
}

}  // namespace

TEST_SUITE("engine") {

TEST_CASE("local latency") {
  const ComputeResource glasses{"g", 1e9, {}};
  CHECK(latency_local({1e6, 1000.0}, glasses).total_s == doctest::Approx(1.0).epsilon(1e-15));

  const auto t = latency_local({1.6e7, 1000.0}, glasses);
  CHECK(t.total_s == doctest::Approx(16.0).epsilon(1e-15));
  CHECK(t.transfer_glasses_to_mobile_s == 0.0);
  CHECK(t.transfer_mobile_to_edge_s == 0.0);

  const ComputeResource faster{"g", 2e9, {}};
  CHECK(latency_local({1.6e7, 1000.0}, faster).total_s == t.total_s / 2);
}

TEST_CASE("mobile latency") {
  const auto c = with(2.0);
  const auto t = latency_mobile(c.task, c.mobile.cpu, c.short_link);
  CHECK(t.transfer_glasses_to_mobile_s == doctest::Approx(0.2963).epsilon(1e-3));
  CHECK(t.execution_s == doctest::Approx(7.2727).epsilon(1e-3));
  CHECK(t.total_s == doctest::Approx(7.569023569023569).epsilon(1e-12));
  CHECK(t.transfer_mobile_to_edge_s == 0.0);

  const auto zero = latency_mobile({0.0, 1000.0}, c.mobile.cpu, c.short_link);
  CHECK(zero.total_s == 0.0);

  LinkModel faster{{{10.0, 108e6}}};
  const auto t2 = latency_mobile(c.task, c.mobile.cpu, faster);
  CHECK(t2.transfer_glasses_to_mobile_s == t.transfer_glasses_to_mobile_s / 2);
  CHECK(t2.execution_s == t.execution_s);
}

TEST_CASE("edge latency") {
  const auto small = with(0.3);
  const auto t = latency_edge(small.task, small.edge, small.short_link, small.long_link, 150.0);
  CHECK(t.transfer_glasses_to_mobile_s == doctest::Approx(0.044444444444444446).epsilon(1e-12));
  CHECK(t.transfer_mobile_to_edge_s == doctest::Approx(0.06666666666666667).epsilon(1e-12));
  CHECK(t.execution_s == doctest::Approx(0.12).epsilon(1e-12));
  CHECK(t.total_s == doctest::Approx(0.2311).epsilon(1e-3 / 0.2311));

  const auto big = with(2.0);
  const auto far = latency_edge(big.task, big.edge, big.short_link, big.long_link, 500.0);
  CHECK(far.transfer_mobile_to_edge_s == doctest::Approx(8.0).epsilon(1e-15));
  CHECK(far.total_s == doctest::Approx(9.096296296296297).epsilon(1e-12));

  // 0.2963 + 0.4444 + 0.8 with the 36 Mbps row at 150 m
  const auto near = latency_edge(big.task, big.edge, big.short_link, big.long_link, 150.0);
  CHECK(near.total_s == doctest::Approx(1.5407407407407407).epsilon(1e-12));

  CHECK(latency_edge({0.0, 1000.0}, big.edge, big.short_link, big.long_link, 150.0).total_s == 0.0);
  CHECK_THROWS_AS(latency_edge(big.task, big.edge, big.short_link, big.long_link, 700.0), OffloadError);
}

TEST_CASE("local energy") {
  // P = 2 W for 4 s
  const ComputeResource glasses{"g", 1.5e9, CpuPowerModel::fitted(2.0, 1.5e9)};
  const Task task{6e6, 1000.0};  // 6e9 cycles at 1.5 GHz = 4 s
  const auto e = energy_local(task, glasses);
  CHECK(e.execution_j == doctest::Approx(8.0).epsilon(1e-14));
  CHECK(e.total_j == e.execution_j);
  CHECK(e.glasses_idle_j == 0.0);
  CHECK(energy_local({0.0, 1000.0}, glasses).total_j == 0.0);
}

TEST_CASE("doubling frequency quadruples cubic-model energy") {
  const auto c = default_config();
  oracle::ConfigGenerator gen(3);
  for (int i = 0; i < 100; ++i) {
    ComputeResource g = c.glasses.cpu;
    g.frequency_hz = gen.log_uniform(1e8, 2e9);
    ComputeResource g2 = g;
    g2.frequency_hz = 2 * g.frequency_hz;
    const Task task{gen.log_uniform(1e3, 1e9), gen.log_uniform(1, 1e4)};
    CHECK(energy_local(task, g2).total_j == doctest::Approx(4 * energy_local(task, g).total_j).epsilon(1e-13));
  }
}

TEST_CASE("mobile energy breakdown") {
  const auto c = with(2.0);
  const auto e = energy_mobile(c.task, c.glasses, c.mobile, c.short_link);
  CHECK(e.glasses_tx_j == doctest::Approx(0.2962962962962963).epsilon(1e-12));
  CHECK(e.mobile_rx_j == doctest::Approx(0.2962962962962963).epsilon(1e-12));
  CHECK(e.execution_j == doctest::Approx(18.18181818181818).epsilon(1e-12));
  CHECK(e.glasses_idle_j == doctest::Approx(2.1818181818181817).epsilon(1e-12));
  CHECK(e.total_j == doctest::Approx(20.95).epsilon(0.05 / 20.95));
  CHECK(e.mobile_tx_j == 0.0);
  CHECK(e.mobile_idle_j == 0.0);
  CHECK(e.execution_j > e.glasses_tx_j + e.mobile_rx_j);

  CHECK(energy_mobile({0.0, 1000.0}, c.glasses, c.mobile, c.short_link).total_j == 0.0);

  LinkModel faster{{{10.0, 108e6}}};
  const auto e2 = energy_mobile(c.task, c.glasses, c.mobile, faster);
  CHECK(e2.glasses_tx_j == e.glasses_tx_j / 2);
  CHECK(e2.mobile_rx_j == e.mobile_rx_j / 2);
  CHECK(e2.execution_j == e.execution_j);
}

TEST_CASE("edge energy equals its six hand-summed terms") {
  const auto c = with(2.0);
  const auto e = energy_edge(c.task, c.glasses, c.mobile, c.edge, c.short_link, c.long_link, 150.0);
  // Each term is state power x state duration, computed here by hand.
  const double t_dm = 1.6e7 / 54e6, t_de = 1.6e7 / 36e6, t_ex = 1.6e10 / 20e9;
  const double hand = 1.0 * t_dm + 1.0 * t_dm + 1.2 * t_de + 20.0 * t_ex + 0.3 * (t_de + t_ex) + 0.5 * t_ex;
  CHECK(e.total_j == doctest::Approx(hand).epsilon(1e-12));
  CHECK(e.total_j == doctest::Approx(17.89925925925926).epsilon(1e-12));
  CHECK(e.mobile_tx_j == doctest::Approx(1.2 * t_de).epsilon(1e-12));
  CHECK(e.glasses_idle_j == doctest::Approx(0.3 * (t_de + t_ex)).epsilon(1e-12));
  CHECK(e.mobile_idle_j == doctest::Approx(0.5 * t_ex).epsilon(1e-12));

  CHECK(energy_edge({0.0, 1.0}, c.glasses, c.mobile, c.edge, c.short_link, c.long_link, 150.0).total_j == 0.0);
}

TEST_CASE("edge energy grows with distance through the long hop only") {
  const auto c = with(2.0);
  EnergyBreakdown previous{};
  bool first = true;
  for (double d : {150.0, 400.0, 500.0}) {
    const auto e = energy_edge(c.task, c.glasses, c.mobile, c.edge, c.short_link, c.long_link, d);
    if (!first) {
      CHECK(e.mobile_tx_j > previous.mobile_tx_j);
      CHECK(e.glasses_idle_j > previous.glasses_idle_j);
      CHECK(e.execution_j == previous.execution_j);
      CHECK(e.glasses_tx_j == previous.glasses_tx_j);
    }
    previous = e;
    first = false;
  }
}

TEST_CASE("evaluate dispatches to the scenario functions") {
  const auto c = with(2.0);
  const auto local = evaluate(c, ScenarioKind::Local);
  CHECK(local.kind == ScenarioKind::Local);
  CHECK(local.latency.total_s == latency_local(c.task, c.glasses.cpu).total_s);
  CHECK(local.energy.total_j == energy_local(c.task, c.glasses.cpu).total_j);

  CHECK(evaluate(c, ScenarioKind::Local).latency.total_s == doctest::Approx(16.0).epsilon(1e-12));
  CHECK(evaluate(c, ScenarioKind::MobileOffload).latency.total_s == doctest::Approx(7.569).epsilon(1e-3 / 7.569));
  CHECK(evaluate(c, ScenarioKind::EdgeOffload).latency.total_s ==
        doctest::Approx(1.5407407407407407).epsilon(1e-12));
}

TEST_CASE("evaluate reports coverage and config errors with their categories") {
  auto c = with(2.0, 700.0);
  try {
    evaluate(c, ScenarioKind::EdgeOffload);
    FAIL("expected throw");
  } catch (const OffloadError& err) {
    CHECK(err.code() == ErrorCode::DistanceOutOfCoverage);
    CHECK(err.category() == ErrorCategory::Evaluation);
  }
  CHECK_NOTHROW(evaluate(c, ScenarioKind::Local));
  CHECK_NOTHROW(evaluate(c, ScenarioKind::MobileOffload));

  c = with(0.0);
  try {
    evaluate(c, ScenarioKind::MobileOffload);
    FAIL("expected throw");
  } catch (const OffloadError& err) {
    CHECK(err.code() == ErrorCode::TaskSizeNonpositive);
    CHECK(err.category() == ErrorCategory::Config);
  }

  c = with(2.0);
  c.long_link.rate_table[1].rate_bps = 60e6;
  CHECK_NOTHROW(evaluate(c, ScenarioKind::MobileOffload));
  CHECK_THROWS_AS(evaluate(c, ScenarioKind::EdgeOffload), OffloadError);
}

TEST_CASE("random configs: breakdowns are consistent and match the oracle") {
  oracle::ConfigGenerator gen(2024);
  for (int i = 0; i < 1000; ++i) {
    const auto c = gen.config();
    for (auto kind : kAllScenarios) {
      const auto r = evaluate(c, kind);
      const auto want = oracle::totals(c, kind);
      REQUIRE(want.has_value());
      CHECK(oracle::rel_err(r.latency.total_s, want->time_s) <= 1e-12);
      CHECK(oracle::rel_err(r.energy.total_j, want->energy_j) <= 1e-12);
      CHECK(oracle::rel_err(r.latency.total_s, latency_sum(r.latency)) <= 1e-12);
      CHECK(oracle::rel_err(r.energy.total_j, energy_sum(r.energy)) <= 1e-12);
      for (double v : {r.latency.transfer_glasses_to_mobile_s, r.latency.transfer_mobile_to_edge_s,
                       r.latency.execution_s, r.energy.glasses_tx_j, r.energy.mobile_rx_j,
                       r.energy.mobile_tx_j, r.energy.execution_j, r.energy.glasses_idle_j,
                       r.energy.mobile_idle_j}) {
        CHECK(v >= 0.0);
      }
    }
  }
}

TEST_CASE("inapplicable components are exactly zero") {
  oracle::ConfigGenerator gen(99);
  for (int i = 0; i < 200; ++i) {
    const auto c = gen.config();
    const auto local = evaluate(c, ScenarioKind::Local);
    CHECK(local.latency.transfer_glasses_to_mobile_s == 0.0);
    CHECK(local.latency.transfer_mobile_to_edge_s == 0.0);
    CHECK(local.energy.glasses_tx_j == 0.0);
    CHECK(local.energy.mobile_rx_j == 0.0);
    CHECK(local.energy.mobile_tx_j == 0.0);
    CHECK(local.energy.glasses_idle_j == 0.0);
    CHECK(local.energy.mobile_idle_j == 0.0);
    const auto mobile = evaluate(c, ScenarioKind::MobileOffload);
    CHECK(mobile.latency.transfer_mobile_to_edge_s == 0.0);
    CHECK(mobile.energy.mobile_tx_j == 0.0);
    CHECK(mobile.energy.mobile_idle_j == 0.0);
  }
}

TEST_CASE("idle energy accrues only while the device waits") {
  // Idle-only radios: with tx/rx equal to idle, each device's radio energy
  // must equal idle power times its whole active window, which pins the idle
  // window to exactly the non-transmitting, non-receiving part.
  auto c = with(2.0);
  c.glasses.radio = {0.7, 0.7, 0.7};
  c.mobile.radio = {0.9, 0.9, 0.9};
  const auto m = evaluate(c, ScenarioKind::MobileOffload);
  CHECK(m.energy.glasses_tx_j + m.energy.glasses_idle_j ==
        doctest::Approx(0.7 * m.latency.total_s).epsilon(1e-12));

  const auto e = evaluate(c, ScenarioKind::EdgeOffload);
  CHECK(e.energy.glasses_tx_j + e.energy.glasses_idle_j ==
        doctest::Approx(0.7 * e.latency.total_s).epsilon(1e-12));
  CHECK(e.energy.mobile_rx_j + e.energy.mobile_tx_j + e.energy.mobile_idle_j ==
        doctest::Approx(0.9 * e.latency.total_s).epsilon(1e-12));
}

TEST_CASE("linearity in data size") {
  oracle::ConfigGenerator gen(5);
  for (int i = 0; i < 100; ++i) {
    const auto c = gen.config();
    for (double alpha : {2.0, 10.0, 0.37}) {
      auto scaled = c;
      scaled.task.data_size_bits *= alpha;
      for (auto kind : kAllScenarios) {
        const auto a = evaluate(c, kind), b = evaluate(scaled, kind);
        CHECK(oracle::rel_err(b.latency.total_s, alpha * a.latency.total_s) <= 1e-12);
        CHECK(oracle::rel_err(b.energy.total_j, alpha * a.energy.total_j) <= 1e-12);
        CHECK((b.latency.total_s > a.latency.total_s) == (alpha > 1.0));
      }
    }
  }
}

TEST_CASE("local latency strictly decreases in glasses frequency") {
  auto c = default_config();
  double previous = std::numeric_limits<double>::infinity();
  for (int tenths = 4; tenths <= 15; ++tenths) {
    c.glasses.cpu.frequency_hz = units::ghz_to_hz(tenths / 10.0);
    const double t = evaluate(c, ScenarioKind::Local).latency.total_s;
    CHECK(t < previous);
    previous = t;
  }
}

}
