// Copyright 2026 rsu-orchsim Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <map>
#include <set>
#include <string>
#include <vector>

#include "orchsim/errors.hpp"
#include "orchsim/geo/geodesy.hpp"
#include "orchsim/sim/engine.hpp"
#include "orchsim/sim/event_log.hpp"
#include "orchsim/sim/scenario.hpp"
#include "orchsim/sim/vehicle.hpp"
#include "support/oracles.hpp"

namespace {

using namespace orchsim;

const v2x::GeoPosition kIntersection = v2x::make_position(50.787, 6.046);
const v2x::StationId kVehicle{7};

orch::DeploymentPlan reference_plan() {
  orch::DeploymentPlan plan;
  plan.manager_processing_s = 1.854;
  plan.sink_service = "object-detection";
  plan.services = {
      {"lidar-driver-1", "rsu-1", {{"pod", 4.162}, {"first-output", 0.630}}, {}},
      {"lidar-driver-2", "rsu-1", {{"pod", 4.151}, {"first-output", 0.655}}, {}},
      {"object-detection",
       "rsu-1",
       {{"pod", 6.099}, {"first-callback", 0.370}, {"first-object-list", 3.374}},
       {"lidar-driver-1", "lidar-driver-2"}},
  };
  return plan;
}

// One RSU at the intersection, one vehicle approaching from 500 m out.
// Zero-variance channel; the fixed legs sum to the reference 12.347 s.
sim::ScenarioConfig replica_config() {
  sim::ScenarioConfig config;
  config.rsus = {{"rsu-1", v2x::StationId{1000}, kIntersection, true}};

  sim::VehicleAgent vehicle;
  vehicle.station_id = kVehicle;
  vehicle.cam_period_ms = 100;
  vehicle.route = sim::ParametricApproach{0.0, 500.0, 50.0, kIntersection};
  config.vehicles = {vehicle};

  config.channel.range_m = 800.0;
  config.channel.cam_latency = {8.17, 0.0, 3.22, 22.91};
  config.channel.cpm_latency = {5.25, 0.0, 0.19, 11.79};
  config.channel.loss_probability = 0.0;
  config.clocks.offsets_ms = {{"server", 0.0}, {"rsu-1", 0.0}, {"vehicle-7", 0.0}};

  config.rule.kind = orch::FirstCamRule{std::set<v2x::StationId>{kVehicle}};
  config.rule.cooldown_s = 60.0;
  config.plan = reference_plan();

  config.uplink_latency_ms = 100.0;
  config.fusion_period_ms = 100.0;
  config.other_latencies = {30.0, 60.0, 246.58};
  config.idle_timeout_s = 60.0;
  config.end_time_s = 20.0;
  config.seed = 1;
  return config;
}

const sim::SimEvent* first_of(const sim::EventLog& log, sim::EventKind kind) {
  for (const auto& event : log.events) {
    if (event.kind == kind) return &event;
  }
  return nullptr;
}

std::size_t count_of(const sim::EventLog& log, sim::EventKind kind) {
  return static_cast<std::size_t>(
      std::count_if(log.events.begin(), log.events.end(),
                    [kind](const sim::SimEvent& e) { return e.kind == kind; }));
}

}  // namespace

TEST_CASE("a scenario without vehicles produces an empty log") {
  auto config = replica_config();
  config.vehicles.clear();
  config.clocks.offsets_ms.erase("vehicle-7");
  const auto log = sim::run_scenario(config, 1);
  CHECK(log.events.empty());
}

TEST_CASE("parametric approach kinematics") {
  sim::VehicleAgent agent;
  agent.station_id = kVehicle;
  agent.route = sim::ParametricApproach{0.0, 300.0, 50.0, kIntersection};

  // 300 m at 50 km/h: target reached after 21.6 s, then hold.
  CHECK(std::abs(geo::haversine_distance_m(sim::vehicle_position(agent, 0.0), kIntersection) -
                 300.0) < 0.01);
  CHECK(std::abs(geo::haversine_distance_m(sim::vehicle_position(agent, 10.0), kIntersection) -
                 (300.0 - 10.0 * 50.0 / 3.6)) < 0.01);
  CHECK(geo::haversine_distance_m(sim::vehicle_position(agent, 21.6), kIntersection) < 0.01);
  CHECK(geo::haversine_distance_m(sim::vehicle_position(agent, 30.0), kIntersection) < 0.01);

  CHECK(std::abs(sim::vehicle_speed_ms(agent, 0.0) - 50.0 / 3.6) < 1e-9);
  CHECK(sim::vehicle_speed_ms(agent, 30.0) == 0.0);

  // Approaching from due north of the target means traveling south.
  const std::uint16_t heading = sim::vehicle_heading_ddeg(agent, 0.0);
  CHECK(std::abs(heading / 10.0 - 180.0) < 1.0);
}

TEST_CASE("waypoint routes interpolate in the tangent plane") {
  const auto a = kIntersection;
  const auto b = geo::destination(a, 90.0, 500.0);
  sim::VehicleAgent agent;
  agent.station_id = kVehicle;
  agent.route = sim::WaypointRoute{{{0.0, a}, {10.0, b}}};

  CHECK(sim::vehicle_position(agent, 0.0) == a);
  CHECK(sim::vehicle_position(agent, 10.0) == b);

  const auto midpoint = sim::vehicle_position(agent, 5.0);
  const auto expected = geo::destination(a, geo::initial_bearing_deg(a, b), 250.0);
  CHECK(geo::haversine_distance_m(midpoint, expected) < 0.1);

  CHECK(std::abs(sim::vehicle_speed_ms(agent, 5.0) - 50.0) < 0.1);
  CHECK_THROWS_AS(sim::vehicle_position(agent, -0.1), TimeOutOfRange);
  CHECK_THROWS_AS(sim::vehicle_position(agent, 10.1), TimeOutOfRange);
}

TEST_CASE("replica scenario reproduces the reference end-to-end latency") {
  const auto config = replica_config();
  const auto log = sim::run_scenario(config, config.seed);
  const double e2e = sim::first_cpm_latency_s(log, kVehicle);

  // Zero-variance legs: 8.17 + 100 + 30 + 1854 + 9843 + 100 + 60
  // + 246.58 + 100 + 5.25 = 12347 ms.
  CHECK(std::abs(e2e - 12.347) < 1e-6);
  CHECK(std::abs(e2e - 12.346) < 0.05);

  // The log is (time, seq) ordered and seq equals its index.
  for (std::size_t i = 0; i < log.events.size(); ++i) {
    REQUIRE(log.events[i].seq == i);
    if (i > 0) {
      REQUIRE(log.events[i].time_true_ms >= log.events[i - 1].time_true_ms);
    }
  }

  // Exactly one deployment in a 20 s window with a 60 s cooldown.
  CHECK(count_of(log, sim::EventKind::kRequestIssued) == 1);
  CHECK(count_of(log, sim::EventKind::kManagerDone) == 1);
  CHECK(count_of(log, sim::EventKind::kPipelineReady) == 1);
  CHECK(count_of(log, sim::EventKind::kPodCreated) == 3);
  CHECK(count_of(log, sim::EventKind::kStageCompleted) == 7);
  CHECK(count_of(log, sim::EventKind::kTeardown) == 0);

  // Object lists start only once the pipeline is live.
  const auto* ready = first_of(log, sim::EventKind::kPipelineReady);
  REQUIRE(ready != nullptr);
  for (const auto& event : log.events) {
    if (event.kind == sim::EventKind::kObjectListSent) {
      REQUIRE(event.time_true_ms >= ready->time_true_ms);
    }
  }
}

TEST_CASE("every CPM delivery traces back to a delivered CAM") {
  const auto config = replica_config();
  const auto log = sim::run_scenario(config, config.seed);
  const auto* cpm = first_of(log, sim::EventKind::kCpmDelivered);
  REQUIRE(cpm != nullptr);

  std::set<sim::EventKind> chain;
  const sim::SimEvent* cursor = cpm;
  while (cursor->causation_seq >= 0) {
    const auto& cause = log.events[static_cast<std::size_t>(cursor->causation_seq)];
    REQUIRE(cause.seq < cursor->seq);
    REQUIRE(cause.time_true_ms <= cursor->time_true_ms);
    chain.insert(cause.kind);
    cursor = &cause;
  }
  CHECK(cursor->kind == sim::EventKind::kCamGenerated);
  CHECK(chain.count(sim::EventKind::kCamDelivered) == 1);
  CHECK(chain.count(sim::EventKind::kRequestIssued) == 1);
  CHECK(chain.count(sim::EventKind::kPipelineReady) == 1);
  CHECK(chain.count(sim::EventKind::kObjectListSent) == 1);
  CHECK(chain.count(sim::EventKind::kFusionDone) == 1);
  CHECK(chain.count(sim::EventKind::kCpmBroadcast) == 1);
}

TEST_CASE("equal config and seed reproduce the log byte for byte") {
  auto config = replica_config();
  config.channel.cam_latency.std_ms = 2.23;
  config.channel.cpm_latency.std_ms = 2.29;
  config.clocks.offsets_ms.clear();  // per-seed default offsets

  const auto first = sim::run_scenario(config, 42);
  const auto second = sim::run_scenario(config, 42);
  CHECK(sim::serialize(first) == sim::serialize(second));

  const auto other_seed = sim::run_scenario(config, 43);
  CHECK(sim::serialize(first) != sim::serialize(other_seed));
}

TEST_CASE("zero-latency configuration yields zero end-to-end latency") {
  auto config = replica_config();
  config.channel.cam_latency = {0.0, 0.0, 0.0, 0.0};
  config.channel.cpm_latency = {0.0, 0.0, 0.0, 0.0};
  config.uplink_latency_ms = 0.0;
  config.other_latencies = {0.0, 0.0, 0.0};
  config.plan.manager_processing_s = 0.0;
  for (auto& service : config.plan.services) {
    service.stages.clear();
  }
  config.vehicles[0].route = sim::ParametricApproach{0.0, 0.0, 50.0, kIntersection};
  config.end_time_s = 1.0;

  const auto log = sim::run_scenario(config, 1);
  CHECK(sim::first_cpm_latency_s(log, kVehicle) == 0.0);
}

TEST_CASE("first CAM delivery waits for the vehicle to reach radio range") {
  auto config = replica_config();
  config.vehicles[0].route = sim::ParametricApproach{0.0, 10000.0, 50.0, kIntersection};
  config.end_time_s = 670.0;

  const auto log = sim::run_scenario(config, 1);
  const auto* delivered = first_of(log, sim::EventKind::kCamDelivered);
  REQUIRE(delivered != nullptr);

  // (10000 - 800) m at 13.889 m/s: range is entered near t = 662.4 s.
  const double t_s = delivered->time_true_ms / 1000.0;
  CHECK(t_s > 662.3);
  CHECK(t_s < 663.2);

  // No delivery while the vehicle was still beyond 800 m.
  const auto* generated = first_of(log, sim::EventKind::kCamGenerated);
  REQUIRE(generated != nullptr);
  CHECK(generated->time_true_ms == 0.0);
}

TEST_CASE("latency queries fail cleanly on incomplete runs") {
  auto config = replica_config();

  SUBCASE("vehicle never in range") {
    config.vehicles[0].route = sim::ParametricApproach{0.0, 10000.0, 50.0, kIntersection};
    config.end_time_s = 5.0;
    const auto log = sim::run_scenario(config, 1);
    CHECK(count_of(log, sim::EventKind::kCamGenerated) > 0);
    CHECK_THROWS_AS(sim::first_cpm_latency_s(log, kVehicle), NoCamDelivered);
  }

  SUBCASE("run ends before the pipeline is live") {
    config.end_time_s = 1.0;
    const auto log = sim::run_scenario(config, 1);
    CHECK(count_of(log, sim::EventKind::kRequestIssued) == 1);
    CHECK_THROWS_AS(sim::first_cpm_latency_s(log, kVehicle), NoCpmReceived);
  }

  SUBCASE("unknown station") {
    const auto log = sim::run_scenario(config, 1);
    CHECK_THROWS_AS(sim::first_cpm_latency_s(log, v2x::StationId{999}), NoCamDelivered);
  }
}

TEST_CASE("demand lapse tears the pipeline down and stops object lists") {
  auto config = replica_config();
  const auto near_rsu = geo::destination(kIntersection, 0.0, 50.0);
  config.vehicles[0].route =
      sim::WaypointRoute{{{0.0, near_rsu}, {5.0, kIntersection}}};
  config.idle_timeout_s = 2.0;
  config.end_time_s = 30.0;

  const auto log = sim::run_scenario(config, 1);
  REQUIRE(count_of(log, sim::EventKind::kTeardown) == 1);
  const auto* teardown = first_of(log, sim::EventKind::kTeardown);

  // Last CAM reaches the server near t = 5.1 s, but deployment only
  // finishes at 11.835 s. The idle window has already lapsed by then, so
  // the first 1 s tick after activation tears down.
  CHECK(teardown->time_true_ms == 12000.0);

  for (const auto& event : log.events) {
    if (event.kind == sim::EventKind::kObjectListSent) {
      REQUIRE(event.time_true_ms <= teardown->time_true_ms);
    }
  }
  CHECK(count_of(log, sim::EventKind::kRequestIssued) == 1);
}

TEST_CASE("scenario validation names the offending field") {
  auto config = replica_config();

  SUBCASE("no v2x host") {
    config.rsus[0].hosts_v2x = false;
    CHECK_THROWS_WITH_AS(sim::run_scenario(config, 1),
                         doctest::Contains("hosts_v2x"), InvalidScenario);
  }
  SUBCASE("two v2x hosts") {
    config.rsus.push_back(
        {"rsu-2", v2x::StationId{1001}, kIntersection, true});
    CHECK_THROWS_WITH_AS(sim::run_scenario(config, 1),
                         doctest::Contains("hosts_v2x"), InvalidScenario);
  }
  SUBCASE("duplicate station ids") {
    config.vehicles[0].station_id = v2x::StationId{1000};
    config.rule.kind = orch::FirstCamRule{};
    CHECK_THROWS_WITH_AS(sim::run_scenario(config, 1),
                         doctest::Contains("duplicate station id"), InvalidScenario);
  }
  SUBCASE("unordered waypoints") {
    config.vehicles[0].route =
        sim::WaypointRoute{{{5.0, kIntersection}, {5.0, kIntersection}}};
    CHECK_THROWS_WITH_AS(sim::run_scenario(config, 1),
                         doctest::Contains("strictly increasing"), InvalidScenario);
  }
  SUBCASE("nonpositive parametric speed") {
    config.vehicles[0].route = sim::ParametricApproach{0.0, 100.0, 0.0, kIntersection};
    CHECK_THROWS_WITH_AS(sim::run_scenario(config, 1),
                         doctest::Contains("speed_kmh"), InvalidScenario);
  }
  SUBCASE("plan service on unknown node") {
    config.plan.services[0].node = "rsu-9";
    CHECK_THROWS_WITH_AS(sim::run_scenario(config, 1), doctest::Contains("rsu-9"),
                         InvalidScenario);
  }
}

TEST_CASE("event log serialization is stable and parseable") {
  auto config = replica_config();
  config.end_time_s = 2.0;
  const auto log = sim::run_scenario(config, 1);
  const std::string text = sim::serialize(log);

  REQUIRE_FALSE(log.events.empty());
  CHECK(text.back() == '\n');
  CHECK(std::count(text.begin(), text.end(), '\n') ==
        static_cast<std::ptrdiff_t>(log.events.size()));

  // Seven tab-separated fields per line.
  const std::string first_line = text.substr(0, text.find('\n'));
  CHECK(std::count(first_line.begin(), first_line.end(), '\t') == 6);
  CHECK(first_line.find("CamGenerated") != std::string::npos);
}
