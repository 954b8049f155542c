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

#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "orchsim/channel/channel.hpp"
#include "orchsim/orch/deployment.hpp"
#include "orchsim/orch/detector.hpp"
#include "orchsim/v2x/messages.hpp"

namespace orchsim::sim {

struct Waypoint {
  double time_offset_s = 0.0;
  v2x::GeoPosition position;
};

struct WaypointRoute {
  std::vector<Waypoint> waypoints;  // strictly time-ordered
};

// Starts start_distance_m from target, displaced along bearing_deg as seen
// from the target, and drives straight at the target; holds once reached.
struct ParametricApproach {
  double bearing_deg = 0.0;
  double start_distance_m = 0.0;
  double speed_kmh = 0.0;
  v2x::GeoPosition target;
};

struct VehicleAgent {
  v2x::StationId station_id;
  std::variant<WaypointRoute, ParametricApproach> route;
  std::uint32_t cam_period_ms = 100;
};

struct RsuNode {
  std::string id;
  v2x::StationId station_id;
  v2x::GeoPosition position;
  bool hosts_v2x = false;
};

// Fixed processing delays outside manager processing and deployment.
struct OtherLatencies {
  double event_detection_ms = 0.0;
  double fusion_processing_ms = 0.0;
  double cpm_generation_ms = 0.0;
};

inline constexpr const char* kServerNode = "server";

// Node id a vehicle's events are logged under.
std::string vehicle_node_id(v2x::StationId station);

struct ScenarioConfig {
  std::vector<RsuNode> rsus;
  std::vector<VehicleAgent> vehicles;
  channel::ChannelModel channel;
  channel::ClockModel clocks;  // missing nodes get seeded default offsets
  orch::AnalysisRule rule;
  orch::DeploymentPlan plan;
  double uplink_latency_ms = 0.0;
  double fusion_period_ms = 100.0;
  OtherLatencies other_latencies;
  double idle_timeout_s = 60.0;
  double end_time_s = 0.0;
  std::uint64_t seed = 0;
};

// Throws InvalidScenario naming the offending field.
void validate(const ScenarioConfig& config);

}  // namespace orchsim::sim
