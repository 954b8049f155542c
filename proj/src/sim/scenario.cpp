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

#include "orchsim/sim/scenario.hpp"

#include <cstddef>
#include <set>

#include "orchsim/errors.hpp"

namespace orchsim::sim {

namespace {

void validate_vehicle(const VehicleAgent& vehicle, std::size_t index) {
  const std::string path = "vehicles[" + std::to_string(index) + "]";
  if (vehicle.station_id.value == 0) {
    throw InvalidScenario(path + ".station_id: must be > 0");
  }
  if (vehicle.cam_period_ms == 0) {
    throw InvalidScenario(path + ".cam_period_ms: must be > 0");
  }
  if (const auto* route = std::get_if<WaypointRoute>(&vehicle.route)) {
    if (route->waypoints.empty()) {
      throw InvalidScenario(path + ".route.waypoints: must not be empty");
    }
    for (std::size_t w = 0; w < route->waypoints.size(); ++w) {
      if (!v2x::is_valid(route->waypoints[w].position)) {
        throw InvalidScenario(path + ".route.waypoints[" + std::to_string(w) +
                              "]: position out of range");
      }
      if (w > 0 && route->waypoints[w].time_offset_s <=
                       route->waypoints[w - 1].time_offset_s) {
        throw InvalidScenario(path + ".route.waypoints[" + std::to_string(w) +
                              "]: time_offset_s must be strictly increasing");
      }
    }
  } else {
    const auto& approach = std::get<ParametricApproach>(vehicle.route);
    if (!(approach.speed_kmh > 0.0)) {
      throw InvalidScenario(path + ".route.speed_kmh: must be > 0");
    }
    if (approach.start_distance_m < 0.0) {
      throw InvalidScenario(path + ".route.start_distance_m: must be >= 0");
    }
    if (!v2x::is_valid(approach.target)) {
      throw InvalidScenario(path + ".route.target: position out of range");
    }
  }
}

}  // namespace

std::string vehicle_node_id(v2x::StationId station) {
  return "vehicle-" + std::to_string(station.value);
}

void validate(const ScenarioConfig& config) {
  std::set<std::string> node_ids{kServerNode};
  std::set<std::uint32_t> station_ids;

  if (config.rsus.empty()) {
    throw InvalidScenario("rsus: at least one roadside unit is required");
  }
  std::size_t v2x_hosts = 0;
  for (std::size_t i = 0; i < config.rsus.size(); ++i) {
    const auto& rsu = config.rsus[i];
    const std::string path = "rsus[" + std::to_string(i) + "]";
    if (rsu.id.empty() || rsu.id == kServerNode) {
      throw InvalidScenario(path + ".id: must be nonempty and not '" +
                            std::string(kServerNode) + "'");
    }
    if (!node_ids.insert(rsu.id).second) {
      throw InvalidScenario(path + ".id: duplicate node id '" + rsu.id + "'");
    }
    if (rsu.station_id.value == 0) {
      throw InvalidScenario(path + ".station_id: must be > 0");
    }
    if (!station_ids.insert(rsu.station_id.value).second) {
      throw InvalidScenario(path + ".station_id: duplicate station id");
    }
    if (!v2x::is_valid(rsu.position)) {
      throw InvalidScenario(path + ".position: out of range");
    }
    if (rsu.hosts_v2x) {
      ++v2x_hosts;
    }
  }
  if (v2x_hosts != 1) {
    throw InvalidScenario("rsus.hosts_v2x: exactly one roadside unit must host the "
                          "ITS-G5 role, found " + std::to_string(v2x_hosts));
  }

  for (std::size_t i = 0; i < config.vehicles.size(); ++i) {
    validate_vehicle(config.vehicles[i], i);
    const auto station = config.vehicles[i].station_id;
    if (!station_ids.insert(station.value).second) {
      throw InvalidScenario("vehicles[" + std::to_string(i) +
                            "].station_id: duplicate station id");
    }
    node_ids.insert(vehicle_node_id(station));
  }

  channel::validate(config.channel);
  orch::validate(config.rule);
  orch::validate(config.plan);
  for (const auto& service : config.plan.services) {
    if (node_ids.find(service.node) == node_ids.end()) {
      throw InvalidScenario("plan: service '" + service.name +
                            "' placed on unknown node '" + service.node + "'");
    }
  }
  for (const auto& [node, offset] : config.clocks.offsets_ms) {
    (void)offset;
    if (node_ids.find(node) == node_ids.end()) {
      throw InvalidScenario("clocks.offsets_ms: unknown node '" + node + "'");
    }
  }
  if (config.uplink_latency_ms < 0.0) {
    throw InvalidScenario("uplink_latency_ms: must be >= 0");
  }
  if (!(config.fusion_period_ms > 0.0)) {
    throw InvalidScenario("fusion_period_ms: must be > 0");
  }
  if (config.other_latencies.event_detection_ms < 0.0 ||
      config.other_latencies.fusion_processing_ms < 0.0 ||
      config.other_latencies.cpm_generation_ms < 0.0) {
    throw InvalidScenario("other_latencies: values must be >= 0");
  }
  if (!(config.idle_timeout_s > 0.0)) {
    throw InvalidScenario("idle_timeout_s: must be > 0");
  }
  if (config.end_time_s < 0.0) {
    throw InvalidScenario("end_time_s: must be >= 0");
  }
}

}  // namespace orchsim::sim
