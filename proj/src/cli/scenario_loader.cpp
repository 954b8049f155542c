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

#include "orchsim/cli/scenario_loader.hpp"

#include <fstream>
#include <initializer_list>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"
#include "orchsim/errors.hpp"

namespace orchsim::cli {

namespace {

using nlohmann::json;

[[noreturn]] void fail(const std::string& path, const std::string& message) {
  throw InvalidScenario(path + ": " + message);
}

void expect_object(const json& j, const std::string& path) {
  if (!j.is_object()) {
    fail(path, "expected an object");
  }
}

void expect_array(const json& j, const std::string& path) {
  if (!j.is_array()) {
    fail(path, "expected an array");
  }
}

void check_keys(const json& obj, const std::string& path,
                std::initializer_list<const char*> allowed) {
  for (const auto& [key, value] : obj.items()) {
    bool known = false;
    for (const char* name : allowed) {
      if (key == name) {
        known = true;
        break;
      }
    }
    if (!known) {
      fail(path, "unknown key '" + key + "'");
    }
  }
}

const json* find(const json& obj, const char* key) {
  const auto it = obj.find(key);
  return it == obj.end() ? nullptr : &*it;
}

double as_double(const json& j, const std::string& path) {
  if (!j.is_number()) {
    fail(path, "expected a number");
  }
  return j.get<double>();
}

double require_double(const json& obj, const std::string& path, const char* key) {
  const json* j = find(obj, key);
  if (j == nullptr) {
    fail(path, std::string("missing required key '") + key + "'");
  }
  return as_double(*j, path + "." + key);
}

double optional_double(const json& obj, const std::string& path, const char* key,
                       double fallback) {
  const json* j = find(obj, key);
  return j == nullptr ? fallback : as_double(*j, path + "." + key);
}

std::uint64_t as_uint(const json& j, const std::string& path) {
  if (!j.is_number_unsigned()) {
    fail(path, "expected a nonnegative integer");
  }
  return j.get<std::uint64_t>();
}

std::uint32_t as_u32(const json& j, const std::string& path) {
  const std::uint64_t value = as_uint(j, path);
  if (value > 0xffffffffull) {
    fail(path, "value exceeds 32 bits");
  }
  return static_cast<std::uint32_t>(value);
}

std::string require_string(const json& obj, const std::string& path, const char* key) {
  const json* j = find(obj, key);
  if (j == nullptr) {
    fail(path, std::string("missing required key '") + key + "'");
  }
  if (!j->is_string()) {
    fail(path + "." + key, "expected a string");
  }
  return j->get<std::string>();
}

const json& require_child(const json& obj, const std::string& path, const char* key) {
  const json* j = find(obj, key);
  if (j == nullptr) {
    fail(path, std::string("missing required key '") + key + "'");
  }
  return *j;
}

v2x::GeoPosition parse_position(const json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, path, {"lat", "lon"});
  const double lat = require_double(j, path, "lat");
  const double lon = require_double(j, path, "lon");
  return v2x::make_position(lat, lon);
}

channel::LatencyDistribution parse_latency(const json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, path, {"mean_ms", "std_ms", "min_ms", "max_ms"});
  channel::LatencyDistribution dist;
  dist.mean_ms = require_double(j, path, "mean_ms");
  dist.std_ms = require_double(j, path, "std_ms");
  dist.min_ms = require_double(j, path, "min_ms");
  dist.max_ms = require_double(j, path, "max_ms");
  return dist;
}

channel::ChannelModel parse_channel(const json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, path, {"range_m", "cam_latency", "cpm_latency", "loss_probability"});
  channel::ChannelModel model;
  model.range_m = optional_double(j, path, "range_m", model.range_m);
  model.cam_latency = parse_latency(require_child(j, path, "cam_latency"), path + ".cam_latency");
  model.cpm_latency = parse_latency(require_child(j, path, "cpm_latency"), path + ".cpm_latency");
  model.loss_probability = optional_double(j, path, "loss_probability", 0.0);
  return model;
}

std::set<v2x::StationId> parse_station_filter(const json& j, const std::string& path) {
  expect_array(j, path);
  std::set<v2x::StationId> filter;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string item_path = path + "[" + std::to_string(i) + "]";
    filter.insert(v2x::StationId{as_u32(j[i], item_path)});
  }
  return filter;
}

geo::Geofence parse_fence(const json& j, const std::string& path) {
  expect_object(j, path);
  const std::string type = require_string(j, path, "type");
  if (type == "circle") {
    check_keys(j, path, {"type", "center", "radius_m"});
    geo::CircleFence fence;
    fence.center = parse_position(require_child(j, path, "center"), path + ".center");
    fence.radius_m = require_double(j, path, "radius_m");
    return fence;
  }
  if (type == "polygon") {
    check_keys(j, path, {"type", "vertices"});
    const json& vertices = require_child(j, path, "vertices");
    expect_array(vertices, path + ".vertices");
    geo::PolygonFence fence;
    for (std::size_t i = 0; i < vertices.size(); ++i) {
      fence.vertices.push_back(parse_position(
          vertices[i], path + ".vertices[" + std::to_string(i) + "]"));
    }
    return fence;
  }
  fail(path + ".type", "expected 'circle' or 'polygon', got '" + type + "'");
}

orch::AnalysisRule parse_rule(const json& j, const std::string& path,
                              double default_cooldown_s) {
  expect_object(j, path);
  const std::string type = require_string(j, path, "type");
  orch::AnalysisRule rule;
  rule.cooldown_s = optional_double(j, path, "cooldown_s", default_cooldown_s);

  std::optional<std::set<v2x::StationId>> filter;
  if (const json* f = find(j, "station_filter")) {
    filter = parse_station_filter(*f, path + ".station_filter");
  }

  if (type == "first_cam") {
    check_keys(j, path, {"type", "cooldown_s", "station_filter"});
    rule.kind = orch::FirstCamRule{std::move(filter)};
    return rule;
  }
  if (type == "geofence_presence") {
    check_keys(j, path, {"type", "cooldown_s", "station_filter", "fence"});
    orch::GeofencePresenceRule kind;
    kind.fence = parse_fence(require_child(j, path, "fence"), path + ".fence");
    kind.station_filter = std::move(filter);
    rule.kind = std::move(kind);
    return rule;
  }
  fail(path + ".type", "expected 'first_cam' or 'geofence_presence', got '" + type + "'");
}

orch::DeploymentPlan parse_plan(const json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, path, {"manager_processing_s", "sink_service", "services"});
  orch::DeploymentPlan plan;
  plan.manager_processing_s = require_double(j, path, "manager_processing_s");
  plan.sink_service = require_string(j, path, "sink_service");
  const json& services = require_child(j, path, "services");
  expect_array(services, path + ".services");
  for (std::size_t i = 0; i < services.size(); ++i) {
    const std::string service_path = path + ".services[" + std::to_string(i) + "]";
    const json& sj = services[i];
    expect_object(sj, service_path);
    check_keys(sj, service_path, {"name", "node", "stages", "inputs"});
    orch::ServiceSpec service;
    service.name = require_string(sj, service_path, "name");
    service.node = require_string(sj, service_path, "node");
    const json& stages = require_child(sj, service_path, "stages");
    expect_array(stages, service_path + ".stages");
    for (std::size_t k = 0; k < stages.size(); ++k) {
      const std::string stage_path = service_path + ".stages[" + std::to_string(k) + "]";
      expect_object(stages[k], stage_path);
      check_keys(stages[k], stage_path, {"label", "duration_s"});
      orch::ServiceStage stage;
      stage.label = require_string(stages[k], stage_path, "label");
      stage.duration_s = require_double(stages[k], stage_path, "duration_s");
      service.stages.push_back(std::move(stage));
    }
    if (const json* inputs = find(sj, "inputs")) {
      expect_array(*inputs, service_path + ".inputs");
      for (std::size_t k = 0; k < inputs->size(); ++k) {
        const json& input = (*inputs)[k];
        const std::string input_path = service_path + ".inputs[" + std::to_string(k) + "]";
        if (!input.is_string()) {
          fail(input_path, "expected a string");
        }
        service.inputs.push_back(input.get<std::string>());
      }
    }
    plan.services.push_back(std::move(service));
  }
  return plan;
}

std::vector<sim::RsuNode> parse_rsus(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<sim::RsuNode> rsus;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string rsu_path = path + "[" + std::to_string(i) + "]";
    const json& rj = j[i];
    expect_object(rj, rsu_path);
    check_keys(rj, rsu_path, {"id", "station_id", "position", "hosts_v2x"});
    sim::RsuNode rsu;
    rsu.id = require_string(rj, rsu_path, "id");
    rsu.station_id = v2x::StationId{
        as_u32(require_child(rj, rsu_path, "station_id"), rsu_path + ".station_id")};
    rsu.position = parse_position(require_child(rj, rsu_path, "position"),
                                  rsu_path + ".position");
    if (const json* hosts = find(rj, "hosts_v2x")) {
      if (!hosts->is_boolean()) {
        fail(rsu_path + ".hosts_v2x", "expected a boolean");
      }
      rsu.hosts_v2x = hosts->get<bool>();
    }
    rsus.push_back(std::move(rsu));
  }
  return rsus;
}

std::variant<sim::WaypointRoute, sim::ParametricApproach> parse_route(
    const json& j, const std::string& path) {
  expect_object(j, path);
  const std::string type = require_string(j, path, "type");
  if (type == "parametric") {
    check_keys(j, path, {"type", "bearing_deg", "start_distance_m", "speed_kmh", "target"});
    sim::ParametricApproach route;
    route.bearing_deg = require_double(j, path, "bearing_deg");
    route.start_distance_m = require_double(j, path, "start_distance_m");
    route.speed_kmh = require_double(j, path, "speed_kmh");
    route.target = parse_position(require_child(j, path, "target"), path + ".target");
    return route;
  }
  if (type == "waypoints") {
    check_keys(j, path, {"type", "points"});
    const json& points = require_child(j, path, "points");
    expect_array(points, path + ".points");
    sim::WaypointRoute route;
    for (std::size_t i = 0; i < points.size(); ++i) {
      const std::string point_path = path + ".points[" + std::to_string(i) + "]";
      expect_object(points[i], point_path);
      check_keys(points[i], point_path, {"t_s", "lat", "lon"});
      sim::Waypoint wp;
      wp.time_offset_s = require_double(points[i], point_path, "t_s");
      wp.position = v2x::make_position(require_double(points[i], point_path, "lat"),
                                       require_double(points[i], point_path, "lon"));
      route.waypoints.push_back(wp);
    }
    return route;
  }
  fail(path + ".type", "expected 'parametric' or 'waypoints', got '" + type + "'");
}

std::vector<sim::VehicleAgent> parse_vehicles(const json& j, const std::string& path) {
  expect_array(j, path);
  std::vector<sim::VehicleAgent> vehicles;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string vehicle_path = path + "[" + std::to_string(i) + "]";
    const json& vj = j[i];
    expect_object(vj, vehicle_path);
    check_keys(vj, vehicle_path, {"station_id", "route", "cam_period_ms"});
    sim::VehicleAgent vehicle;
    vehicle.station_id = v2x::StationId{as_u32(
        require_child(vj, vehicle_path, "station_id"), vehicle_path + ".station_id")};
    vehicle.route = parse_route(require_child(vj, vehicle_path, "route"),
                                vehicle_path + ".route");
    if (const json* period = find(vj, "cam_period_ms")) {
      const std::uint64_t value = as_uint(*period, vehicle_path + ".cam_period_ms");
      if (value == 0 || value > 0xffffffffull) {
        fail(vehicle_path + ".cam_period_ms", "expected a positive 32-bit integer");
      }
      vehicle.cam_period_ms = static_cast<std::uint32_t>(value);
    }
    vehicles.push_back(std::move(vehicle));
  }
  return vehicles;
}

sim::OtherLatencies parse_other_latencies(const json& j, const std::string& path) {
  expect_object(j, path);
  check_keys(j, path, {"event_detection_ms", "fusion_processing_ms", "cpm_generation_ms"});
  sim::OtherLatencies other;
  other.event_detection_ms = optional_double(j, path, "event_detection_ms", 0.0);
  other.fusion_processing_ms = optional_double(j, path, "fusion_processing_ms", 0.0);
  other.cpm_generation_ms = optional_double(j, path, "cpm_generation_ms", 0.0);
  return other;
}

channel::ClockModel parse_clocks(const json& j, const std::string& path) {
  expect_object(j, path);
  channel::ClockModel clocks;
  for (const auto& [node, value] : j.items()) {
    clocks.offsets_ms[node] = as_double(value, path + "." + node);
  }
  return clocks;
}

}  // namespace

sim::ScenarioConfig load_scenario(const std::string& json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw InvalidScenario(std::string("scenario: invalid JSON: ") + e.what());
  }
  const std::string path = "scenario";
  expect_object(root, path);
  check_keys(root, path,
             {"rsus", "vehicles", "channel", "clocks", "rule", "plan",
              "uplink_latency_ms", "fusion_period_ms", "other_latencies",
              "idle_timeout_s", "end_time_s", "seed"});

  sim::ScenarioConfig config;
  config.rsus = parse_rsus(require_child(root, path, "rsus"), path + ".rsus");
  config.vehicles =
      parse_vehicles(require_child(root, path, "vehicles"), path + ".vehicles");
  config.channel =
      parse_channel(require_child(root, path, "channel"), path + ".channel");
  if (const json* clocks = find(root, "clocks")) {
    config.clocks = parse_clocks(*clocks, path + ".clocks");
  }
  config.uplink_latency_ms = optional_double(root, path, "uplink_latency_ms", 0.0);
  config.fusion_period_ms = optional_double(root, path, "fusion_period_ms", 100.0);
  if (const json* other = find(root, "other_latencies")) {
    config.other_latencies = parse_other_latencies(*other, path + ".other_latencies");
  }
  config.idle_timeout_s = optional_double(root, path, "idle_timeout_s", 60.0);
  config.rule = parse_rule(require_child(root, path, "rule"), path + ".rule",
                           config.idle_timeout_s);
  config.plan = parse_plan(require_child(root, path, "plan"), path + ".plan");
  config.end_time_s = require_double(root, path, "end_time_s");
  if (const json* seed = find(root, "seed")) {
    config.seed = as_uint(*seed, path + ".seed");
  }
  return config;
}

sim::ScenarioConfig load_scenario_file(const std::string& file_path) {
  std::ifstream in(file_path, std::ios::binary);
  if (!in) {
    throw InvalidScenario("scenario: cannot read file '" + file_path + "'");
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return load_scenario(buffer.str());
}

}  // namespace orchsim::cli
