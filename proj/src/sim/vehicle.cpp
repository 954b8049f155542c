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

#include "orchsim/sim/vehicle.hpp"

#include <cmath>
#include <cstddef>
#include <string>

#include "orchsim/errors.hpp"
#include "orchsim/geo/geodesy.hpp"

namespace orchsim::sim {

namespace {

struct Segment {
  const Waypoint* from = nullptr;
  const Waypoint* to = nullptr;  // null on a single-point route
};

Segment find_segment(const WaypointRoute& route, double t_s) {
  const auto& wps = route.waypoints;
  if (wps.empty() || t_s < wps.front().time_offset_s || t_s > wps.back().time_offset_s) {
    throw TimeOutOfRange("vehicle_position: t=" + std::to_string(t_s) +
                         " s outside waypoint route span");
  }
  for (std::size_t i = 0; i + 1 < wps.size(); ++i) {
    if (t_s <= wps[i + 1].time_offset_s) {
      return {&wps[i], &wps[i + 1]};
    }
  }
  return {&wps.back(), nullptr};
}

double parametric_time_to_target_s(const ParametricApproach& approach) {
  return approach.start_distance_m / (approach.speed_kmh / 3.6);
}

std::uint16_t to_heading_ddeg(double deg) {
  const double wrapped = std::fmod(deg + 360.0, 360.0);
  const long ddeg = std::lround(wrapped * 10.0) % 3600;
  return static_cast<std::uint16_t>(ddeg);
}

}  // namespace

v2x::GeoPosition vehicle_position(const VehicleAgent& agent, double t_s) {
  if (const auto* route = std::get_if<WaypointRoute>(&agent.route)) {
    const Segment seg = find_segment(*route, t_s);
    if (seg.to == nullptr) {
      return seg.from->position;
    }
    const double span_s = seg.to->time_offset_s - seg.from->time_offset_s;
    const double frac = (t_s - seg.from->time_offset_s) / span_s;
    const geo::LocalTangentPlane plane(seg.from->position);
    const auto target = plane.to_local(seg.to->position);
    return plane.to_geo({target.x_m * frac, target.y_m * frac});
  }
  const auto& approach = std::get<ParametricApproach>(agent.route);
  const double remaining_m =
      approach.start_distance_m - (approach.speed_kmh / 3.6) * t_s;
  if (remaining_m <= 0.0) {
    return approach.target;
  }
  return geo::destination(approach.target, approach.bearing_deg, remaining_m);
}

double vehicle_speed_ms(const VehicleAgent& agent, double t_s) {
  if (const auto* route = std::get_if<WaypointRoute>(&agent.route)) {
    const Segment seg = find_segment(*route, t_s);
    const Waypoint* from = seg.from;
    const Waypoint* to = seg.to;
    if (to == nullptr) {
      if (route->waypoints.size() < 2) {
        return 0.0;
      }
      from = &route->waypoints[route->waypoints.size() - 2];
      to = &route->waypoints.back();
    }
    const double span_s = to->time_offset_s - from->time_offset_s;
    return geo::haversine_distance_m(from->position, to->position) / span_s;
  }
  const auto& approach = std::get<ParametricApproach>(agent.route);
  return t_s < parametric_time_to_target_s(approach) ? approach.speed_kmh / 3.6 : 0.0;
}

std::uint16_t vehicle_heading_ddeg(const VehicleAgent& agent, double t_s) {
  if (const auto* route = std::get_if<WaypointRoute>(&agent.route)) {
    const Segment seg = find_segment(*route, t_s);
    const Waypoint* from = seg.from;
    const Waypoint* to = seg.to;
    if (to == nullptr) {
      if (route->waypoints.size() < 2) {
        return 0;
      }
      from = &route->waypoints[route->waypoints.size() - 2];
      to = &route->waypoints.back();
    }
    return to_heading_ddeg(geo::initial_bearing_deg(from->position, to->position));
  }
  const auto& approach = std::get<ParametricApproach>(agent.route);
  // Travel direction is the reciprocal of the approach bearing.
  return to_heading_ddeg(approach.bearing_deg + 180.0);
}

double route_start_s(const VehicleAgent& agent) {
  if (const auto* route = std::get_if<WaypointRoute>(&agent.route)) {
    return route->waypoints.front().time_offset_s;
  }
  return 0.0;
}

double route_end_s(const VehicleAgent& agent, double scenario_end_s) {
  if (const auto* route = std::get_if<WaypointRoute>(&agent.route)) {
    return route->waypoints.back().time_offset_s;
  }
  return scenario_end_s;
}

v2x::CamMessage make_cam(const VehicleAgent& agent, double t_s,
                         std::uint64_t generation_time_ms) {
  v2x::CamMessage cam;
  cam.station_id = agent.station_id;
  cam.generation_time_ms = generation_time_ms;
  cam.position = vehicle_position(agent, t_s);
  cam.speed_cms = v2x::saturate_speed_cms(vehicle_speed_ms(agent, t_s) * 100.0);
  cam.heading_ddeg = vehicle_heading_ddeg(agent, t_s);
  return cam;
}

}  // namespace orchsim::sim
