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

#include "orchsim/geo/trajectory.hpp"

#include <map>

#include "orchsim/errors.hpp"
#include "orchsim/geo/geodesy.hpp"

namespace orchsim::geo {

const char* to_string(RouteClass c) {
  switch (c) {
    case RouteClass::kFromNorth: return "FromNorth";
    case RouteClass::kFromEast: return "FromEast";
    case RouteClass::kFromSouth: return "FromSouth";
    case RouteClass::kFromWest: return "FromWest";
    case RouteClass::kIrrelevant: return "Irrelevant";
  }
  return "Irrelevant";
}

std::vector<Trajectory> aggregate_trajectories(std::span<const v2x::CamMessage> cams,
                                               double gap_split_s) {
  std::map<std::uint32_t, std::vector<Trajectory>> by_station;
  const double gap_ms = gap_split_s * 1000.0;
  for (const auto& cam : cams) {
    TrajectoryPoint point;
    point.time_ms = cam.generation_time_ms;
    point.position = cam.position;
    point.speed_cms = cam.speed_cms;
    point.heading_ddeg = cam.heading_ddeg;

    auto& trajectories = by_station[cam.station_id.value];
    bool start_new = trajectories.empty();
    if (!start_new) {
      const std::uint64_t prev_ms = trajectories.back().points.back().time_ms;
      start_new = cam.generation_time_ms <= prev_ms ||
                  static_cast<double>(cam.generation_time_ms - prev_ms) > gap_ms;
    }
    if (start_new) {
      Trajectory traj;
      traj.station_id = cam.station_id;
      trajectories.push_back(std::move(traj));
    }
    trajectories.back().points.push_back(point);
  }

  std::vector<Trajectory> out;
  for (auto& [station, trajectories] : by_station) {
    for (auto& traj : trajectories) {
      out.push_back(std::move(traj));
    }
  }
  return out;
}

RouteClass classify_route(const Trajectory& traj, const v2x::GeoPosition& intersection,
                          double relevance_radius_m) {
  if (traj.points.empty()) {
    throw EmptyTrajectory("classify_route: trajectory has no points");
  }
  bool relevant = false;
  const TrajectoryPoint* anchor = nullptr;
  for (const auto& point : traj.points) {
    const double d = haversine_distance_m(intersection, point.position);
    if (d <= relevance_radius_m) {
      relevant = true;
    }
    if (anchor == nullptr && d >= relevance_radius_m / 2.0 && d <= relevance_radius_m) {
      anchor = &point;
    }
  }
  if (!relevant) {
    return RouteClass::kIrrelevant;
  }
  if (anchor == nullptr) {
    anchor = &traj.points.front();
  }
  const double bearing = initial_bearing_deg(intersection, anchor->position);
  if (bearing >= 315.0 || bearing < 45.0) return RouteClass::kFromNorth;
  if (bearing < 135.0) return RouteClass::kFromEast;
  if (bearing < 225.0) return RouteClass::kFromSouth;
  return RouteClass::kFromWest;
}

}  // namespace orchsim::geo
