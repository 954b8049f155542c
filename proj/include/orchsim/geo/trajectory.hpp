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
#include <span>
#include <vector>

#include "orchsim/v2x/messages.hpp"

namespace orchsim::geo {

struct TrajectoryPoint {
  std::uint64_t time_ms = 0;
  v2x::GeoPosition position;
  std::uint16_t speed_cms = 0;
  std::uint16_t heading_ddeg = 0;

  friend constexpr auto operator<=>(const TrajectoryPoint&, const TrajectoryPoint&) = default;
};

struct Trajectory {
  v2x::StationId station_id;
  std::vector<TrajectoryPoint> points;  // strictly increasing in time_ms
};

enum class RouteClass {
  kFromNorth,
  kFromEast,
  kFromSouth,
  kFromWest,
  kIrrelevant,
};

const char* to_string(RouteClass c);

// Groups CAMs by station; splits a station's stream into separate
// trajectories when the gap between consecutive CAMs exceeds gap_split_s
// or the timestamp does not increase. Output is ordered by
// (station_id, start time); no input point is lost or duplicated.
std::vector<Trajectory> aggregate_trajectories(std::span<const v2x::CamMessage> cams,
                                               double gap_split_s);

// Irrelevant if no point is within relevance_radius_m of the intersection.
// Otherwise buckets the bearing from the intersection to the earliest point
// whose distance lies in [radius/2, radius] (first point as fallback):
// north [315,45), east [45,135), south [135,225), west [225,315).
RouteClass classify_route(const Trajectory& traj, const v2x::GeoPosition& intersection,
                          double relevance_radius_m);

}  // namespace orchsim::geo
