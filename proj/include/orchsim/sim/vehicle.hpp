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

#include "orchsim/sim/scenario.hpp"
#include "orchsim/v2x/messages.hpp"

namespace orchsim::sim {

// Waypoint routes interpolate piecewise-linearly in a local tangent plane
// and throw TimeOutOfRange outside [first, last] waypoint time. Parametric
// approaches run from t = 0 and hold at the target once reached.
v2x::GeoPosition vehicle_position(const VehicleAgent& agent, double t_s);

// Ground speed at t, for CAM payloads. Zero while holding at the target.
double vehicle_speed_ms(const VehicleAgent& agent, double t_s);

// Heading of travel at t in 0.1-degree units.
std::uint16_t vehicle_heading_ddeg(const VehicleAgent& agent, double t_s);

// First time at which the agent exists (waypoint start, 0 for parametric).
double route_start_s(const VehicleAgent& agent);

// Last time at which the agent exists; parametric agents never expire.
double route_end_s(const VehicleAgent& agent, double scenario_end_s);

// CAM snapshot of the agent at t, true-time generation stamp supplied.
v2x::CamMessage make_cam(const VehicleAgent& agent, double t_s,
                         std::uint64_t generation_time_ms);

}  // namespace orchsim::sim
