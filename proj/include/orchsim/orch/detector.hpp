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
#include <optional>
#include <set>
#include <variant>

#include "orchsim/geo/geofence.hpp"
#include "orchsim/v2x/messages.hpp"

namespace orchsim::orch {

// Fires on the first matching CAM since the orchestrator was last Idle.
struct FirstCamRule {
  std::optional<std::set<v2x::StationId>> station_filter;
};

// Fires whenever a matching CAM reports a position inside the fence.
struct GeofencePresenceRule {
  geo::Geofence fence;
  std::optional<std::set<v2x::StationId>> station_filter;
};

struct AnalysisRule {
  std::variant<FirstCamRule, GeofencePresenceRule> kind;
  double cooldown_s = 60.0;
};

void validate(const AnalysisRule& rule);

struct DeploymentRequest {
  double requested_at_ms = 0.0;  // detector node clock
  v2x::StationId triggering_station;
  std::uint64_t triggering_cam_generation_ms = 0;
};

struct DetectorState {
  bool armed = true;  // FirstCam only; re-arm when the orchestrator returns to Idle
  std::optional<double> last_request_ms;
  std::optional<double> last_demand_ms;  // refreshed by every matching CAM
};

// Station filter plus, for geofence rules, fence containment.
bool rule_matches(const AnalysisRule& rule, const v2x::CamMessage& cam);

// At most one request per cooldown window. Matching CAMs always refresh
// state.last_demand_ms, even when no request fires.
std::optional<DeploymentRequest> detect(const AnalysisRule& rule,
                                        const v2x::CamMessage& cam,
                                        double detector_now_ms, DetectorState& state);

}  // namespace orchsim::orch
