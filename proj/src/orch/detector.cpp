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

#include "orchsim/orch/detector.hpp"

#include "orchsim/errors.hpp"

namespace orchsim::orch {

namespace {

bool passes_filter(const std::optional<std::set<v2x::StationId>>& filter,
                   v2x::StationId station) {
  return !filter.has_value() || filter->count(station) > 0;
}

}  // namespace

void validate(const AnalysisRule& rule) {
  if (rule.cooldown_s < 0.0) {
    throw InvalidScenario("rule.cooldown_s: must be >= 0");
  }
  if (const auto* geofence_rule = std::get_if<GeofencePresenceRule>(&rule.kind)) {
    geo::validate(geofence_rule->fence);
  }
}

bool rule_matches(const AnalysisRule& rule, const v2x::CamMessage& cam) {
  if (const auto* first_cam = std::get_if<FirstCamRule>(&rule.kind)) {
    return passes_filter(first_cam->station_filter, cam.station_id);
  }
  const auto& geofence_rule = std::get<GeofencePresenceRule>(rule.kind);
  return passes_filter(geofence_rule.station_filter, cam.station_id) &&
         geo::contains(geofence_rule.fence, cam.position);
}

std::optional<DeploymentRequest> detect(const AnalysisRule& rule,
                                        const v2x::CamMessage& cam,
                                        double detector_now_ms, DetectorState& state) {
  if (!rule_matches(rule, cam)) {
    return std::nullopt;
  }
  state.last_demand_ms = detector_now_ms;

  if (std::holds_alternative<FirstCamRule>(rule.kind)) {
    if (!state.armed) {
      return std::nullopt;
    }
  }
  if (state.last_request_ms.has_value() &&
      detector_now_ms - *state.last_request_ms < rule.cooldown_s * 1000.0) {
    return std::nullopt;
  }

  state.armed = false;
  state.last_request_ms = detector_now_ms;
  DeploymentRequest request;
  request.requested_at_ms = detector_now_ms;
  request.triggering_station = cam.station_id;
  request.triggering_cam_generation_ms = cam.generation_time_ms;
  return request;
}

}  // namespace orchsim::orch
