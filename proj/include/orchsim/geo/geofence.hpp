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

#include <variant>
#include <vector>

#include "orchsim/v2x/messages.hpp"

namespace orchsim::geo {

struct CircleFence {
  v2x::GeoPosition center;
  double radius_m = 0.0;
};

struct PolygonFence {
  // Closure is implicit; the first vertex is not repeated at the end.
  std::vector<v2x::GeoPosition> vertices;
};

using Geofence = std::variant<CircleFence, PolygonFence>;

// Throws InvalidGeofence on nonpositive radius, fewer than 3 vertices,
// explicit closure, duplicate consecutive vertices or self-intersection.
void validate(const Geofence& fence);

// Boundary points count as inside for both variants.
bool contains(const Geofence& fence, const v2x::GeoPosition& p);

}  // namespace orchsim::geo
