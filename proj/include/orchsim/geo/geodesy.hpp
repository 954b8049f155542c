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

#include "orchsim/v2x/messages.hpp"

namespace orchsim::geo {

// Mean earth radius, spherical model.
inline constexpr double kEarthRadiusM = 6371008.8;

// Great-circle distance in meters. Symmetric, nonnegative.
double haversine_distance_m(const v2x::GeoPosition& a, const v2x::GeoPosition& b);

// Initial great-circle bearing from -> to, degrees in [0, 360).
double initial_bearing_deg(const v2x::GeoPosition& from, const v2x::GeoPosition& to);

// Point reached from start after distance_m along the initial bearing.
v2x::GeoPosition destination(const v2x::GeoPosition& start, double bearing_deg,
                             double distance_m);

// Equirectangular projection about a fixed origin. Adequate below a few km.
class LocalTangentPlane {
 public:
  struct Xy {
    double x_m = 0.0;  // east
    double y_m = 0.0;  // north
  };

  explicit LocalTangentPlane(const v2x::GeoPosition& origin);

  Xy to_local(const v2x::GeoPosition& p) const;
  v2x::GeoPosition to_geo(const Xy& xy) const;

 private:
  double origin_lat_rad_;
  double origin_lon_rad_;
  double cos_lat_;
};

}  // namespace orchsim::geo
