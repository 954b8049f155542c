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

#include "orchsim/geo/geodesy.hpp"

#include <algorithm>
#include <cmath>

namespace orchsim::geo {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kDegToRad = kPi / 180.0;
constexpr double kRadToDeg = 180.0 / kPi;

double lat_rad(const v2x::GeoPosition& p) { return v2x::latitude_deg(p) * kDegToRad; }
double lon_rad(const v2x::GeoPosition& p) { return v2x::longitude_deg(p) * kDegToRad; }

}  // namespace

double haversine_distance_m(const v2x::GeoPosition& a, const v2x::GeoPosition& b) {
  const double phi1 = lat_rad(a);
  const double phi2 = lat_rad(b);
  const double dphi = phi2 - phi1;
  const double dlambda = lon_rad(b) - lon_rad(a);
  const double sin_dphi = std::sin(dphi / 2.0);
  const double sin_dlambda = std::sin(dlambda / 2.0);
  const double h = sin_dphi * sin_dphi +
                   std::cos(phi1) * std::cos(phi2) * sin_dlambda * sin_dlambda;
  return 2.0 * kEarthRadiusM * std::asin(std::min(1.0, std::sqrt(h)));
}

double initial_bearing_deg(const v2x::GeoPosition& from, const v2x::GeoPosition& to) {
  const double phi1 = lat_rad(from);
  const double phi2 = lat_rad(to);
  const double dlambda = lon_rad(to) - lon_rad(from);
  const double y = std::sin(dlambda) * std::cos(phi2);
  const double x = std::cos(phi1) * std::sin(phi2) -
                   std::sin(phi1) * std::cos(phi2) * std::cos(dlambda);
  const double theta = std::atan2(y, x) * kRadToDeg;
  const double wrapped = std::fmod(theta + 360.0, 360.0);
  return wrapped == 360.0 ? 0.0 : wrapped;
}

v2x::GeoPosition destination(const v2x::GeoPosition& start, double bearing_deg,
                             double distance_m) {
  const double phi1 = lat_rad(start);
  const double lambda1 = lon_rad(start);
  const double theta = bearing_deg * kDegToRad;
  const double delta = distance_m / kEarthRadiusM;
  const double sin_phi2 = std::sin(phi1) * std::cos(delta) +
                          std::cos(phi1) * std::sin(delta) * std::cos(theta);
  const double phi2 = std::asin(std::clamp(sin_phi2, -1.0, 1.0));
  const double lambda2 =
      lambda1 + std::atan2(std::sin(theta) * std::sin(delta) * std::cos(phi1),
                           std::cos(delta) - std::sin(phi1) * sin_phi2);
  return v2x::make_position(phi2 * kRadToDeg, lambda2 * kRadToDeg);
}

LocalTangentPlane::LocalTangentPlane(const v2x::GeoPosition& origin)
    : origin_lat_rad_(lat_rad(origin)),
      origin_lon_rad_(lon_rad(origin)),
      cos_lat_(std::cos(lat_rad(origin))) {}

LocalTangentPlane::Xy LocalTangentPlane::to_local(const v2x::GeoPosition& p) const {
  Xy xy;
  xy.x_m = (lon_rad(p) - origin_lon_rad_) * cos_lat_ * kEarthRadiusM;
  xy.y_m = (lat_rad(p) - origin_lat_rad_) * kEarthRadiusM;
  return xy;
}

v2x::GeoPosition LocalTangentPlane::to_geo(const Xy& xy) const {
  const double lat = (origin_lat_rad_ + xy.y_m / kEarthRadiusM) * kRadToDeg;
  const double lon =
      (origin_lon_rad_ + xy.x_m / (kEarthRadiusM * cos_lat_)) * kRadToDeg;
  return v2x::make_position(lat, lon);
}

}  // namespace orchsim::geo
