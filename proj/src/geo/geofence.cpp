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

#include "orchsim/geo/geofence.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <string>
#include <utility>

#include "orchsim/errors.hpp"
#include "orchsim/geo/geodesy.hpp"

namespace orchsim::geo {

namespace {

using Xy = LocalTangentPlane::Xy;

constexpr double kOnBoundaryEpsM = 1e-6;

double cross(const Xy& o, const Xy& a, const Xy& b) {
  return (a.x_m - o.x_m) * (b.y_m - o.y_m) - (a.y_m - o.y_m) * (b.x_m - o.x_m);
}

bool on_segment(const Xy& p, const Xy& a, const Xy& b) {
  const double abx = b.x_m - a.x_m;
  const double aby = b.y_m - a.y_m;
  const double apx = p.x_m - a.x_m;
  const double apy = p.y_m - a.y_m;
  const double len2 = abx * abx + aby * aby;
  double t = 0.0;
  if (len2 > 0.0) {
    t = std::clamp((apx * abx + apy * aby) / len2, 0.0, 1.0);
  }
  const double dx = apx - t * abx;
  const double dy = apy - t * aby;
  return std::sqrt(dx * dx + dy * dy) <= kOnBoundaryEpsM;
}

bool within_span(double lo, double hi, double v) {
  if (lo > hi) std::swap(lo, hi);
  return v >= lo && v <= hi;
}

// Any contact between the two closed segments counts as an intersection.
bool segments_intersect(const Xy& a, const Xy& b, const Xy& c, const Xy& d) {
  const double d1 = cross(a, b, c);
  const double d2 = cross(a, b, d);
  const double d3 = cross(c, d, a);
  const double d4 = cross(c, d, b);
  if (((d1 > 0 && d2 < 0) || (d1 < 0 && d2 > 0)) &&
      ((d3 > 0 && d4 < 0) || (d3 < 0 && d4 > 0))) {
    return true;
  }
  if (d1 == 0 && within_span(a.x_m, b.x_m, c.x_m) && within_span(a.y_m, b.y_m, c.y_m)) return true;
  if (d2 == 0 && within_span(a.x_m, b.x_m, d.x_m) && within_span(a.y_m, b.y_m, d.y_m)) return true;
  if (d3 == 0 && within_span(c.x_m, d.x_m, a.x_m) && within_span(c.y_m, d.y_m, a.y_m)) return true;
  if (d4 == 0 && within_span(c.x_m, d.x_m, b.x_m) && within_span(c.y_m, d.y_m, b.y_m)) return true;
  return false;
}

v2x::GeoPosition polygon_centroid(const PolygonFence& poly) {
  double lat = 0.0;
  double lon = 0.0;
  for (const auto& v : poly.vertices) {
    lat += v2x::latitude_deg(v);
    lon += v2x::longitude_deg(v);
  }
  const double n = static_cast<double>(poly.vertices.size());
  return v2x::make_position(lat / n, lon / n);
}

std::vector<Xy> project_vertices(const PolygonFence& poly, const LocalTangentPlane& plane) {
  std::vector<Xy> out;
  out.reserve(poly.vertices.size());
  for (const auto& v : poly.vertices) {
    out.push_back(plane.to_local(v));
  }
  return out;
}

void validate_polygon(const PolygonFence& poly) {
  const std::size_t n = poly.vertices.size();
  if (n < 3) {
    throw InvalidGeofence("polygon: needs at least 3 vertices, got " + std::to_string(n));
  }
  for (const auto& v : poly.vertices) {
    if (!v2x::is_valid(v)) {
      throw InvalidGeofence("polygon: vertex position out of range");
    }
  }
  if (poly.vertices.front() == poly.vertices.back()) {
    throw InvalidGeofence("polygon: first vertex repeated at end (closure is implicit)");
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (poly.vertices[i] == poly.vertices[(i + 1) % n]) {
      throw InvalidGeofence("polygon: duplicate consecutive vertices at index " + std::to_string(i));
    }
  }
  const LocalTangentPlane plane(polygon_centroid(poly));
  const std::vector<Xy> pts = project_vertices(poly, plane);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
      if (adjacent) continue;
      if (segments_intersect(pts[i], pts[(i + 1) % n], pts[j], pts[(j + 1) % n])) {
        throw InvalidGeofence("polygon: edges " + std::to_string(i) + " and " +
                              std::to_string(j) + " intersect");
      }
    }
  }
}

bool polygon_contains(const PolygonFence& poly, const v2x::GeoPosition& p) {
  const LocalTangentPlane plane(polygon_centroid(poly));
  const std::vector<Xy> pts = project_vertices(poly, plane);
  const Xy q = plane.to_local(p);
  const std::size_t n = pts.size();
  bool inside = false;
  for (std::size_t i = 0; i < n; ++i) {
    const Xy& a = pts[i];
    const Xy& b = pts[(i + 1) % n];
    if (on_segment(q, a, b)) {
      return true;
    }
    if ((a.y_m > q.y_m) != (b.y_m > q.y_m)) {
      const double x_int = a.x_m + (q.y_m - a.y_m) * (b.x_m - a.x_m) / (b.y_m - a.y_m);
      if (x_int > q.x_m) {
        inside = !inside;
      }
    }
  }
  return inside;
}

}  // namespace

void validate(const Geofence& fence) {
  if (const auto* circle = std::get_if<CircleFence>(&fence)) {
    if (!v2x::is_valid(circle->center)) {
      throw InvalidGeofence("circle: center position out of range");
    }
    if (!(circle->radius_m > 0.0)) {
      throw InvalidGeofence("circle: radius_m must be > 0, got " +
                            std::to_string(circle->radius_m));
    }
    return;
  }
  validate_polygon(std::get<PolygonFence>(fence));
}

bool contains(const Geofence& fence, const v2x::GeoPosition& p) {
  if (const auto* circle = std::get_if<CircleFence>(&fence)) {
    return haversine_distance_m(circle->center, p) <= circle->radius_m;
  }
  return polygon_contains(std::get<PolygonFence>(fence), p);
}

}  // namespace orchsim::geo
