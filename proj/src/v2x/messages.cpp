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

#include "orchsim/v2x/messages.hpp"

#include <cmath>
#include <string>

#include "orchsim/errors.hpp"

namespace orchsim::v2x {

bool is_valid(const GeoPosition& p) {
  return p.latitude_e7 >= -kLatitudeMaxE7 && p.latitude_e7 <= kLatitudeMaxE7 &&
         p.longitude_e7 >= -kLongitudeMaxE7 && p.longitude_e7 <= kLongitudeMaxE7;
}

void validate(const CamMessage& msg) {
  if (msg.station_id.value == 0) {
    throw MalformedMessage("cam: station_id must not be 0 (reserved)");
  }
  if (!is_valid(msg.position)) {
    throw MalformedMessage("cam: position out of range");
  }
  if (msg.heading_ddeg > kHeadingMaxDdeg) {
    throw MalformedMessage("cam: heading_ddeg exceeds 3599");
  }
  if (msg.speed_cms > kSpeedMaxCms) {
    throw MalformedMessage("cam: speed_cms exceeds 16382");
  }
}

void validate(const PerceivedObject& obj) {
  if (!is_valid(obj.position)) {
    throw MalformedMessage("perceived object: position out of range");
  }
  if (obj.heading_ddeg > kHeadingMaxDdeg) {
    throw MalformedMessage("perceived object: heading_ddeg exceeds 3599");
  }
  if (static_cast<std::uint8_t>(obj.object_class) > kObjectClassMax) {
    throw MalformedMessage("perceived object: unknown object class");
  }
}

void validate(const CpmMessage& msg) {
  if (msg.station_id.value == 0) {
    throw MalformedMessage("cpm: station_id must not be 0 (reserved)");
  }
  if (msg.objects.size() > kMaxPerceivedObjects) {
    throw MalformedMessage("cpm: more than 255 objects");
  }
  for (const auto& obj : msg.objects) {
    validate(obj);
  }
}

CpmMessage build_cpm(std::vector<PerceivedObject> objects, StationId rsu, std::uint64_t now_ms) {
  if (objects.size() > kMaxPerceivedObjects) {
    throw TooManyObjects("cpm object list exceeds 255 entries: " +
                         std::to_string(objects.size()));
  }
  CpmMessage msg;
  msg.station_id = rsu;
  msg.reference_time_ms = now_ms;
  msg.objects = std::move(objects);
  return msg;
}

GeoPosition make_position(double latitude_deg, double longitude_deg) {
  GeoPosition p;
  p.latitude_e7 = static_cast<std::int32_t>(std::llround(latitude_deg * 1e7));
  p.longitude_e7 = static_cast<std::int32_t>(std::llround(longitude_deg * 1e7));
  return p;
}

double latitude_deg(const GeoPosition& p) { return p.latitude_e7 * 1e-7; }

double longitude_deg(const GeoPosition& p) { return p.longitude_e7 * 1e-7; }

std::uint16_t saturate_speed_cms(double speed_cms) {
  if (speed_cms <= 0.0) {
    return 0;
  }
  if (speed_cms >= kSpeedMaxCms) {
    return kSpeedMaxCms;
  }
  return static_cast<std::uint16_t>(std::lround(speed_cms));
}

}  // namespace orchsim::v2x
