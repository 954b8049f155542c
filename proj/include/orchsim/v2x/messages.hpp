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
#include <vector>

namespace orchsim::v2x {

// Pseudonymous sender identifier. 0 is reserved as "unassigned" and is
// not a valid identifier for a transmitting station.
struct StationId {
  std::uint32_t value = 0;

  friend constexpr auto operator<=>(const StationId&, const StationId&) = default;
};

// WGS-84 position at 1e-7 degree resolution.
struct GeoPosition {
  std::int32_t latitude_e7 = 0;
  std::int32_t longitude_e7 = 0;

  friend constexpr auto operator<=>(const GeoPosition&, const GeoPosition&) = default;
};

inline constexpr std::int32_t kLatitudeMaxE7 = 900000000;
inline constexpr std::int32_t kLongitudeMaxE7 = 1800000000;
inline constexpr std::uint16_t kHeadingMaxDdeg = 3599;
// Saturating speed cap (~590 km/h).
inline constexpr std::uint16_t kSpeedMaxCms = 16382;

enum class ObjectClass : std::uint8_t {
  kUnknown = 0,
  kPedestrian = 1,
  kCyclist = 2,
  kPassengerCar = 3,
  kTruck = 4,
};

inline constexpr std::uint8_t kObjectClassMax = 4;

// Cooperative awareness message: periodic self-announcement of a station.
struct CamMessage {
  StationId station_id;
  std::uint64_t generation_time_ms = 0;  // sender clock, ms since epoch
  GeoPosition position;
  std::uint16_t speed_cms = 0;
  std::uint16_t heading_ddeg = 0;  // 0.1-degree units, [0, 3599]

  friend constexpr auto operator<=>(const CamMessage&, const CamMessage&) = default;
};

struct PerceivedObject {
  std::uint16_t object_id = 0;
  GeoPosition position;
  std::uint16_t speed_cms = 0;
  std::uint16_t heading_ddeg = 0;
  ObjectClass object_class = ObjectClass::kUnknown;

  friend constexpr auto operator<=>(const PerceivedObject&, const PerceivedObject&) = default;
};

inline constexpr std::size_t kMaxPerceivedObjects = 255;  // one-byte count field

// Collective perception message: perceived-object list from a roadside unit.
struct CpmMessage {
  StationId station_id;  // originating roadside unit
  std::uint64_t reference_time_ms = 0;
  std::vector<PerceivedObject> objects;

  friend auto operator<=>(const CpmMessage&, const CpmMessage&) = default;
};

bool is_valid(const GeoPosition& p);

// Throws MalformedMessage naming the offending field.
void validate(const CamMessage& msg);
void validate(const PerceivedObject& obj);
void validate(const CpmMessage& msg);

// Builds a CPM from a fused object list. Objects keep their input order.
// Throws TooManyObjects above the wire-format limit of 255.
CpmMessage build_cpm(std::vector<PerceivedObject> objects, StationId rsu, std::uint64_t now_ms);

GeoPosition make_position(double latitude_deg, double longitude_deg);
double latitude_deg(const GeoPosition& p);
double longitude_deg(const GeoPosition& p);

// Clamps to the 16382 cm/s wire cap; negative input clamps to 0.
std::uint16_t saturate_speed_cms(double speed_cms);

}  // namespace orchsim::v2x
