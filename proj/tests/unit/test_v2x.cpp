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

#include "doctest.h"

#include <cstdint>
#include <random>
#include <vector>

#include "orchsim/errors.hpp"
#include "orchsim/v2x/codec.hpp"
#include "orchsim/v2x/messages.hpp"

namespace {

using namespace orchsim;

// Independent little-endian byte-layout oracle for the CAM wire format.
std::vector<std::uint8_t> oracle_cam_bytes(const v2x::CamMessage& m) {
  std::vector<std::uint8_t> b = {0x43, 0x41, 0x01};
  const auto le = [&b](std::uint64_t v, int n) {
    for (int i = 0; i < n; ++i) {
      b.push_back(static_cast<std::uint8_t>(v >> (8 * i)));
    }
  };
  le(m.station_id.value, 4);
  le(m.generation_time_ms, 8);
  le(static_cast<std::uint32_t>(m.position.latitude_e7), 4);
  le(static_cast<std::uint32_t>(m.position.longitude_e7), 4);
  le(m.speed_cms, 2);
  le(m.heading_ddeg, 2);
  return b;
}

v2x::CamMessage random_cam(std::mt19937_64& rng) {
  std::uniform_int_distribution<std::uint32_t> station(1, 0xffffffffu);
  std::uniform_int_distribution<std::uint64_t> time(0, 1ull << 48);
  std::uniform_int_distribution<std::int32_t> lat(-v2x::kLatitudeMaxE7,
                                                  v2x::kLatitudeMaxE7);
  std::uniform_int_distribution<std::int32_t> lon(-v2x::kLongitudeMaxE7,
                                                  v2x::kLongitudeMaxE7);
  std::uniform_int_distribution<int> speed(0, v2x::kSpeedMaxCms);
  std::uniform_int_distribution<int> heading(0, v2x::kHeadingMaxDdeg);
  v2x::CamMessage m;
  m.station_id.value = station(rng);
  m.generation_time_ms = time(rng);
  m.position.latitude_e7 = lat(rng);
  m.position.longitude_e7 = lon(rng);
  m.speed_cms = static_cast<std::uint16_t>(speed(rng));
  m.heading_ddeg = static_cast<std::uint16_t>(heading(rng));
  return m;
}

v2x::PerceivedObject random_object(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> id(0, 0xffff);
  std::uniform_int_distribution<std::int32_t> lat(-v2x::kLatitudeMaxE7,
                                                  v2x::kLatitudeMaxE7);
  std::uniform_int_distribution<std::int32_t> lon(-v2x::kLongitudeMaxE7,
                                                  v2x::kLongitudeMaxE7);
  std::uniform_int_distribution<int> speed(0, v2x::kSpeedMaxCms);
  std::uniform_int_distribution<int> heading(0, v2x::kHeadingMaxDdeg);
  std::uniform_int_distribution<int> cls(0, v2x::kObjectClassMax);
  v2x::PerceivedObject o;
  o.object_id = static_cast<std::uint16_t>(id(rng));
  o.position.latitude_e7 = lat(rng);
  o.position.longitude_e7 = lon(rng);
  o.speed_cms = static_cast<std::uint16_t>(speed(rng));
  o.heading_ddeg = static_cast<std::uint16_t>(heading(rng));
  o.object_class = static_cast<v2x::ObjectClass>(cls(rng));
  return o;
}

}  // namespace

TEST_CASE("cam encoding matches the byte-layout oracle on the zero message") {
  v2x::CamMessage m;
  m.station_id.value = 1;
  const auto bytes = v2x::encode_cam(m);
  REQUIRE(bytes.size() == v2x::kCamWireSize);
  CHECK(bytes[0] == 0x43);
  CHECK(bytes[1] == 0x41);
  CHECK(bytes[2] == 0x01);
  CHECK(bytes == oracle_cam_bytes(m));
  // Every numeric field after the station id is zero.
  for (std::size_t i = 7; i < bytes.size(); ++i) {
    CHECK(bytes[i] == 0);
  }
}

TEST_CASE("cam station id is encoded little-endian") {
  v2x::CamMessage m;
  m.station_id.value = 0x01020304;
  const auto bytes = v2x::encode_cam(m);
  CHECK(bytes[3] == 0x04);
  CHECK(bytes[4] == 0x03);
  CHECK(bytes[5] == 0x02);
  CHECK(bytes[6] == 0x01);
  CHECK(bytes == oracle_cam_bytes(m));
}

TEST_CASE("cam codec roundtrips 1000 pseudorandom messages") {
  std::mt19937_64 rng(42);
  for (int i = 0; i < 1000; ++i) {
    const v2x::CamMessage m = random_cam(rng);
    const auto bytes = v2x::encode_cam(m);
    CHECK(bytes == oracle_cam_bytes(m));
    CHECK(v2x::decode_cam(bytes) == m);
  }
}

TEST_CASE("cam decode rejects malformed input") {
  CHECK_THROWS_AS(v2x::decode_cam({}), MalformedMessage);

  v2x::CamMessage m;
  m.station_id.value = 7;
  auto bytes = v2x::encode_cam(m);

  SUBCASE("wrong length") {
    bytes.push_back(0);
    CHECK_THROWS_AS(v2x::decode_cam(bytes), MalformedMessage);
  }
  SUBCASE("wrong magic") {
    bytes[0] = 0x58;
    CHECK_THROWS_AS(v2x::decode_cam(bytes), MalformedMessage);
  }
  SUBCASE("wrong version") {
    bytes[2] = 0x02;
    CHECK_THROWS_AS(v2x::decode_cam(bytes), MalformedMessage);
  }
  SUBCASE("heading forced to 3600") {
    bytes[25] = static_cast<std::uint8_t>(3600 & 0xff);
    bytes[26] = static_cast<std::uint8_t>(3600 >> 8);
    CHECK_THROWS_AS(v2x::decode_cam(bytes), MalformedMessage);
  }
  SUBCASE("station id forced to 0") {
    bytes[3] = bytes[4] = bytes[5] = bytes[6] = 0;
    CHECK_THROWS_AS(v2x::decode_cam(bytes), MalformedMessage);
  }
  SUBCASE("latitude forced out of range") {
    const std::uint32_t bad = static_cast<std::uint32_t>(v2x::kLatitudeMaxE7 + 1);
    for (int i = 0; i < 4; ++i) {
      bytes[15 + i] = static_cast<std::uint8_t>(bad >> (8 * i));
    }
    CHECK_THROWS_AS(v2x::decode_cam(bytes), MalformedMessage);
  }
}

TEST_CASE("empty cpm is one header with count zero") {
  v2x::CpmMessage m;
  m.station_id.value = 9;
  m.reference_time_ms = 5;
  const auto bytes = v2x::encode_cpm(m);
  REQUIRE(bytes.size() == v2x::kCpmHeaderSize);
  CHECK(bytes[0] == 0x43);
  CHECK(bytes[1] == 0x50);
  CHECK(bytes[2] == 0x01);
  CHECK(bytes[v2x::kCpmHeaderSize - 1] == 0);
  CHECK(v2x::decode_cpm(bytes) == m);
}

TEST_CASE("cpm codec roundtrips 1000 pseudorandom messages") {
  std::mt19937_64 rng(43);
  std::uniform_int_distribution<int> count(0, 255);
  for (int i = 0; i < 1000; ++i) {
    v2x::CpmMessage m;
    m.station_id.value = static_cast<std::uint32_t>(i + 1);
    m.reference_time_ms = static_cast<std::uint64_t>(i) * 1000003;
    const int n = count(rng);
    for (int k = 0; k < n; ++k) {
      m.objects.push_back(random_object(rng));
    }
    const auto bytes = v2x::encode_cpm(m);
    REQUIRE(bytes.size() ==
            v2x::kCpmHeaderSize + v2x::kCpmObjectSize * m.objects.size());
    CHECK(v2x::decode_cpm(bytes) == m);
  }
}

TEST_CASE("cpm decode rejects corruption") {
  v2x::CpmMessage m;
  m.station_id.value = 9;
  m.objects.push_back({});
  auto bytes = v2x::encode_cpm(m);
  const std::size_t object_start = v2x::kCpmHeaderSize;

  SUBCASE("wrong magic") {
    bytes[1] = 0x41;
    CHECK_THROWS_AS(v2x::decode_cpm(bytes), MalformedMessage);
  }
  SUBCASE("length not matching count") {
    bytes.pop_back();
    CHECK_THROWS_AS(v2x::decode_cpm(bytes), MalformedMessage);
  }
  SUBCASE("object class out of range") {
    bytes[object_start + 14] = v2x::kObjectClassMax + 1;
    CHECK_THROWS_AS(v2x::decode_cpm(bytes), MalformedMessage);
  }
  SUBCASE("nonzero reserved byte") {
    bytes[object_start + 15] = 1;
    CHECK_THROWS_AS(v2x::decode_cpm(bytes), MalformedMessage);
  }
  SUBCASE("truncated to header minus one") {
    bytes.resize(v2x::kCpmHeaderSize - 1);
    CHECK_THROWS_AS(v2x::decode_cpm(bytes), MalformedMessage);
  }
}

TEST_CASE("build_cpm keeps order and enforces the object limit") {
  CHECK(v2x::build_cpm({}, v2x::StationId{9}, 5) ==
        v2x::CpmMessage{v2x::StationId{9}, 5, {}});

  v2x::PerceivedObject obj;
  obj.object_id = 77;
  const auto one = v2x::build_cpm({obj}, v2x::StationId{9}, 5);
  REQUIRE(one.objects.size() == 1);
  CHECK(one.objects[0] == obj);

  std::vector<v2x::PerceivedObject> many(v2x::kMaxPerceivedObjects);
  CHECK(v2x::build_cpm(many, v2x::StationId{9}, 5).objects.size() == 255);
  many.push_back({});
  CHECK_THROWS_AS(v2x::build_cpm(many, v2x::StationId{9}, 5), TooManyObjects);
}

TEST_CASE("message validation names the offending field") {
  v2x::CamMessage m;
  m.station_id.value = 1;
  m.heading_ddeg = 3600;
  CHECK_THROWS_WITH_AS(v2x::validate(m), "cam: heading_ddeg exceeds 3599",
                       MalformedMessage);
  m.heading_ddeg = 3599;
  CHECK_NOTHROW(v2x::validate(m));
  m.speed_cms = v2x::kSpeedMaxCms + 1;
  CHECK_THROWS_AS(v2x::validate(m), MalformedMessage);
}

TEST_CASE("speed saturates at the wire cap") {
  CHECK(v2x::saturate_speed_cms(-5.0) == 0);
  CHECK(v2x::saturate_speed_cms(0.0) == 0);
  CHECK(v2x::saturate_speed_cms(1388.9) == 1389);
  CHECK(v2x::saturate_speed_cms(1e9) == v2x::kSpeedMaxCms);
}

TEST_CASE("positions convert at 1e-7 degree resolution") {
  const auto p = v2x::make_position(50.787, 6.046);
  CHECK(p.latitude_e7 == 507870000);
  CHECK(p.longitude_e7 == 60460000);
  CHECK(v2x::latitude_deg(p) == doctest::Approx(50.787).epsilon(1e-12));
  CHECK(v2x::longitude_deg(p) == doctest::Approx(6.046).epsilon(1e-12));
}
