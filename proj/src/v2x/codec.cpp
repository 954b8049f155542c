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

#include "orchsim/v2x/codec.hpp"

#include <string>

#include "orchsim/errors.hpp"

namespace orchsim::v2x {

namespace {

constexpr std::uint8_t kCamMagic0 = 0x43;  // 'C'
constexpr std::uint8_t kCamMagic1 = 0x41;  // 'A'
constexpr std::uint8_t kCpmMagic1 = 0x50;  // 'P'

void put_u16(std::vector<std::uint8_t>& out, std::uint16_t v) {
  out.push_back(static_cast<std::uint8_t>(v));
  out.push_back(static_cast<std::uint8_t>(v >> 8));
}

void put_u32(std::vector<std::uint8_t>& out, std::uint32_t v) {
  for (int shift = 0; shift < 32; shift += 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void put_u64(std::vector<std::uint8_t>& out, std::uint64_t v) {
  for (int shift = 0; shift < 64; shift += 8) {
    out.push_back(static_cast<std::uint8_t>(v >> shift));
  }
}

void put_i32(std::vector<std::uint8_t>& out, std::int32_t v) {
  put_u32(out, static_cast<std::uint32_t>(v));
}

class Reader {
 public:
  explicit Reader(std::span<const std::uint8_t> bytes) : bytes_(bytes) {}

  std::uint8_t u8() { return bytes_[pos_++]; }

  std::uint16_t u16() {
    std::uint16_t v = static_cast<std::uint16_t>(bytes_[pos_] |
                                                 (bytes_[pos_ + 1] << 8));
    pos_ += 2;
    return v;
  }

  std::uint32_t u32() {
    std::uint32_t v = 0;
    for (int i = 0; i < 4; ++i) {
      v |= static_cast<std::uint32_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += 4;
    return v;
  }

  std::uint64_t u64() {
    std::uint64_t v = 0;
    for (int i = 0; i < 8; ++i) {
      v |= static_cast<std::uint64_t>(bytes_[pos_ + i]) << (8 * i);
    }
    pos_ += 8;
    return v;
  }

  std::int32_t i32() { return static_cast<std::int32_t>(u32()); }

 private:
  std::span<const std::uint8_t> bytes_;
  std::size_t pos_ = 0;
};

void check_header(std::span<const std::uint8_t> bytes, std::uint8_t magic1,
                  const char* kind) {
  if (bytes.size() < 3) {
    throw MalformedMessage(std::string(kind) + ": message too short");
  }
  if (bytes[0] != kCamMagic0 || bytes[1] != magic1) {
    throw MalformedMessage(std::string(kind) + ": wrong magic");
  }
  if (bytes[2] != kWireVersion) {
    throw MalformedMessage(std::string(kind) + ": unsupported version");
  }
}

}  // namespace

std::vector<std::uint8_t> encode_cam(const CamMessage& msg) {
  std::vector<std::uint8_t> out;
  out.reserve(kCamWireSize);
  out.push_back(kCamMagic0);
  out.push_back(kCamMagic1);
  out.push_back(kWireVersion);
  put_u32(out, msg.station_id.value);
  put_u64(out, msg.generation_time_ms);
  put_i32(out, msg.position.latitude_e7);
  put_i32(out, msg.position.longitude_e7);
  put_u16(out, msg.speed_cms);
  put_u16(out, msg.heading_ddeg);
  return out;
}

CamMessage decode_cam(std::span<const std::uint8_t> bytes) {
  if (bytes.size() != kCamWireSize) {
    throw MalformedMessage("cam: expected 27 bytes, got " +
                           std::to_string(bytes.size()));
  }
  check_header(bytes, kCamMagic1, "cam");
  Reader r(bytes.subspan(3));
  CamMessage msg;
  msg.station_id.value = r.u32();
  msg.generation_time_ms = r.u64();
  msg.position.latitude_e7 = r.i32();
  msg.position.longitude_e7 = r.i32();
  msg.speed_cms = r.u16();
  msg.heading_ddeg = r.u16();
  validate(msg);
  return msg;
}

std::vector<std::uint8_t> encode_cpm(const CpmMessage& msg) {
  std::vector<std::uint8_t> out;
  out.reserve(kCpmHeaderSize + kCpmObjectSize * msg.objects.size());
  out.push_back(kCamMagic0);
  out.push_back(kCpmMagic1);
  out.push_back(kWireVersion);
  put_u32(out, msg.station_id.value);
  put_u64(out, msg.reference_time_ms);
  out.push_back(static_cast<std::uint8_t>(msg.objects.size()));
  for (const auto& obj : msg.objects) {
    put_u16(out, obj.object_id);
    put_i32(out, obj.position.latitude_e7);
    put_i32(out, obj.position.longitude_e7);
    put_u16(out, obj.speed_cms);
    put_u16(out, obj.heading_ddeg);
    out.push_back(static_cast<std::uint8_t>(obj.object_class));
    out.insert(out.end(), 6, 0);  // reserved
  }
  return out;
}

CpmMessage decode_cpm(std::span<const std::uint8_t> bytes) {
  if (bytes.size() < kCpmHeaderSize) {
    throw MalformedMessage("cpm: message too short");
  }
  check_header(bytes, kCpmMagic1, "cpm");
  Reader r(bytes.subspan(3));
  CpmMessage msg;
  msg.station_id.value = r.u32();
  msg.reference_time_ms = r.u64();
  const std::size_t count = bytes[kCpmHeaderSize - 1];
  r.u8();
  if (bytes.size() != kCpmHeaderSize + kCpmObjectSize * count) {
    throw MalformedMessage("cpm: length does not match object count");
  }
  msg.objects.reserve(count);
  for (std::size_t i = 0; i < count; ++i) {
    PerceivedObject obj;
    obj.object_id = r.u16();
    obj.position.latitude_e7 = r.i32();
    obj.position.longitude_e7 = r.i32();
    obj.speed_cms = r.u16();
    obj.heading_ddeg = r.u16();
    const std::uint8_t cls = r.u8();
    if (cls > kObjectClassMax) {
      throw MalformedMessage("cpm: object class out of range");
    }
    obj.object_class = static_cast<ObjectClass>(cls);
    for (int pad = 0; pad < 6; ++pad) {
      if (r.u8() != 0) {
        throw MalformedMessage("cpm: nonzero reserved bytes");
      }
    }
    msg.objects.push_back(obj);
  }
  validate(msg);
  return msg;
}

std::string to_hex(std::span<const std::uint8_t> bytes) {
  static const char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0x0f]);
  }
  return out;
}

}  // namespace orchsim::v2x
