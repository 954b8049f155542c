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
#include <span>
#include <string>
#include <vector>

#include "orchsim/v2x/messages.hpp"

namespace orchsim::v2x {

// Fixed-layout little-endian wire format. Both message kinds start with a
// two-byte magic ("CA" / "CP") followed by a one-byte format version.
inline constexpr std::uint8_t kWireVersion = 0x01;
inline constexpr std::size_t kCamWireSize = 27;
inline constexpr std::size_t kCpmHeaderSize = 16;
inline constexpr std::size_t kCpmObjectSize = 21;

// Pure function of the message; requires a valid message (see validate()).
std::vector<std::uint8_t> encode_cam(const CamMessage& msg);

// Inverse of encode_cam on its image. Throws MalformedMessage on wrong
// length, wrong magic/version or any field outside its valid range.
CamMessage decode_cam(std::span<const std::uint8_t> bytes);

std::vector<std::uint8_t> encode_cpm(const CpmMessage& msg);
CpmMessage decode_cpm(std::span<const std::uint8_t> bytes);

std::string to_hex(std::span<const std::uint8_t> bytes);

}  // namespace orchsim::v2x
