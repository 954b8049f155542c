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

#include "orchsim/io/cam_log.hpp"
#include "orchsim/v2x/messages.hpp"

namespace orchsim::io {

// Seeded generator for a week-long intersection recording with a known shape:
// 69610 rows from 714 distinct stations. Each day has 15 isolated visit blocks
// from unique passing vehicles (twelve 1-minute and three 2-minute visits,
// 18 CAM occurrence minutes per local day); 609 further stations idle far away.
struct SyntheticLogSpec {
  std::int64_t start_day_epoch = 20486;  // local date 2026-02-02
  int days = 7;
  int timezone_offset_min = 60;
  v2x::GeoPosition intersection = v2x::make_position(50.787, 6.046);
  std::uint64_t seed = 1;
};

inline constexpr std::uint64_t kSyntheticRowCount = 69'610;
inline constexpr std::uint32_t kSyntheticStationCount = 714;

std::vector<CamRecord> generate_cam_log(const SyntheticLogSpec& spec);

}  // namespace orchsim::io
