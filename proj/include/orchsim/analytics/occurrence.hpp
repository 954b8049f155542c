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

#include <bitset>
#include <cstdint>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "orchsim/v2x/messages.hpp"

namespace orchsim::analytics {

inline constexpr int kMinutesPerDay = 1440;

// Minute-resolution CAM presence per local calendar day. Days are stored as
// local epoch day numbers and cover the full range between the first and the
// last observed date, so quiet days in between appear as all-false rows.
struct OccurrenceMatrix {
  std::vector<std::int64_t> day_numbers;
  std::vector<std::bitset<kMinutesPerDay>> cells;
};

// Marks cell (local date, local minute of day) for every CAM whose station is
// in relevant_stations. Local time = epoch time + timezone_offset_min.
OccurrenceMatrix build_occurrence_matrix(std::span<const v2x::CamMessage> cams,
                                         const std::set<v2x::StationId>& relevant_stations,
                                         int timezone_offset_min);

// Per-day count of minutes in the union of {m .. m+buffer_min} over all
// occurrence minutes m, clipped to [0, 1439].
std::vector<int> active_minutes(const OccurrenceMatrix& matrix, int buffer_min);

// ISO date "YYYY-MM-DD" for a local epoch day number.
std::string day_iso_date(std::int64_t day_number);

}  // namespace orchsim::analytics
