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

#include "orchsim/analytics/occurrence.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <limits>

namespace orchsim::analytics {

namespace {

constexpr std::int64_t kMsPerMinute = 60'000;
constexpr std::int64_t kMsPerDay = 86'400'000;

}  // namespace

OccurrenceMatrix build_occurrence_matrix(std::span<const v2x::CamMessage> cams,
                                         const std::set<v2x::StationId>& relevant_stations,
                                         int timezone_offset_min) {
  std::int64_t first_day = std::numeric_limits<std::int64_t>::max();
  std::int64_t last_day = std::numeric_limits<std::int64_t>::min();
  std::vector<std::pair<std::int64_t, int>> hits;
  for (const auto& cam : cams) {
    if (!relevant_stations.contains(cam.station_id)) {
      continue;
    }
    const std::int64_t local_ms = static_cast<std::int64_t>(cam.generation_time_ms) +
                                  static_cast<std::int64_t>(timezone_offset_min) * kMsPerMinute;
    std::int64_t day = local_ms / kMsPerDay;
    std::int64_t rem = local_ms % kMsPerDay;
    if (rem < 0) {
      day -= 1;
      rem += kMsPerDay;
    }
    const int minute = static_cast<int>(rem / kMsPerMinute);
    hits.emplace_back(day, minute);
    first_day = std::min(first_day, day);
    last_day = std::max(last_day, day);
  }

  OccurrenceMatrix matrix;
  if (hits.empty()) {
    return matrix;
  }
  const std::size_t n_days = static_cast<std::size_t>(last_day - first_day + 1);
  matrix.day_numbers.reserve(n_days);
  for (std::int64_t day = first_day; day <= last_day; ++day) {
    matrix.day_numbers.push_back(day);
  }
  matrix.cells.resize(n_days);
  for (const auto& [day, minute] : hits) {
    matrix.cells[static_cast<std::size_t>(day - first_day)].set(
        static_cast<std::size_t>(minute));
  }
  return matrix;
}

std::vector<int> active_minutes(const OccurrenceMatrix& matrix, int buffer_min) {
  std::vector<int> counts;
  counts.reserve(matrix.cells.size());
  for (const auto& day : matrix.cells) {
    std::bitset<kMinutesPerDay> active = day;
    std::bitset<kMinutesPerDay> shifted = day;
    // Bits shifted past minute 1439 drop out, which is the [0, 1439] clip.
    for (int i = 0; i < buffer_min && shifted.any(); ++i) {
      shifted <<= 1;
      active |= shifted;
    }
    counts.push_back(static_cast<int>(active.count()));
  }
  return counts;
}

std::string day_iso_date(std::int64_t day_number) {
  using namespace std::chrono;
  const year_month_day ymd{sys_days{days{day_number}}};
  char buf[16];
  std::snprintf(buf, sizeof(buf), "%04d-%02u-%02u", static_cast<int>(ymd.year()),
                static_cast<unsigned>(ymd.month()), static_cast<unsigned>(ymd.day()));
  return std::string(buf);
}

}  // namespace orchsim::analytics
