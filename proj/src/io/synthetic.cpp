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

#include "orchsim/io/synthetic.hpp"

#include <cmath>
#include <random>

#include "orchsim/geo/geodesy.hpp"

namespace orchsim::io {

namespace {

constexpr std::int64_t kMsPerMinute = 60'000;
constexpr std::int64_t kMsPerDay = 86'400'000;
constexpr int kBlocksPerDay = 15;
constexpr int kIdleStations = 609;
constexpr double kSpeedMs = 50.0 / 3.6;
constexpr std::uint16_t kSpeedCms = 1389;
constexpr std::uint64_t kReceiveLagMs = 15;
constexpr const char* kReceiver = "rsu-4";

bool is_long_block(int block) { return block == 3 || block == 8 || block == 12; }

// A vehicle drives a straight line through the intersection, entering from
// approach_bearing_deg. Offset is signed along that axis, positive on the
// approach side.
v2x::GeoPosition line_position(const v2x::GeoPosition& intersection,
                               double approach_bearing_deg, double offset_m) {
  if (offset_m >= 0.0) {
    return geo::destination(intersection, approach_bearing_deg, offset_m);
  }
  return geo::destination(intersection, approach_bearing_deg + 180.0, -offset_m);
}

}  // namespace

std::vector<CamRecord> generate_cam_log(const SyntheticLogSpec& spec) {
  std::mt19937_64 rng(spec.seed);
  std::uniform_int_distribution<int> jitter(0, 30);

  std::vector<CamRecord> records;
  records.reserve(static_cast<std::size_t>(spec.days) * 7320 + 18370);

  // Passing vehicles: one fresh station per (day, block), approach direction
  // cycling north, east, south, west.
  for (int day = 0; day < spec.days; ++day) {
    const std::int64_t day_local_ms =
        (spec.start_day_epoch + day) * kMsPerDay;
    for (int block = 0; block < kBlocksPerDay; ++block) {
      const std::uint32_t station =
          1 + static_cast<std::uint32_t>(day * kBlocksPerDay + block);
      const bool long_block = is_long_block(block);
      const int base_minute = 420 + block * 56 + jitter(rng);
      const int start_second = long_block ? 35 : 10;
      const int n_rows = long_block ? 840 : 400;
      const double approach_bearing =
          90.0 * static_cast<double>((day * kBlocksPerDay + block) % 4);
      const double travel_bearing = std::fmod(approach_bearing + 180.0, 360.0);
      const auto heading_ddeg = static_cast<std::uint16_t>(
          std::lround(travel_bearing * 10.0) % 3600);
      const double start_offset_m =
          kSpeedMs * (static_cast<double>(n_rows - 1) * 0.1) / 2.0;

      for (int k = 0; k < n_rows; ++k) {
        const double t_s = static_cast<double>(k) * 0.1;
        const std::int64_t local_ms = day_local_ms +
                                      static_cast<std::int64_t>(base_minute) * kMsPerMinute +
                                      start_second * 1000 + k * 100;
        CamRecord record;
        record.cam.station_id = v2x::StationId{station};
        record.cam.generation_time_ms = static_cast<std::uint64_t>(
            local_ms - static_cast<std::int64_t>(spec.timezone_offset_min) * kMsPerMinute);
        record.cam.position = line_position(spec.intersection, approach_bearing,
                                            start_offset_m - kSpeedMs * t_s);
        record.cam.speed_cms = kSpeedCms;
        record.cam.heading_ddeg = heading_ddeg;
        record.received_epoch_ms = record.cam.generation_time_ms + kReceiveLagMs;
        record.receiver_node = kReceiver;
        records.push_back(std::move(record));
      }
    }
  }

  // Idle stations parked well outside any plausible relevance radius. The
  // first 100 emit 31 rows, the rest 30, which lands the expected totals.
  const std::uint32_t idle_base =
      1 + static_cast<std::uint32_t>(spec.days * kBlocksPerDay);
  for (int idx = 0; idx < kIdleStations; ++idx) {
    const std::uint32_t station = idle_base + static_cast<std::uint32_t>(idx);
    const int n_rows = idx < 100 ? 31 : 30;
    const v2x::GeoPosition parked =
        geo::destination(spec.intersection, 90.0, 2500.0 + static_cast<double>(idx));
    const std::int64_t day_local_ms =
        (spec.start_day_epoch + idx % spec.days) * kMsPerDay;
    const std::int64_t first_ms =
        day_local_ms + (60 + idx % 180) * kMsPerMinute + (idx % 60) * 1000;
    for (int j = 0; j < n_rows; ++j) {
      CamRecord record;
      record.cam.station_id = v2x::StationId{station};
      record.cam.generation_time_ms = static_cast<std::uint64_t>(
          first_ms + j * 1000 -
          static_cast<std::int64_t>(spec.timezone_offset_min) * kMsPerMinute);
      record.cam.position = parked;
      record.cam.speed_cms = 0;
      record.cam.heading_ddeg = 0;
      record.received_epoch_ms = record.cam.generation_time_ms + kReceiveLagMs;
      record.receiver_node = kReceiver;
      records.push_back(std::move(record));
    }
  }

  return records;
}

}  // namespace orchsim::io
