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
#include <functional>
#include <istream>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <string_view>

#include "orchsim/v2x/messages.hpp"

namespace orchsim::io {

// One received CAM. A record is plausible only if it was received no earlier
// than one day before its generation timestamp; anything else is corrupt.
struct CamRecord {
  std::uint64_t received_epoch_ms = 0;
  std::string receiver_node;
  v2x::CamMessage cam;

  friend bool operator==(const CamRecord&, const CamRecord&) = default;
};

struct ParseSummary {
  std::uint64_t ok_count = 0;
  std::uint64_t rejected_count = 0;
  std::uint64_t first_error_line = 0;  // 1-based; 0 when nothing was rejected
};

// Line format, no header, LF endings:
// received_epoch_ms,receiver,station_id,generation_time_ms,lat_e7,lon_e7,speed_cms,heading_ddeg
std::optional<CamRecord> parse_cam_log_line(std::string_view line);

// Throws Error when the receiver name is empty or contains ',' or a newline.
std::string format_cam_log_line(const CamRecord& record);

// Streams valid records to sink in file order using O(1) memory. Malformed
// lines are counted, never fatal.
ParseSummary read_cam_log(std::istream& in,
                          const std::function<void(const CamRecord&)>& sink);

// Writes records in order, one line each; returns the row count. Throws Error
// when the sink fails.
std::uint64_t write_cam_log(std::span<const CamRecord> records, std::ostream& out);

}  // namespace orchsim::io
