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

#include "orchsim/io/cam_log.hpp"

#include <array>
#include <charconv>
#include <cinttypes>
#include <cstdio>

#include "orchsim/errors.hpp"

namespace orchsim::io {

namespace {

constexpr std::uint64_t kMaxReceiveLagMs = 86'400'000;

template <typename T>
bool parse_number(std::string_view field, T& out) {
  if (field.empty()) {
    return false;
  }
  const auto [ptr, ec] =
      std::from_chars(field.data(), field.data() + field.size(), out);
  return ec == std::errc{} && ptr == field.data() + field.size();
}

bool split_fields(std::string_view line, std::array<std::string_view, 8>& fields) {
  std::size_t count = 0;
  std::size_t start = 0;
  while (true) {
    const std::size_t comma = line.find(',', start);
    if (count == fields.size()) {
      return false;
    }
    fields[count++] = comma == std::string_view::npos
                          ? line.substr(start)
                          : line.substr(start, comma - start);
    if (comma == std::string_view::npos) {
      break;
    }
    start = comma + 1;
  }
  return count == fields.size();
}

}  // namespace

std::optional<CamRecord> parse_cam_log_line(std::string_view line) {
  if (!line.empty() && line.back() == '\r') {
    line.remove_suffix(1);
  }
  std::array<std::string_view, 8> fields;
  if (!split_fields(line, fields)) {
    return std::nullopt;
  }

  CamRecord record;
  std::uint16_t speed = 0;
  std::uint16_t heading = 0;
  if (!parse_number(fields[0], record.received_epoch_ms) || fields[1].empty() ||
      !parse_number(fields[2], record.cam.station_id.value) ||
      !parse_number(fields[3], record.cam.generation_time_ms) ||
      !parse_number(fields[4], record.cam.position.latitude_e7) ||
      !parse_number(fields[5], record.cam.position.longitude_e7) ||
      !parse_number(fields[6], speed) || !parse_number(fields[7], heading)) {
    return std::nullopt;
  }
  record.receiver_node = std::string(fields[1]);
  record.cam.speed_cms = speed;
  record.cam.heading_ddeg = heading;

  try {
    v2x::validate(record.cam);
  } catch (const MalformedMessage&) {
    return std::nullopt;
  }
  if (record.received_epoch_ms + kMaxReceiveLagMs < record.cam.generation_time_ms) {
    return std::nullopt;
  }
  return record;
}

std::string format_cam_log_line(const CamRecord& record) {
  if (record.receiver_node.empty() ||
      record.receiver_node.find_first_of(",\r\n") != std::string::npos) {
    throw Error("cam log: receiver name must be non-empty and free of ',' and newlines");
  }
  char buf[192];
  std::snprintf(buf, sizeof(buf),
                "%" PRIu64 ",%s,%" PRIu32 ",%" PRIu64 ",%" PRId32 ",%" PRId32
                ",%u,%u",
                record.received_epoch_ms, record.receiver_node.c_str(),
                record.cam.station_id.value, record.cam.generation_time_ms,
                record.cam.position.latitude_e7, record.cam.position.longitude_e7,
                record.cam.speed_cms, record.cam.heading_ddeg);
  return std::string(buf);
}

ParseSummary read_cam_log(std::istream& in,
                          const std::function<void(const CamRecord&)>& sink) {
  ParseSummary summary;
  std::string line;
  std::uint64_t line_number = 0;
  while (std::getline(in, line)) {
    ++line_number;
    if (auto record = parse_cam_log_line(line)) {
      ++summary.ok_count;
      sink(*record);
    } else {
      ++summary.rejected_count;
      if (summary.first_error_line == 0) {
        summary.first_error_line = line_number;
      }
    }
  }
  return summary;
}

std::uint64_t write_cam_log(std::span<const CamRecord> records, std::ostream& out) {
  std::uint64_t count = 0;
  for (const auto& record : records) {
    out << format_cam_log_line(record) << '\n';
    if (!out) {
      throw Error("cam log: write failed");
    }
    ++count;
  }
  return count;
}

}  // namespace orchsim::io
