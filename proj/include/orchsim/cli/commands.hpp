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
#include <optional>
#include <string>

#include "orchsim/v2x/messages.hpp"

namespace orchsim::cli {

// Exit codes shared by all commands: 0 success, 2 input or validation error,
// 3 internal error.
inline constexpr int kExitOk = 0;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitRuntimeError = 3;

// $RSU_ORCHSIM_OUT when set, else "./out".
std::string default_out_dir();

// Runs a scenario and writes event_log.tsv, latency_breakdown.csv, and
// latency_breakdown.txt to out_dir. A run with no completed trigger-to-CPM
// cycle still succeeds and writes a header-only breakdown.
int cmd_simulate(const std::string& scenario_path,
                 std::optional<std::uint64_t> seed_override,
                 const std::string& out_dir);

// Reads a CAM recording, classifies per-station routes against the
// intersection, and writes route_classes.csv, occurrence_matrix.csv, and
// parse_summary.txt to out_dir. Prints the distinct station count.
int cmd_analyze(const std::string& recording_path, double intersection_lat,
                double intersection_lon, double relevance_radius_m,
                int timezone_offset_min, const std::string& out_dir);

// Prints the geofence radius needed to cover the end-to-end latency plus a
// planning horizon at the given speed, and PASS/FAIL against max_range_m.
int cmd_dimension_geofence(double speed_kmh, double e2e_s,
                           double planning_horizon_s, double max_range_m);

struct EnergyOptions {
  double power_w = 45.0;
  int units = 4;
  int buffer_min = 1;
  // When unset every station counts as relevant demand.
  std::optional<v2x::GeoPosition> intersection;
  double relevance_radius_m = 300.0;
  int timezone_offset_min = 0;
  int extrapolate_units = 100;
};

// Builds the occurrence matrix from a recording and writes energy_report.txt
// to out_dir. An empty recording is treated as one fully idle day.
int cmd_energy(const std::string& recording_path, const EnergyOptions& options,
               const std::string& out_dir);

}  // namespace orchsim::cli
