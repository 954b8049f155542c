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

#include "orchsim/cli/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <map>
#include <set>
#include <vector>

#include "orchsim/analytics/energy.hpp"
#include "orchsim/analytics/latency.hpp"
#include "orchsim/analytics/occurrence.hpp"
#include "orchsim/analytics/reports.hpp"
#include "orchsim/cli/scenario_loader.hpp"
#include "orchsim/errors.hpp"
#include "orchsim/geo/trajectory.hpp"
#include "orchsim/io/cam_log.hpp"
#include "orchsim/sim/engine.hpp"

namespace orchsim::cli {

namespace {

constexpr double kTrajectoryGapSplitS = 30.0;

void write_text_file(const std::filesystem::path& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  out << content;
  if (!out) {
    throw Error("cannot write '" + path.string() + "'");
  }
}

struct RecordingData {
  std::vector<v2x::CamMessage> cams;
  io::ParseSummary summary;
};

// Returns nullopt when the file cannot be opened.
std::optional<RecordingData> read_recording(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    return std::nullopt;
  }
  RecordingData data;
  data.summary = io::read_cam_log(
      in, [&data](const io::CamRecord& record) { data.cams.push_back(record.cam); });
  return data;
}

std::set<v2x::StationId> distinct_stations(std::span<const v2x::CamMessage> cams) {
  std::set<v2x::StationId> stations;
  for (const auto& cam : cams) {
    stations.insert(cam.station_id);
  }
  return stations;
}

// Stations with at least one trajectory classified as a real approach.
std::set<v2x::StationId> relevant_stations(std::span<const geo::Trajectory> trajectories,
                                           std::span<const geo::RouteClass> classes) {
  std::set<v2x::StationId> relevant;
  for (std::size_t i = 0; i < trajectories.size(); ++i) {
    if (classes[i] != geo::RouteClass::kIrrelevant) {
      relevant.insert(trajectories[i].station_id);
    }
  }
  return relevant;
}

}  // namespace

std::string default_out_dir() {
  if (const char* env = std::getenv("RSU_ORCHSIM_OUT"); env != nullptr && *env != '\0') {
    return env;
  }
  return "./out";
}

int cmd_simulate(const std::string& scenario_path,
                 std::optional<std::uint64_t> seed_override,
                 const std::string& out_dir) {
  try {
    sim::ScenarioConfig config = load_scenario_file(scenario_path);
    if (seed_override) {
      config.seed = *seed_override;
    }
    const sim::EventLog log = sim::run_scenario(config, config.seed);

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    sim::write_event_log(log, (dir / "event_log.tsv").string());

    std::vector<analytics::LatencyBreakdown> rows;
    try {
      rows.push_back(analytics::decompose(log));
    } catch (const IncompleteRun&) {
      // A run without a full trigger-to-CPM cycle is a valid outcome.
    }
    write_text_file(dir / "latency_breakdown.csv", analytics::latency_breakdown_csv(rows));
    write_text_file(dir / "latency_breakdown.txt", analytics::latency_breakdown_table(rows));

    std::printf("events=%zu\n", log.events.size());
    if (!rows.empty()) {
      std::printf("end_to_end_s=%.6f\n", rows[0].end_to_end_s);
    }
    return kExitOk;
  } catch (const InvalidScenario& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntimeError;
  }
}

int cmd_analyze(const std::string& recording_path, double intersection_lat,
                double intersection_lon, double relevance_radius_m,
                int timezone_offset_min, const std::string& out_dir) {
  try {
    if (relevance_radius_m <= 0.0) {
      std::fprintf(stderr, "error: relevance radius must be positive\n");
      return kExitInvalidInput;
    }
    const auto data = read_recording(recording_path);
    if (!data) {
      std::fprintf(stderr, "error: cannot read recording '%s'\n", recording_path.c_str());
      return kExitInvalidInput;
    }
    const v2x::GeoPosition intersection =
        v2x::make_position(intersection_lat, intersection_lon);

    const std::vector<geo::Trajectory> trajectories =
        geo::aggregate_trajectories(data->cams, kTrajectoryGapSplitS);
    std::vector<geo::RouteClass> classes;
    classes.reserve(trajectories.size());
    std::map<geo::RouteClass, int> counts;
    for (const auto& traj : trajectories) {
      const geo::RouteClass route =
          geo::classify_route(traj, intersection, relevance_radius_m);
      classes.push_back(route);
      ++counts[route];
    }

    const auto relevant = relevant_stations(trajectories, classes);
    const analytics::OccurrenceMatrix matrix =
        analytics::build_occurrence_matrix(data->cams, relevant, timezone_offset_min);

    const std::size_t station_count = distinct_stations(data->cams).size();

    std::filesystem::create_directories(out_dir);
    const std::filesystem::path dir(out_dir);
    write_text_file(dir / "route_classes.csv", analytics::route_class_counts_csv(counts));
    write_text_file(dir / "occurrence_matrix.csv", analytics::occurrence_matrix_csv(matrix));

    char summary[256];
    std::snprintf(summary, sizeof(summary),
                  "ok_count=%llu\nrejected_count=%llu\nfirst_error_line=%llu\n"
                  "distinct_stations=%zu\n",
                  static_cast<unsigned long long>(data->summary.ok_count),
                  static_cast<unsigned long long>(data->summary.rejected_count),
                  static_cast<unsigned long long>(data->summary.first_error_line),
                  station_count);
    write_text_file(dir / "parse_summary.txt", summary);

    std::printf("%s", summary);
    return kExitOk;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntimeError;
  }
}

int cmd_dimension_geofence(double speed_kmh, double e2e_s,
                           double planning_horizon_s, double max_range_m) {
  if (speed_kmh <= 0.0) {
    std::fprintf(stderr, "error: speed must be positive\n");
    return kExitInvalidInput;
  }
  const double distance_m =
      analytics::geofence_distance_m(speed_kmh, e2e_s, planning_horizon_s);
  std::printf("distance_m=%.6f\n", distance_m);
  std::printf("max_range_m=%.6f\n", max_range_m);
  std::printf("status=%s\n", distance_m <= max_range_m ? "PASS" : "FAIL");
  return kExitOk;
}

int cmd_energy(const std::string& recording_path, const EnergyOptions& options,
               const std::string& out_dir) {
  try {
    const auto data = read_recording(recording_path);
    if (!data) {
      std::fprintf(stderr, "error: cannot read recording '%s'\n", recording_path.c_str());
      return kExitInvalidInput;
    }

    std::set<v2x::StationId> relevant;
    if (options.intersection) {
      const std::vector<geo::Trajectory> trajectories =
          geo::aggregate_trajectories(data->cams, kTrajectoryGapSplitS);
      std::vector<geo::RouteClass> classes;
      classes.reserve(trajectories.size());
      for (const auto& traj : trajectories) {
        classes.push_back(geo::classify_route(traj, *options.intersection,
                                              options.relevance_radius_m));
      }
      relevant = relevant_stations(trajectories, classes);
    } else {
      relevant = distinct_stations(data->cams);
    }

    analytics::OccurrenceMatrix matrix = analytics::build_occurrence_matrix(
        data->cams, relevant, options.timezone_offset_min);
    if (matrix.cells.empty()) {
      // No demand at all: account one fully idle day.
      matrix.day_numbers.push_back(0);
      matrix.cells.emplace_back();
    }

    analytics::EnergyModel model;
    model.extra_power_per_unit_w = options.power_w;
    model.n_units = options.units;
    model.buffer_min = options.buffer_min;
    const analytics::EnergyReport report = analytics::energy_report(matrix, model);
    const std::string text =
        analytics::energy_report_text(report, options.extrapolate_units);

    std::filesystem::create_directories(out_dir);
    write_text_file(std::filesystem::path(out_dir) / "energy_report.txt", text);
    std::printf("%s", text.c_str());
    return kExitOk;
  } catch (const InvalidScenario& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitInvalidInput;
  } catch (const std::exception& e) {
    std::fprintf(stderr, "error: %s\n", e.what());
    return kExitRuntimeError;
  }
}

}  // namespace orchsim::cli
