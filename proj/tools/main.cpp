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

#include <cstdint>
#include <cstdio>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "orchsim/cli/commands.hpp"
#include "orchsim/v2x/messages.hpp"

int main(int argc, char** argv) {
  CLI::App app{
      "Deterministic simulator and analysis toolkit for demand-driven "
      "orchestration of roadside perception infrastructure"};
  app.require_subcommand(1);

  int exit_code = orchsim::cli::kExitOk;

  std::string sim_scenario;
  std::optional<std::uint64_t> sim_seed;
  std::string sim_out = orchsim::cli::default_out_dir();
  CLI::App* simulate = app.add_subcommand(
      "simulate", "Run a scenario and write the event log plus latency breakdown");
  simulate->add_option("scenario_path", sim_scenario, "Scenario JSON file")->required();
  simulate->add_option("--seed", sim_seed, "Override the scenario seed");
  simulate->add_option("--out-dir,--out_dir", sim_out, "Output directory");
  simulate->callback([&] {
    exit_code = orchsim::cli::cmd_simulate(sim_scenario, sim_seed, sim_out);
  });

  std::string ana_recording;
  double ana_lat = 0.0;
  double ana_lon = 0.0;
  double ana_radius = 300.0;
  int ana_tz = 0;
  std::string ana_out = orchsim::cli::default_out_dir();
  CLI::App* analyze = app.add_subcommand(
      "analyze", "Classify routes and build the CAM occurrence matrix from a recording");
  analyze->add_option("recording_path", ana_recording, "CAM recording file")->required();
  analyze->add_option("--intersection-lat,--intersection_lat", ana_lat,
                      "Intersection latitude, degrees")->required();
  analyze->add_option("--intersection-lon,--intersection_lon", ana_lon,
                      "Intersection longitude, degrees")->required();
  analyze->add_option("--relevance-radius-m,--relevance_radius_m", ana_radius,
                      "Relevance radius around the intersection, meters");
  analyze->add_option("--timezone-offset-min,--timezone_offset_min", ana_tz,
                      "Minutes added to epoch time for local bucketing");
  analyze->add_option("--out-dir,--out_dir", ana_out, "Output directory");
  analyze->callback([&] {
    exit_code = orchsim::cli::cmd_analyze(ana_recording, ana_lat, ana_lon, ana_radius,
                                          ana_tz, ana_out);
  });

  double dim_speed = 0.0;
  double dim_e2e = 0.0;
  double dim_horizon = 0.0;
  double dim_max_range = 800.0;
  CLI::App* dimension = app.add_subcommand(
      "dimension-geofence", "Compute the geofence radius covering the reaction latency");
  dimension->add_option("--speed-kmh,--speed_kmh", dim_speed, "Vehicle speed, km/h")
      ->required();
  dimension->add_option("--e2e-s,--e2e_s", dim_e2e, "End-to-end latency, seconds")
      ->required();
  dimension->add_option("--planning-horizon-s,--planning_horizon_s", dim_horizon,
                        "Planning horizon, seconds");
  dimension->add_option("--max-range-m,--max_range_m", dim_max_range,
                        "Radio range the fence must fit in, meters");
  dimension->callback([&] {
    exit_code = orchsim::cli::cmd_dimension_geofence(dim_speed, dim_e2e, dim_horizon,
                                                     dim_max_range);
  });

  std::string en_recording;
  orchsim::cli::EnergyOptions en_options;
  std::optional<double> en_lat;
  std::optional<double> en_lon;
  std::string en_out = orchsim::cli::default_out_dir();
  CLI::App* energy = app.add_subcommand(
      "energy", "Estimate avoidable energy from a recording's demand pattern");
  energy->add_option("recording_path", en_recording, "CAM recording file")->required();
  energy->add_option("--power-w,--power_w", en_options.power_w,
                     "Extra power per perception unit, watts");
  energy->add_option("--units", en_options.units, "Number of perception units");
  energy->add_option("--buffer-min,--buffer_min", en_options.buffer_min,
                     "Minutes a unit stays active after a CAM occurrence");
  energy->add_option("--intersection-lat,--intersection_lat", en_lat,
                     "Intersection latitude; with --intersection-lon, restricts demand "
                     "to stations routed through it");
  energy->add_option("--intersection-lon,--intersection_lon", en_lon,
                     "Intersection longitude");
  energy->add_option("--relevance-radius-m,--relevance_radius_m",
                     en_options.relevance_radius_m, "Relevance radius, meters");
  energy->add_option("--timezone-offset-min,--timezone_offset_min",
                     en_options.timezone_offset_min,
                     "Minutes added to epoch time for local bucketing");
  energy->add_option("--extrapolate-units,--extrapolate_units",
                     en_options.extrapolate_units,
                     "Unit count for the extrapolated annual figure");
  energy->add_option("--out-dir,--out_dir", en_out, "Output directory");
  energy->callback([&] {
    if (en_lat.has_value() != en_lon.has_value()) {
      std::fprintf(stderr,
                   "error: --intersection-lat and --intersection-lon must be given "
                   "together\n");
      exit_code = orchsim::cli::kExitInvalidInput;
      return;
    }
    if (en_lat) {
      en_options.intersection = orchsim::v2x::make_position(*en_lat, *en_lon);
    }
    exit_code = orchsim::cli::cmd_energy(en_recording, en_options, en_out);
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? orchsim::cli::kExitOk : orchsim::cli::kExitInvalidInput;
  }
  return exit_code;
}
