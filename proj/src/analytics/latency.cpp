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

#include "orchsim/analytics/latency.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <string>
#include <vector>

#include "orchsim/errors.hpp"
#include "orchsim/sim/engine.hpp"

namespace orchsim::analytics {

namespace {

const sim::SimEvent* find_first(const sim::EventLog& log, sim::EventKind kind) {
  for (const auto& event : log.events) {
    if (event.kind == kind) {
      return &event;
    }
  }
  return nullptr;
}

v2x::StationId parse_station(const std::string& payload) {
  const std::string prefix = "station=";
  if (payload.rfind(prefix, 0) != 0) {
    throw IncompleteRun("request event lacks a station payload: " + payload);
  }
  return v2x::StationId{
      static_cast<std::uint32_t>(std::stoul(payload.substr(prefix.size())))};
}

}  // namespace

LatencyBreakdown decompose(const sim::EventLog& log) {
  const auto* request = find_first(log, sim::EventKind::kRequestIssued);
  const auto* manager_done = find_first(log, sim::EventKind::kManagerDone);
  const auto* pipeline_ready = find_first(log, sim::EventKind::kPipelineReady);
  if (request == nullptr || manager_done == nullptr || pipeline_ready == nullptr) {
    throw IncompleteRun("log does not contain a completed deployment");
  }

  LatencyBreakdown breakdown;
  try {
    breakdown.end_to_end_s =
        sim::first_cpm_latency_s(log, parse_station(request->payload));
  } catch (const Error& e) {
    throw IncompleteRun(std::string("log lacks a full trigger-to-CPM cycle: ") +
                        e.what());
  }
  breakdown.manager_processing_s =
      (manager_done->node_local_ms - request->node_local_ms) / 1000.0;
  breakdown.deployment_s =
      (pipeline_ready->node_local_ms - manager_done->node_local_ms) / 1000.0;
  breakdown.other_s = breakdown.end_to_end_s - breakdown.manager_processing_s -
                      breakdown.deployment_s;
  return breakdown;
}

LatencyStats latency_stats(std::span<const double> samples_ms) {
  if (samples_ms.empty()) {
    throw EmptyInput("latency_stats: no samples");
  }
  std::vector<double> sorted(samples_ms.begin(), samples_ms.end());
  std::sort(sorted.begin(), sorted.end());

  LatencyStats stats;
  stats.min_ms = sorted.front();
  stats.max_ms = sorted.back();

  double sum = 0.0;
  for (const double v : sorted) sum += v;
  const double n = static_cast<double>(sorted.size());
  stats.mean_ms = sum / n;

  const std::size_t mid = sorted.size() / 2;
  stats.median_ms = sorted.size() % 2 == 1
                        ? sorted[mid]
                        : (sorted[mid - 1] + sorted[mid]) / 2.0;

  if (sorted.size() > 1) {
    double ss = 0.0;
    for (const double v : sorted) {
      const double d = v - stats.mean_ms;
      ss += d * d;
    }
    stats.std_ms = std::sqrt(ss / (n - 1.0));
  }
  return stats;
}

double geofence_distance_m(double speed_kmh, double e2e_s, double planning_horizon_s) {
  return (speed_kmh / 3.6) * (e2e_s + planning_horizon_s);
}

}  // namespace orchsim::analytics
