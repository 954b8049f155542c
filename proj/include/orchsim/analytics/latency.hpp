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

#include <span>

#include "orchsim/sim/event_log.hpp"

namespace orchsim::analytics {

// End-to-end latency split; other_s is the remainder, so the three
// components sum to end_to_end_s exactly.
struct LatencyBreakdown {
  double end_to_end_s = 0.0;
  double manager_processing_s = 0.0;
  double deployment_s = 0.0;
  double other_s = 0.0;
};

// End-to-end from the vehicle clock; manager processing between
// RequestIssued and ManagerDone on the server clock; deployment between
// ManagerDone (server clock) and PipelineReady (sink node clock).
// Throws IncompleteRun when the log lacks a full trigger-to-CPM cycle.
LatencyBreakdown decompose(const sim::EventLog& log);

struct LatencyStats {
  double mean_ms = 0.0;
  double median_ms = 0.0;
  double std_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
};

// Sample standard deviation (n-1 denominator, 0 for a single sample);
// median averages the two middle elements for even n. Throws EmptyInput.
LatencyStats latency_stats(std::span<const double> samples_ms);

// Distance covered at speed_kmh during e2e_s plus planning_horizon_s.
double geofence_distance_m(double speed_kmh, double e2e_s, double planning_horizon_s);

}  // namespace orchsim::analytics
