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

#include <map>
#include <span>
#include <string>

#include "orchsim/analytics/energy.hpp"
#include "orchsim/analytics/latency.hpp"
#include "orchsim/analytics/occurrence.hpp"
#include "orchsim/geo/trajectory.hpp"

namespace orchsim::analytics {

struct LabeledStats {
  std::string label;
  LatencyStats stats;
};

// CSV with header end_to_end_s,manager_processing_s,deployment_s,other_s and
// one %.6f row per breakdown.
std::string latency_breakdown_csv(std::span<const LatencyBreakdown> rows);

// Fixed-width text table of the same columns.
std::string latency_breakdown_table(std::span<const LatencyBreakdown> rows);

// CSV with header label,mean_ms,median_ms,std_ms,min_ms,max_ms.
std::string latency_stats_csv(std::span<const LabeledStats> rows);

// Fixed-width text table of the same columns.
std::string latency_stats_table(std::span<const LabeledStats> rows);

// One row per day: ISO date followed by 1440 comma-separated 0/1 cells.
std::string occurrence_matrix_csv(const OccurrenceMatrix& matrix);

// CSV with header route_class,count covering every route class.
std::string route_class_counts_csv(const std::map<geo::RouteClass, int>& counts);

// Key=value lines, including the extrapolation for extrapolate_units.
std::string energy_report_text(const EnergyReport& report, int extrapolate_units);

}  // namespace orchsim::analytics
