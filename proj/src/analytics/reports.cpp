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

#include "orchsim/analytics/reports.hpp"

#include <array>
#include <cstdio>

namespace orchsim::analytics {

namespace {

std::string fmt(const char* format, double value) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), format, value);
  return std::string(buf);
}

}  // namespace

std::string latency_breakdown_csv(std::span<const LatencyBreakdown> rows) {
  std::string out = "end_to_end_s,manager_processing_s,deployment_s,other_s\n";
  for (const auto& row : rows) {
    char buf[160];
    std::snprintf(buf, sizeof(buf), "%.6f,%.6f,%.6f,%.6f\n", row.end_to_end_s,
                  row.manager_processing_s, row.deployment_s, row.other_s);
    out += buf;
  }
  return out;
}

std::string latency_breakdown_table(std::span<const LatencyBreakdown> rows) {
  std::string out;
  char buf[200];
  std::snprintf(buf, sizeof(buf), "%-6s %14s %22s %14s %10s\n", "run",
                "end_to_end_s", "manager_processing_s", "deployment_s", "other_s");
  out += buf;
  int run = 1;
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%-6d %14.6f %22.6f %14.6f %10.6f\n", run++,
                  row.end_to_end_s, row.manager_processing_s, row.deployment_s,
                  row.other_s);
    out += buf;
  }
  return out;
}

std::string latency_stats_csv(std::span<const LabeledStats> rows) {
  std::string out = "label,mean_ms,median_ms,std_ms,min_ms,max_ms\n";
  for (const auto& row : rows) {
    char buf[200];
    std::snprintf(buf, sizeof(buf), "%s,%.6f,%.6f,%.6f,%.6f,%.6f\n",
                  row.label.c_str(), row.stats.mean_ms, row.stats.median_ms,
                  row.stats.std_ms, row.stats.min_ms, row.stats.max_ms);
    out += buf;
  }
  return out;
}

std::string latency_stats_table(std::span<const LabeledStats> rows) {
  std::string out;
  char buf[240];
  std::snprintf(buf, sizeof(buf), "%-16s %10s %10s %10s %10s %10s\n", "label",
                "mean_ms", "median_ms", "std_ms", "min_ms", "max_ms");
  out += buf;
  for (const auto& row : rows) {
    std::snprintf(buf, sizeof(buf), "%-16s %10.3f %10.3f %10.3f %10.3f %10.3f\n",
                  row.label.c_str(), row.stats.mean_ms, row.stats.median_ms,
                  row.stats.std_ms, row.stats.min_ms, row.stats.max_ms);
    out += buf;
  }
  return out;
}

std::string occurrence_matrix_csv(const OccurrenceMatrix& matrix) {
  std::string out;
  out.reserve(matrix.cells.size() * (kMinutesPerDay * 2 + 12));
  for (std::size_t d = 0; d < matrix.cells.size(); ++d) {
    out += day_iso_date(matrix.day_numbers[d]);
    const auto& day = matrix.cells[d];
    for (int m = 0; m < kMinutesPerDay; ++m) {
      out += day.test(static_cast<std::size_t>(m)) ? ",1" : ",0";
    }
    out += '\n';
  }
  return out;
}

std::string route_class_counts_csv(const std::map<geo::RouteClass, int>& counts) {
  constexpr std::array<geo::RouteClass, 5> kClasses = {
      geo::RouteClass::kFromNorth, geo::RouteClass::kFromEast,
      geo::RouteClass::kFromSouth, geo::RouteClass::kFromWest,
      geo::RouteClass::kIrrelevant};
  std::string out = "route_class,count\n";
  for (const geo::RouteClass route : kClasses) {
    const auto it = counts.find(route);
    const int count = it == counts.end() ? 0 : it->second;
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%s,%d\n", geo::to_string(route), count);
    out += buf;
  }
  return out;
}

std::string energy_report_text(const EnergyReport& report, int extrapolate_units) {
  std::string out;
  out += "active_min_per_day=" + fmt("%.6f", report.active_min_per_day) + "\n";
  out += "inactive_min_per_day=" + fmt("%.6f", report.inactive_min_per_day) + "\n";
  out += "avoidable_wh_per_day=" + fmt("%.6f", report.avoidable_wh_per_day) + "\n";
  out += "avoidable_kwh_per_year=" + fmt("%.6f", report.avoidable_kwh_per_year) + "\n";
  char buf[64];
  std::snprintf(buf, sizeof(buf), "n_units=%d\n", report.n_units);
  out += buf;
  std::snprintf(buf, sizeof(buf), "extrapolated_units=%d\n", extrapolate_units);
  out += buf;
  out += "extrapolated_kwh_per_year=" +
         fmt("%.6f", report.extrapolated_kwh_per_year(extrapolate_units)) + "\n";
  return out;
}

}  // namespace orchsim::analytics
