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

#include "orchsim/analytics/energy.hpp"

#include "orchsim/errors.hpp"

namespace orchsim::analytics {

EnergyReport energy_report(const OccurrenceMatrix& matrix, const EnergyModel& model) {
  if (model.n_units < 1) {
    throw InvalidScenario("energy model: n_units must be >= 1");
  }
  if (model.extra_power_per_unit_w < 0.0) {
    throw InvalidScenario("energy model: extra_power_per_unit_w must be >= 0");
  }
  if (model.buffer_min < 0) {
    throw InvalidScenario("energy model: buffer_min must be >= 0");
  }
  if (matrix.cells.empty()) {
    throw EmptyInput("energy report: occurrence matrix covers zero days");
  }

  const std::vector<int> active = active_minutes(matrix, model.buffer_min);
  double active_sum = 0.0;
  for (const int count : active) active_sum += count;

  EnergyReport report;
  report.n_units = model.n_units;
  report.active_min_per_day = active_sum / static_cast<double>(active.size());
  report.inactive_min_per_day = kMinutesPerDay - report.active_min_per_day;
  const double wh_per_minute =
      model.extra_power_per_unit_w * static_cast<double>(model.n_units) / 60.0;
  report.avoidable_wh_per_day = report.inactive_min_per_day * wh_per_minute;
  report.avoidable_kwh_per_year = report.avoidable_wh_per_day * 365.0 / 1000.0;
  return report;
}

}  // namespace orchsim::analytics
