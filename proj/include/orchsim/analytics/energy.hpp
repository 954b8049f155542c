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

#include "orchsim/analytics/occurrence.hpp"

namespace orchsim::analytics {

// Demand-driven operation keeps the perception units powered only during
// active minutes; every inactive minute avoids extra_power_per_unit_w per unit.
struct EnergyModel {
  double extra_power_per_unit_w = 45.0;
  int n_units = 4;
  int buffer_min = 1;
};

struct EnergyReport {
  double active_min_per_day = 0.0;
  double inactive_min_per_day = 0.0;
  double avoidable_wh_per_day = 0.0;
  double avoidable_kwh_per_year = 0.0;
  int n_units = 1;

  // Scales the annual figure to a fleet of n units under identical traffic.
  double extrapolated_kwh_per_year(int n) const {
    return avoidable_kwh_per_year * static_cast<double>(n) /
           static_cast<double>(n_units);
  }
};

// Averages active minutes over the matrix days and prices each inactive
// minute at extra_power_per_unit_w * n_units / 60 Wh. Throws EmptyInput when
// the matrix covers zero days, InvalidScenario on a non-positive unit count
// or negative parameters.
EnergyReport energy_report(const OccurrenceMatrix& matrix, const EnergyModel& model);

}  // namespace orchsim::analytics
