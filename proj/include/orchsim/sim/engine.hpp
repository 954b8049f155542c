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

#include "orchsim/sim/event_log.hpp"
#include "orchsim/sim/scenario.hpp"

namespace orchsim::sim {

// Epoch anchor for message timestamps: 2026-01-01T00:00:00Z. Simulation
// true time 0 maps to this instant; event-log times stay run-relative.
inline constexpr std::uint64_t kSimEpochMs = 1767225600000ull;

// Runs the scenario to end_time_s. Identical (config, seed) pairs produce
// identical logs. Throws InvalidScenario when the config does not validate.
EventLog run_scenario(const ScenarioConfig& config, std::uint64_t seed);

// Vehicle-clock time from the first delivered CAM's generation to the
// first CPM arrival, in seconds. Clock offsets cancel since both stamps
// are read at the vehicle. Throws NoCamDelivered / NoCpmReceived.
double first_cpm_latency_s(const EventLog& log, v2x::StationId station);

}  // namespace orchsim::sim
