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

#include <string>

#include "orchsim/sim/scenario.hpp"

namespace orchsim::cli {

// Parses a scenario from JSON text. Unknown keys, wrong types, and missing
// required fields throw InvalidScenario with a field path such as
// "scenario.channel.cam_latency.mean_ms".
sim::ScenarioConfig load_scenario(const std::string& json_text);

// Reads and parses a scenario file; unreadable files throw InvalidScenario.
sim::ScenarioConfig load_scenario_file(const std::string& path);

}  // namespace orchsim::cli
