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

#include <optional>
#include <variant>
#include <vector>

namespace orchsim::orch {

enum class Phase { kIdle, kDeploying, kActive, kTearingDown };

const char* to_string(Phase phase);

struct OrchestratorConfig {
  double idle_timeout_s = 60.0;
};

struct OrchestratorState {
  Phase phase = Phase::kIdle;
  double phase_since_ms = 0.0;
  std::optional<double> ready_at_ms;
  std::optional<double> last_demand_ms;
};

struct RequestEvent { double now_ms = 0.0; };
struct PipelineReadyEvent { double now_ms = 0.0; };
struct CamSeenEvent { double now_ms = 0.0; };
struct TickEvent { double now_ms = 0.0; };
using OrchEvent = std::variant<RequestEvent, PipelineReadyEvent, CamSeenEvent, TickEvent>;

struct DeployAction { double request_time_ms = 0.0; };
struct TeardownAction { double time_ms = 0.0; };
using OrchAction = std::variant<DeployAction, TeardownAction>;

// Advances the state machine along Idle -> Deploying -> Active ->
// TearingDown -> Idle. Teardown completes within the same step, so the
// post-teardown phase reads Idle. Requests while Deploying or Active are
// suppressed (demand refresh only).
std::vector<OrchAction> step(OrchestratorState& state, const OrchEvent& event,
                             const OrchestratorConfig& config);

}  // namespace orchsim::orch
