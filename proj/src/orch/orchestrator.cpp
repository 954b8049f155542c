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

#include "orchsim/orch/orchestrator.hpp"

namespace orchsim::orch {

const char* to_string(Phase phase) {
  switch (phase) {
    case Phase::kIdle: return "Idle";
    case Phase::kDeploying: return "Deploying";
    case Phase::kActive: return "Active";
    case Phase::kTearingDown: return "TearingDown";
  }
  return "Idle";
}

std::vector<OrchAction> step(OrchestratorState& state, const OrchEvent& event,
                             const OrchestratorConfig& config) {
  std::vector<OrchAction> actions;

  if (const auto* request = std::get_if<RequestEvent>(&event)) {
    state.last_demand_ms = request->now_ms;
    if (state.phase == Phase::kIdle) {
      state.phase = Phase::kDeploying;
      state.phase_since_ms = request->now_ms;
      state.ready_at_ms.reset();
      actions.push_back(DeployAction{request->now_ms});
    }
    return actions;
  }

  if (const auto* ready = std::get_if<PipelineReadyEvent>(&event)) {
    if (state.phase == Phase::kDeploying) {
      state.phase = Phase::kActive;
      state.phase_since_ms = ready->now_ms;
      state.ready_at_ms = ready->now_ms;
    }
    return actions;
  }

  if (const auto* cam = std::get_if<CamSeenEvent>(&event)) {
    if (state.phase == Phase::kDeploying || state.phase == Phase::kActive) {
      state.last_demand_ms = cam->now_ms;
    }
    return actions;
  }

  const auto& tick = std::get<TickEvent>(event);
  if (state.phase == Phase::kActive && state.last_demand_ms.has_value() &&
      tick.now_ms - *state.last_demand_ms > config.idle_timeout_s * 1000.0) {
    // Passes through TearingDown; teardown itself is instantaneous.
    state.phase = Phase::kTearingDown;
    actions.push_back(TeardownAction{tick.now_ms});
    state.phase = Phase::kIdle;
    state.phase_since_ms = tick.now_ms;
    state.ready_at_ms.reset();
    state.last_demand_ms.reset();
  }
  return actions;
}

}  // namespace orchsim::orch
