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
#include <string>
#include <vector>

namespace orchsim::orch {

struct ServiceStage {
  std::string label;
  double duration_s = 0.0;
};

struct ServiceSpec {
  std::string name;
  std::string node;
  std::vector<ServiceStage> stages;
  // Services whose output this one consumes. Dataflow dependency only;
  // all pods start in parallel at deploy start.
  std::vector<std::string> inputs;
};

struct DeploymentPlan {
  std::vector<ServiceSpec> services;
  double manager_processing_s = 0.0;
  std::string sink_service;
};

// Throws CyclicDependency on dependency cycles, InvalidScenario on
// duplicate or unknown service names, missing sink or negative durations.
void validate(const DeploymentPlan& plan);

struct ReadyTimes {
  double pipeline_ready_s = 0.0;
  // Own stages complete (pods start in parallel at deploy start).
  std::map<std::string, double> service_ready_s;
  // Output usable: max of own readiness and all input services' usable times.
  std::map<std::string, double> usable_s;
};

ReadyTimes ready_time(const DeploymentPlan& plan, double request_time_s);

// pipeline_ready minus deploy start; the reported deployment latency.
double critical_path_s(const DeploymentPlan& plan);

}  // namespace orchsim::orch
