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

#include "orchsim/orch/deployment.hpp"

#include <algorithm>
#include <set>

#include "orchsim/errors.hpp"

namespace orchsim::orch {

namespace {

std::map<std::string, const ServiceSpec*> index_services(const DeploymentPlan& plan) {
  std::map<std::string, const ServiceSpec*> by_name;
  for (const auto& service : plan.services) {
    if (!by_name.emplace(service.name, &service).second) {
      throw InvalidScenario("plan: duplicate service name '" + service.name + "'");
    }
  }
  return by_name;
}

enum class Mark { kUnvisited, kInProgress, kDone };

void check_acyclic(const std::string& name,
                   const std::map<std::string, const ServiceSpec*>& by_name,
                   std::map<std::string, Mark>& marks) {
  Mark& mark = marks[name];
  if (mark == Mark::kDone) return;
  if (mark == Mark::kInProgress) {
    throw CyclicDependency("plan: dependency cycle through service '" + name + "'");
  }
  mark = Mark::kInProgress;
  for (const auto& dep : by_name.at(name)->inputs) {
    check_acyclic(dep, by_name, marks);
  }
  mark = Mark::kDone;
}

double own_duration_s(const ServiceSpec& service) {
  double sum = 0.0;
  for (const auto& stage : service.stages) {
    sum += stage.duration_s;
  }
  return sum;
}

double usable_offset_s(const std::string& name,
                       const std::map<std::string, const ServiceSpec*>& by_name,
                       std::map<std::string, double>& memo) {
  const auto it = memo.find(name);
  if (it != memo.end()) return it->second;
  const ServiceSpec& service = *by_name.at(name);
  double usable = own_duration_s(service);
  for (const auto& dep : service.inputs) {
    usable = std::max(usable, usable_offset_s(dep, by_name, memo));
  }
  memo[name] = usable;
  return usable;
}

}  // namespace

void validate(const DeploymentPlan& plan) {
  if (plan.manager_processing_s < 0.0) {
    throw InvalidScenario("plan.manager_processing_s: must be >= 0");
  }
  const auto by_name = index_services(plan);
  if (by_name.find(plan.sink_service) == by_name.end()) {
    throw InvalidScenario("plan.sink_service: no service named '" + plan.sink_service + "'");
  }
  for (const auto& service : plan.services) {
    for (const auto& stage : service.stages) {
      if (stage.duration_s < 0.0) {
        throw InvalidScenario("plan: service '" + service.name + "' stage '" +
                              stage.label + "' has negative duration");
      }
    }
    std::set<std::string> seen;
    for (const auto& dep : service.inputs) {
      if (by_name.find(dep) == by_name.end()) {
        throw InvalidScenario("plan: service '" + service.name +
                              "' requires unknown service '" + dep + "'");
      }
      if (!seen.insert(dep).second) {
        throw InvalidScenario("plan: service '" + service.name +
                              "' lists dependency '" + dep + "' twice");
      }
    }
  }
  std::map<std::string, Mark> marks;
  for (const auto& service : plan.services) {
    check_acyclic(service.name, by_name, marks);
  }
}

ReadyTimes ready_time(const DeploymentPlan& plan, double request_time_s) {
  validate(plan);
  const auto by_name = index_services(plan);
  const double deploy_start_s = request_time_s + plan.manager_processing_s;

  ReadyTimes times;
  std::map<std::string, double> usable_memo;
  for (const auto& service : plan.services) {
    times.service_ready_s[service.name] = deploy_start_s + own_duration_s(service);
    times.usable_s[service.name] =
        deploy_start_s + usable_offset_s(service.name, by_name, usable_memo);
  }
  times.pipeline_ready_s = times.usable_s.at(plan.sink_service);
  return times;
}

double critical_path_s(const DeploymentPlan& plan) {
  const ReadyTimes times = ready_time(plan, 0.0);
  return times.pipeline_ready_s - plan.manager_processing_s;
}

}  // namespace orchsim::orch
