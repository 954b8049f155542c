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

#include "orchsim/sim/event_log.hpp"

#include <cstdio>
#include <fstream>

#include "orchsim/errors.hpp"

namespace orchsim::sim {

const char* to_string(EventKind kind) {
  switch (kind) {
    case EventKind::kCamGenerated: return "CamGenerated";
    case EventKind::kCamDelivered: return "CamDelivered";
    case EventKind::kRequestIssued: return "RequestIssued";
    case EventKind::kManagerDone: return "ManagerDone";
    case EventKind::kPodCreated: return "PodCreated";
    case EventKind::kStageCompleted: return "StageCompleted";
    case EventKind::kPipelineReady: return "PipelineReady";
    case EventKind::kObjectListSent: return "ObjectListSent";
    case EventKind::kObjectListDelivered: return "ObjectListDelivered";
    case EventKind::kFusionDone: return "FusionDone";
    case EventKind::kCpmBroadcast: return "CpmBroadcast";
    case EventKind::kCpmDelivered: return "CpmDelivered";
    case EventKind::kTeardown: return "Teardown";
  }
  return "CamGenerated";
}

std::string format_event(const SimEvent& event) {
  char times[80];
  std::snprintf(times, sizeof(times), "%.6f\t%llu\t", event.time_true_ms,
                static_cast<unsigned long long>(event.seq));
  std::string line(times);
  line += to_string(event.kind);
  line += '\t';
  line += event.node;
  std::snprintf(times, sizeof(times), "\t%.6f\t", event.node_local_ms);
  line += times;
  line += event.payload.empty() ? "-" : event.payload;
  line += '\t';
  if (event.causation_seq < 0) {
    line += '-';
  } else {
    line += std::to_string(event.causation_seq);
  }
  return line;
}

std::string serialize(const EventLog& log) {
  std::string out;
  for (const auto& event : log.events) {
    out += format_event(event);
    out += '\n';
  }
  return out;
}

void write_event_log(const EventLog& log, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) {
    throw Error("cannot open event log for writing: " + path);
  }
  out << serialize(log);
  if (!out) {
    throw Error("write failed for event log: " + path);
  }
}

}  // namespace orchsim::sim
