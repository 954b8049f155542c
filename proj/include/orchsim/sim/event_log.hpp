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
#include <string>
#include <vector>

namespace orchsim::sim {

enum class EventKind {
  kCamGenerated,
  kCamDelivered,
  kRequestIssued,
  kManagerDone,
  kPodCreated,
  kStageCompleted,
  kPipelineReady,
  kObjectListSent,
  kObjectListDelivered,
  kFusionDone,
  kCpmBroadcast,
  kCpmDelivered,
  kTeardown,
};

const char* to_string(EventKind kind);

struct SimEvent {
  double time_true_ms = 0.0;
  std::uint64_t seq = 0;
  EventKind kind = EventKind::kCamGenerated;
  std::string node;
  double node_local_ms = 0.0;
  std::string payload;            // hex bytes or key=value notes; "-" when empty
  std::int64_t causation_seq = -1;  // seq of the causing event, -1 for roots
};

struct EventLog {
  std::vector<SimEvent> events;  // (time_true_ms, seq) ordered
};

// One event per line: time_true_ms, seq, kind, node, node_local_ms,
// payload, causation_seq; tab-separated, times with 6 decimals, LF endings.
std::string serialize(const EventLog& log);

std::string format_event(const SimEvent& event);

// Serializes to path; overwrites. Throws Error on I/O failure.
void write_event_log(const EventLog& log, const std::string& path);

}  // namespace orchsim::sim
