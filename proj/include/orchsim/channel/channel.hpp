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
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <vector>

#include "orchsim/v2x/messages.hpp"

namespace orchsim::channel {

// Truncated normal, parameterized by the target statistics.
struct LatencyDistribution {
  double mean_ms = 0.0;
  double std_ms = 0.0;
  double min_ms = 0.0;
  double max_ms = 0.0;
};

// Throws InvalidScenario when min > max, mean outside [min, max],
// or std/min negative. field_path prefixes the diagnostic.
void validate(const LatencyDistribution& dist, const std::string& field_path);

struct ChannelModel {
  double range_m = 800.0;
  LatencyDistribution cam_latency;
  LatencyDistribution cpm_latency;
  double loss_probability = 0.0;
};

void validate(const ChannelModel& model);

// Per-node clock offset in ms: node-local time minus true simulation time.
// Offsets are constant for a run.
struct ClockModel {
  std::map<std::string, double> offsets_ms;
};

enum class MessageKind { kCam, kCpm };

bool in_range(const v2x::GeoPosition& tx, const v2x::GeoPosition& rx,
              const ChannelModel& model);

// Normal(mean, std) with rejection until the draw lands in [min, max].
// std == 0 returns the mean exactly; throws DegenerateDistribution when
// that mean is outside [min, max].
double sample_latency_ms(const LatencyDistribution& dist, std::mt19937_64& rng);

// Throws UnknownNode when the node has no configured offset.
double node_clock_ms(const ClockModel& clock, const std::string& node,
                     double true_time_ms);

struct DeliveryEvent {
  std::vector<std::uint8_t> payload;
  std::string rx_node;
  double arrival_time_true_ms = 0.0;
};

// No event when out of range or dropped by loss_probability.
std::optional<DeliveryEvent> transmit(std::span<const std::uint8_t> msg,
                                      MessageKind kind, const v2x::GeoPosition& tx_pos,
                                      const v2x::GeoPosition& rx_pos,
                                      const std::string& rx_node,
                                      double send_time_true_ms,
                                      const ChannelModel& model, std::mt19937_64& rng);

}  // namespace orchsim::channel
