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

#include "orchsim/channel/channel.hpp"

#include "orchsim/errors.hpp"
#include "orchsim/geo/geodesy.hpp"

namespace orchsim::channel {

void validate(const LatencyDistribution& dist, const std::string& field_path) {
  if (dist.std_ms < 0.0) {
    throw InvalidScenario(field_path + ": std_ms must be >= 0");
  }
  if (dist.min_ms < 0.0) {
    throw InvalidScenario(field_path + ": min_ms must be >= 0");
  }
  if (dist.min_ms > dist.max_ms) {
    throw InvalidScenario(field_path + ": min_ms exceeds max_ms");
  }
  if (dist.mean_ms < dist.min_ms || dist.mean_ms > dist.max_ms) {
    throw InvalidScenario(field_path + ": mean_ms outside [min_ms, max_ms]");
  }
}

void validate(const ChannelModel& model) {
  if (!(model.range_m >= 0.0)) {
    throw InvalidScenario("channel.range_m: must be >= 0");
  }
  if (model.loss_probability < 0.0 || model.loss_probability > 1.0) {
    throw InvalidScenario("channel.loss_probability: must be in [0, 1]");
  }
  validate(model.cam_latency, "channel.cam_latency");
  validate(model.cpm_latency, "channel.cpm_latency");
}

bool in_range(const v2x::GeoPosition& tx, const v2x::GeoPosition& rx,
              const ChannelModel& model) {
  return geo::haversine_distance_m(tx, rx) <= model.range_m;
}

double sample_latency_ms(const LatencyDistribution& dist, std::mt19937_64& rng) {
  if (dist.std_ms == 0.0) {
    if (dist.mean_ms < dist.min_ms || dist.mean_ms > dist.max_ms) {
      throw DegenerateDistribution("latency distribution has std 0 and mean outside [min, max]");
    }
    return dist.mean_ms;
  }
  std::normal_distribution<double> normal(dist.mean_ms, dist.std_ms);
  for (;;) {
    const double draw = normal(rng);
    if (draw >= dist.min_ms && draw <= dist.max_ms) {
      return draw;
    }
  }
}

double node_clock_ms(const ClockModel& clock, const std::string& node,
                     double true_time_ms) {
  const auto it = clock.offsets_ms.find(node);
  if (it == clock.offsets_ms.end()) {
    throw UnknownNode("no clock offset configured for node '" + node + "'");
  }
  return true_time_ms + it->second;
}

std::optional<DeliveryEvent> transmit(std::span<const std::uint8_t> msg,
                                      MessageKind kind, const v2x::GeoPosition& tx_pos,
                                      const v2x::GeoPosition& rx_pos,
                                      const std::string& rx_node,
                                      double send_time_true_ms,
                                      const ChannelModel& model, std::mt19937_64& rng) {
  if (!in_range(tx_pos, rx_pos, model)) {
    return std::nullopt;
  }
  if (model.loss_probability > 0.0) {
    std::uniform_real_distribution<double> uniform(0.0, 1.0);
    if (uniform(rng) < model.loss_probability) {
      return std::nullopt;
    }
  }
  const LatencyDistribution& dist =
      kind == MessageKind::kCam ? model.cam_latency : model.cpm_latency;
  DeliveryEvent event;
  event.payload.assign(msg.begin(), msg.end());
  event.rx_node = rx_node;
  event.arrival_time_true_ms = send_time_true_ms + sample_latency_ms(dist, rng);
  return event;
}

}  // namespace orchsim::channel
