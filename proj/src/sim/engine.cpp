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

#include "orchsim/sim/engine.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <map>
#include <queue>
#include <random>
#include <set>
#include <utility>
#include <variant>
#include <vector>

#include "orchsim/channel/channel.hpp"
#include "orchsim/errors.hpp"
#include "orchsim/orch/deployment.hpp"
#include "orchsim/orch/detector.hpp"
#include "orchsim/orch/orchestrator.hpp"
#include "orchsim/sim/vehicle.hpp"
#include "orchsim/v2x/codec.hpp"

namespace orchsim::sim {

namespace {

constexpr double kOrchTickPeriodMs = 1000.0;

struct EvCamTx { std::size_t vehicle = 0; };
struct EvCamAtRsu { std::vector<std::uint8_t> bytes; std::int64_t cause = -1; };
struct EvCamAtServer { std::vector<std::uint8_t> bytes; std::int64_t cause = -1; };
struct EvRequest {
  v2x::StationId station;
  std::int64_t cause = -1;
};
struct EvManagerDone { std::int64_t cause = -1; };
struct EvPodCreate { std::size_t service = 0; std::int64_t cause = -1; };
struct EvStageComplete { std::size_t service = 0; std::size_t stage = 0; };
struct EvPipelineReady {};
struct EvObjectListTx {
  std::size_t rsu = 0;
  std::uint64_t cycle = 0;
  std::uint64_t generation = 0;
  std::int64_t cause = -1;
};
struct EvObjectListArrive {
  std::size_t rsu = 0;
  std::uint64_t cycle = 0;
  std::uint64_t generation = 0;
  std::int64_t cause = -1;
};
struct EvFusionDone { std::uint64_t cycle = 0; std::int64_t cause = -1; };
struct EvCpmAtRsu { std::vector<std::uint8_t> bytes; std::int64_t cause = -1; };
struct EvCpmAtVehicle {
  std::size_t vehicle = 0;
  std::vector<std::uint8_t> bytes;
  std::int64_t cause = -1;
};
struct EvTick {};

using Internal =
    std::variant<EvCamTx, EvCamAtRsu, EvCamAtServer, EvRequest, EvManagerDone,
                 EvPodCreate, EvStageComplete, EvPipelineReady, EvObjectListTx,
                 EvObjectListArrive, EvFusionDone, EvCpmAtRsu, EvCpmAtVehicle, EvTick>;

struct QueueEntry {
  double time_ms = 0.0;
  std::uint64_t order = 0;
  Internal payload;
};

struct EntryAfter {
  bool operator()(const QueueEntry& a, const QueueEntry& b) const {
    if (a.time_ms != b.time_ms) return a.time_ms > b.time_ms;
    return a.order > b.order;
  }
};

class Engine {
 public:
  Engine(const ScenarioConfig& config, std::uint64_t seed)
      : config_(config), rng_(seed), end_time_ms_(config.end_time_s * 1000.0) {
    orch_config_.idle_timeout_s = config_.idle_timeout_s;
    for (std::size_t i = 0; i < config_.rsus.size(); ++i) {
      if (config_.rsus[i].hosts_v2x) {
        v2x_host_ = i;
      }
    }
    complete_clock_offsets();
    pod_seq_.assign(config_.plan.services.size(), -1);
    last_service_seq_.assign(config_.plan.services.size(), -1);
  }

  EventLog run() {
    for (std::size_t i = 0; i < config_.vehicles.size(); ++i) {
      const double start_s = route_start_s(config_.vehicles[i]);
      if (start_s * 1000.0 <= end_time_ms_) {
        schedule(start_s * 1000.0, EvCamTx{i});
      }
    }
    if (kOrchTickPeriodMs <= end_time_ms_) {
      schedule(kOrchTickPeriodMs, EvTick{});
    }

    while (!queue_.empty()) {
      QueueEntry entry = queue_.top();
      queue_.pop();
      if (entry.time_ms > end_time_ms_) {
        break;
      }
      now_ms_ = entry.time_ms;
      std::visit([this](auto& ev) { handle(ev); }, entry.payload);
    }
    return std::move(log_);
  }

 private:
  void complete_clock_offsets() {
    clocks_ = config_.clocks;
    if (clocks_.offsets_ms.find(kServerNode) == clocks_.offsets_ms.end()) {
      clocks_.offsets_ms[kServerNode] = 0.0;
    }
    std::uniform_real_distribution<double> rsu_offset(-20.0, 20.0);
    for (const auto& rsu : config_.rsus) {
      if (clocks_.offsets_ms.find(rsu.id) == clocks_.offsets_ms.end()) {
        clocks_.offsets_ms[rsu.id] = rsu_offset(rng_);
      }
    }
    std::uniform_real_distribution<double> vehicle_offset(-2.0, 2.0);
    for (const auto& vehicle : config_.vehicles) {
      const std::string node = vehicle_node_id(vehicle.station_id);
      if (clocks_.offsets_ms.find(node) == clocks_.offsets_ms.end()) {
        clocks_.offsets_ms[node] = vehicle_offset(rng_);
      }
    }
  }

  void schedule(double time_ms, Internal payload) {
    queue_.push(QueueEntry{time_ms, next_order_++, std::move(payload)});
  }

  double local_ms(const std::string& node) const {
    return channel::node_clock_ms(clocks_, node, now_ms_);
  }

  std::int64_t log_event(EventKind kind, const std::string& node, std::string payload,
                         std::int64_t cause) {
    SimEvent event;
    event.time_true_ms = now_ms_;
    event.seq = log_.events.size();
    event.kind = kind;
    event.node = node;
    event.node_local_ms = local_ms(node);
    event.payload = std::move(payload);
    event.causation_seq = cause;
    log_.events.push_back(std::move(event));
    return static_cast<std::int64_t>(log_.events.back().seq);
  }

  bool vehicle_active(std::size_t index) const {
    const auto& vehicle = config_.vehicles[index];
    const double t_s = now_ms_ / 1000.0;
    return t_s >= route_start_s(vehicle) &&
           t_s <= route_end_s(vehicle, config_.end_time_s);
  }

  const RsuNode& v2x_host() const { return config_.rsus[v2x_host_]; }

  void handle(EvCamTx& ev) {
    const auto& vehicle = config_.vehicles[ev.vehicle];
    const double t_s = now_ms_ / 1000.0;
    const std::string node = vehicle_node_id(vehicle.station_id);
    const std::uint64_t gen_ms = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(kSimEpochMs) + local_ms(node)));
    const v2x::CamMessage cam = make_cam(vehicle, t_s, gen_ms);
    const std::vector<std::uint8_t> bytes = v2x::encode_cam(cam);
    const std::int64_t gen_seq = log_event(EventKind::kCamGenerated, node,
                                           v2x::to_hex(bytes), -1);

    const auto delivery = channel::transmit(
        bytes, channel::MessageKind::kCam, cam.position, v2x_host().position,
        v2x_host().id, now_ms_, config_.channel, rng_);
    if (delivery.has_value()) {
      schedule(delivery->arrival_time_true_ms, EvCamAtRsu{delivery->payload, gen_seq});
    }

    const double next_ms = now_ms_ + vehicle.cam_period_ms;
    if (next_ms <= route_end_s(vehicle, config_.end_time_s) * 1000.0 &&
        next_ms <= end_time_ms_) {
      schedule(next_ms, EvCamTx{ev.vehicle});
    }
  }

  void handle(EvCamAtRsu& ev) {
    const std::int64_t seq = log_event(EventKind::kCamDelivered, v2x_host().id,
                                       v2x::to_hex(ev.bytes), ev.cause);
    schedule(now_ms_ + config_.uplink_latency_ms,
             EvCamAtServer{std::move(ev.bytes), seq});
  }

  void handle(EvCamAtServer& ev) {
    const std::int64_t seq = log_event(EventKind::kCamDelivered, kServerNode,
                                       v2x::to_hex(ev.bytes), ev.cause);
    const v2x::CamMessage cam = v2x::decode_cam(ev.bytes);
    if (!orch::rule_matches(config_.rule, cam)) {
      return;
    }
    std::vector<orch::OrchAction> actions =
        orch::step(orch_state_, orch::CamSeenEvent{now_ms_}, orch_config_);
    apply_actions(actions);

    const double decision_ms = now_ms_ + config_.other_latencies.event_detection_ms;
    const double detector_now = channel::node_clock_ms(clocks_, kServerNode, decision_ms);
    const auto request = orch::detect(config_.rule, cam, detector_now, detector_state_);
    if (request.has_value()) {
      schedule(decision_ms, EvRequest{cam.station_id, seq});
    }
  }

  void handle(EvRequest& ev) {
    const std::int64_t seq =
        log_event(EventKind::kRequestIssued, kServerNode,
                  "station=" + std::to_string(ev.station.value), ev.cause);
    std::vector<orch::OrchAction> actions =
        orch::step(orch_state_, orch::RequestEvent{now_ms_}, orch_config_);
    for (const auto& action : actions) {
      if (std::holds_alternative<orch::DeployAction>(action)) {
        schedule(now_ms_ + config_.plan.manager_processing_s * 1000.0,
                 EvManagerDone{seq});
      }
    }
  }

  void handle(EvManagerDone& ev) {
    const std::int64_t seq =
        log_event(EventKind::kManagerDone, kServerNode, "", ev.cause);
    const orch::ReadyTimes offsets = orch::ready_time(config_.plan, 0.0);
    const double mgr_s = config_.plan.manager_processing_s;

    critical_service_ = find_critical_service();
    for (std::size_t i = 0; i < config_.plan.services.size(); ++i) {
      pod_seq_[i] = -1;
      last_service_seq_[i] = -1;
      schedule(now_ms_, EvPodCreate{i, seq});
    }
    for (std::size_t i = 0; i < config_.plan.services.size(); ++i) {
      double cum_ms = 0.0;
      for (std::size_t j = 0; j < config_.plan.services[i].stages.size(); ++j) {
        cum_ms += config_.plan.services[i].stages[j].duration_s * 1000.0;
        schedule(now_ms_ + cum_ms, EvStageComplete{i, j});
      }
    }
    schedule(now_ms_ + (offsets.pipeline_ready_s - mgr_s) * 1000.0, EvPipelineReady{});
  }

  std::size_t find_critical_service() const {
    const auto& plan = config_.plan;
    std::map<std::string, std::size_t> index;
    for (std::size_t i = 0; i < plan.services.size(); ++i) {
      index[plan.services[i].name] = i;
    }
    std::set<std::size_t> closure;
    std::vector<std::size_t> stack{index.at(plan.sink_service)};
    while (!stack.empty()) {
      const std::size_t i = stack.back();
      stack.pop_back();
      if (!closure.insert(i).second) continue;
      for (const auto& dep : plan.services[i].inputs) {
        stack.push_back(index.at(dep));
      }
    }
    std::size_t best = *closure.begin();
    double best_duration = -1.0;
    for (std::size_t i = 0; i < plan.services.size(); ++i) {
      if (closure.find(i) == closure.end()) continue;
      double duration = 0.0;
      for (const auto& stage : plan.services[i].stages) {
        duration += stage.duration_s;
      }
      if (duration > best_duration) {
        best_duration = duration;
        best = i;
      }
    }
    return best;
  }

  void handle(EvPodCreate& ev) {
    const auto& service = config_.plan.services[ev.service];
    const std::int64_t seq =
        log_event(EventKind::kPodCreated, service.node, service.name, ev.cause);
    pod_seq_[ev.service] = seq;
    last_service_seq_[ev.service] = seq;
  }

  void handle(EvStageComplete& ev) {
    const auto& service = config_.plan.services[ev.service];
    const std::int64_t seq = log_event(
        EventKind::kStageCompleted, service.node,
        service.name + "/" + service.stages[ev.stage].label,
        last_service_seq_[ev.service]);
    last_service_seq_[ev.service] = seq;
  }

  void handle(EvPipelineReady&) {
    const auto& plan = config_.plan;
    const ServiceNodeRef sink = sink_service_ref();
    const std::int64_t seq =
        log_event(EventKind::kPipelineReady, sink.node, plan.sink_service,
                  last_service_seq_[critical_service_]);
    std::vector<orch::OrchAction> actions =
        orch::step(orch_state_, orch::PipelineReadyEvent{now_ms_}, orch_config_);
    apply_actions(actions);
    for (std::size_t r = 0; r < config_.rsus.size(); ++r) {
      schedule(now_ms_, EvObjectListTx{r, 0, deploy_generation_, seq});
    }
  }

  struct ServiceNodeRef { std::string node; };

  ServiceNodeRef sink_service_ref() const {
    for (const auto& service : config_.plan.services) {
      if (service.name == config_.plan.sink_service) {
        return {service.node};
      }
    }
    return {kServerNode};
  }

  void handle(EvObjectListTx& ev) {
    if (ev.generation != deploy_generation_ ||
        orch_state_.phase != orch::Phase::kActive) {
      return;
    }
    const auto& rsu = config_.rsus[ev.rsu];
    const std::int64_t seq =
        log_event(EventKind::kObjectListSent, rsu.id,
                  "cycle=" + std::to_string(ev.cycle), ev.cause);
    schedule(now_ms_ + config_.uplink_latency_ms,
             EvObjectListArrive{ev.rsu, ev.cycle, ev.generation, seq});
    const double next_ms = now_ms_ + config_.fusion_period_ms;
    if (next_ms <= end_time_ms_) {
      schedule(next_ms, EvObjectListTx{ev.rsu, ev.cycle + 1, ev.generation, seq});
    }
  }

  void handle(EvObjectListArrive& ev) {
    const std::int64_t seq =
        log_event(EventKind::kObjectListDelivered, kServerNode,
                  "cycle=" + std::to_string(ev.cycle), ev.cause);
    auto& barrier = fusion_barrier_[{ev.generation, ev.cycle}];
    barrier.first += 1;
    barrier.second = seq;
    if (barrier.first == config_.rsus.size()) {
      schedule(now_ms_ + config_.other_latencies.fusion_processing_ms,
               EvFusionDone{ev.cycle, seq});
    }
  }

  void handle(EvFusionDone& ev) {
    const std::int64_t seq =
        log_event(EventKind::kFusionDone, kServerNode,
                  "cycle=" + std::to_string(ev.cycle), ev.cause);
    std::vector<v2x::PerceivedObject> objects;
    const double t_s = now_ms_ / 1000.0;
    for (const auto& vehicle : config_.vehicles) {
      const double start_s = route_start_s(vehicle);
      const double end_s = route_end_s(vehicle, config_.end_time_s);
      if (t_s < start_s || t_s > end_s) continue;
      v2x::PerceivedObject object;
      object.object_id = static_cast<std::uint16_t>(vehicle.station_id.value & 0xffff);
      object.position = vehicle_position(vehicle, t_s);
      object.speed_cms = v2x::saturate_speed_cms(vehicle_speed_ms(vehicle, t_s) * 100.0);
      object.heading_ddeg = vehicle_heading_ddeg(vehicle, t_s);
      object.object_class = v2x::ObjectClass::kPassengerCar;
      objects.push_back(object);
    }
    const std::uint64_t reference_ms = static_cast<std::uint64_t>(
        std::llround(static_cast<double>(kSimEpochMs) + local_ms(kServerNode)));
    const v2x::CpmMessage cpm =
        v2x::build_cpm(std::move(objects), v2x_host().station_id, reference_ms);
    schedule(now_ms_ + config_.other_latencies.cpm_generation_ms +
                 config_.uplink_latency_ms,
             EvCpmAtRsu{v2x::encode_cpm(cpm), seq});
  }

  void handle(EvCpmAtRsu& ev) {
    const std::int64_t seq = log_event(EventKind::kCpmBroadcast, v2x_host().id,
                                       v2x::to_hex(ev.bytes), ev.cause);
    const double t_s = now_ms_ / 1000.0;
    for (std::size_t i = 0; i < config_.vehicles.size(); ++i) {
      if (!vehicle_active(i)) continue;
      const auto& vehicle = config_.vehicles[i];
      const auto delivery = channel::transmit(
          ev.bytes, channel::MessageKind::kCpm, v2x_host().position,
          vehicle_position(vehicle, t_s), vehicle_node_id(vehicle.station_id),
          now_ms_, config_.channel, rng_);
      if (delivery.has_value()) {
        schedule(delivery->arrival_time_true_ms,
                 EvCpmAtVehicle{i, delivery->payload, seq});
      }
    }
  }

  void handle(EvCpmAtVehicle& ev) {
    const auto& vehicle = config_.vehicles[ev.vehicle];
    log_event(EventKind::kCpmDelivered, vehicle_node_id(vehicle.station_id),
              v2x::to_hex(ev.bytes), ev.cause);
  }

  void handle(EvTick&) {
    std::vector<orch::OrchAction> actions =
        orch::step(orch_state_, orch::TickEvent{now_ms_}, orch_config_);
    apply_actions(actions);
    const double next_ms = now_ms_ + kOrchTickPeriodMs;
    if (next_ms <= end_time_ms_) {
      schedule(next_ms, EvTick{});
    }
  }

  void apply_actions(const std::vector<orch::OrchAction>& actions) {
    for (const auto& action : actions) {
      if (std::holds_alternative<orch::TeardownAction>(action)) {
        log_event(EventKind::kTeardown, kServerNode, "", -1);
        detector_state_.armed = true;
        deploy_generation_ += 1;
      }
    }
  }

  const ScenarioConfig& config_;
  std::mt19937_64 rng_;
  double end_time_ms_ = 0.0;
  double now_ms_ = 0.0;
  std::size_t v2x_host_ = 0;

  channel::ClockModel clocks_;
  orch::OrchestratorConfig orch_config_;
  orch::OrchestratorState orch_state_;
  orch::DetectorState detector_state_;

  std::priority_queue<QueueEntry, std::vector<QueueEntry>, EntryAfter> queue_;
  std::uint64_t next_order_ = 0;
  EventLog log_;

  std::vector<std::int64_t> pod_seq_;
  std::vector<std::int64_t> last_service_seq_;
  std::size_t critical_service_ = 0;
  std::uint64_t deploy_generation_ = 0;
  std::map<std::pair<std::uint64_t, std::uint64_t>, std::pair<std::size_t, std::int64_t>>
      fusion_barrier_;
};

}  // namespace

EventLog run_scenario(const ScenarioConfig& config, std::uint64_t seed) {
  validate(config);
  Engine engine(config, seed);
  return engine.run();
}

double first_cpm_latency_s(const EventLog& log, v2x::StationId station) {
  const std::string vehicle_node = vehicle_node_id(station);
  bool have_cam = false;
  double earliest_gen_local_ms = 0.0;
  for (const auto& event : log.events) {
    if (event.kind != EventKind::kCamDelivered || event.causation_seq < 0) continue;
    const auto& cause = log.events[static_cast<std::size_t>(event.causation_seq)];
    if (cause.kind != EventKind::kCamGenerated || cause.node != vehicle_node) continue;
    if (!have_cam || cause.node_local_ms < earliest_gen_local_ms) {
      have_cam = true;
      earliest_gen_local_ms = cause.node_local_ms;
    }
  }
  if (!have_cam) {
    throw NoCamDelivered("no CAM from station " + std::to_string(station.value) +
                         " was delivered to the ITS-G5 host");
  }
  for (const auto& event : log.events) {
    if (event.kind == EventKind::kCpmDelivered && event.node == vehicle_node) {
      return (event.node_local_ms - earliest_gen_local_ms) / 1000.0;
    }
  }
  throw NoCpmReceived("no CPM was delivered to station " + std::to_string(station.value));
}

}  // namespace orchsim::sim
