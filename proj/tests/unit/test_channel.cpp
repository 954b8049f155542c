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

#include "doctest.h"

#include <cmath>
#include <random>

#include "orchsim/channel/channel.hpp"
#include "orchsim/errors.hpp"
#include "orchsim/geo/geodesy.hpp"
#include "support/oracles.hpp"

namespace {

using namespace orchsim;

const v2x::GeoPosition kOrigin = v2x::make_position(50.787, 6.046);

channel::ChannelModel zero_variance_model(double cam_ms, double cpm_ms) {
  channel::ChannelModel model;
  model.cam_latency = {cam_ms, 0.0, 0.0, cam_ms + 10.0};
  model.cpm_latency = {cpm_ms, 0.0, 0.0, cpm_ms + 10.0};
  return model;
}

}  // namespace

TEST_CASE("range gate is the haversine disk boundary") {
  channel::ChannelModel model = zero_variance_model(5.0, 5.0);
  CHECK(channel::in_range(kOrigin, kOrigin, model));

  const auto near = geo::destination(kOrigin, 0.0, 799.9);
  const auto far = geo::destination(kOrigin, 0.0, 800.1);
  CHECK(channel::in_range(kOrigin, near, model));
  CHECK_FALSE(channel::in_range(kOrigin, far, model));

  model.range_m = 0.0;
  CHECK(channel::in_range(kOrigin, kOrigin, model));
  CHECK_FALSE(channel::in_range(kOrigin, geo::destination(kOrigin, 0.0, 0.5), model));
}

TEST_CASE("zero variance sampling returns the mean exactly") {
  std::mt19937_64 rng(1);
  const channel::LatencyDistribution dist{5.0, 0.0, 0.0, 10.0};
  for (int i = 0; i < 100; ++i) {
    CHECK(channel::sample_latency_ms(dist, rng) == 5.0);
  }
  const channel::LatencyDistribution bad{15.0, 0.0, 0.0, 10.0};
  CHECK_THROWS_AS(channel::sample_latency_ms(bad, rng), DegenerateDistribution);
}

TEST_CASE("truncated normal sampling matches Monte Carlo statistics") {
  // The reference CAM and CPM latency rows.
  const channel::LatencyDistribution cam{8.17, 2.23, 3.22, 22.91};
  const channel::LatencyDistribution cpm{5.25, 2.29, 0.19, 11.79};
  std::mt19937_64 rng(2024);

  for (const auto& dist : {cam, cpm}) {
    const int n = 100'000;
    double sum = 0.0;
    double sum_sq = 0.0;
    for (int i = 0; i < n; ++i) {
      const double x = channel::sample_latency_ms(dist, rng);
      REQUIRE(x >= dist.min_ms);
      REQUIRE(x <= dist.max_ms);
      sum += x;
      sum_sq += x * x;
    }
    const double mean = sum / n;
    const double var = (sum_sq - sum * sum / n) / (n - 1);
    const auto oracle = test::truncated_normal_moments(dist.mean_ms, dist.std_ms,
                                                       dist.min_ms, dist.max_ms);
    // Sample statistics track the analytic truncated moments tightly and the
    // reference mean/std within the documented 0.15 ms tolerance.
    CHECK(std::abs(mean - oracle.mean) < 0.03);
    CHECK(std::abs(std::sqrt(var) - oracle.std) < 0.03);
    CHECK(std::abs(mean - dist.mean_ms) < 0.15);
    CHECK(std::abs(std::sqrt(var) - dist.std_ms) < 0.15);
  }
}

TEST_CASE("distribution validation rejects inconsistent parameters") {
  CHECK_NOTHROW(channel::validate({5.0, 1.0, 0.0, 10.0}, "d"));
  CHECK_THROWS_AS(channel::validate({5.0, -1.0, 0.0, 10.0}, "d"), InvalidScenario);
  CHECK_THROWS_AS(channel::validate({5.0, 1.0, 8.0, 6.0}, "d"), InvalidScenario);
  CHECK_THROWS_AS(channel::validate({12.0, 1.0, 0.0, 10.0}, "d"), InvalidScenario);
  CHECK_THROWS_AS(channel::validate({5.0, 1.0, -2.0, 10.0}, "d"), InvalidScenario);
}

TEST_CASE("transmit applies range, loss, and latency") {
  std::mt19937_64 rng(3);
  channel::ChannelModel model = zero_variance_model(5.0, 7.0);
  const std::vector<std::uint8_t> payload = {1, 2, 3};

  SUBCASE("in range with zero variance delivers at send plus mean") {
    const auto event = channel::transmit(payload, channel::MessageKind::kCam, kOrigin,
                                         geo::destination(kOrigin, 0.0, 100.0), "rsu-1",
                                         100.0, model, rng);
    REQUIRE(event.has_value());
    CHECK(event->arrival_time_true_ms == 105.0);
    CHECK(event->rx_node == "rsu-1");
    CHECK(event->payload == payload);

    const auto cpm_event = channel::transmit(payload, channel::MessageKind::kCpm,
                                             kOrigin, kOrigin, "v", 100.0, model, rng);
    REQUIRE(cpm_event.has_value());
    CHECK(cpm_event->arrival_time_true_ms == 107.0);
  }

  SUBCASE("out of range never delivers") {
    const auto event = channel::transmit(payload, channel::MessageKind::kCam, kOrigin,
                                         geo::destination(kOrigin, 0.0, 900.0), "rsu-1",
                                         100.0, model, rng);
    CHECK_FALSE(event.has_value());
  }

  SUBCASE("loss probability one never delivers") {
    model.loss_probability = 1.0;
    for (int i = 0; i < 50; ++i) {
      CHECK_FALSE(channel::transmit(payload, channel::MessageKind::kCam, kOrigin,
                                    kOrigin, "rsu-1", 100.0, model, rng)
                      .has_value());
    }
  }

  SUBCASE("delivered latency always lies within the distribution bounds") {
    model.cam_latency = {8.17, 2.23, 3.22, 22.91};
    for (int i = 0; i < 2000; ++i) {
      const auto event = channel::transmit(payload, channel::MessageKind::kCam, kOrigin,
                                           kOrigin, "rsu-1", 50.0, model, rng);
      REQUIRE(event.has_value());
      const double latency = event->arrival_time_true_ms - 50.0;
      CHECK(latency >= model.cam_latency.min_ms);
      CHECK(latency <= model.cam_latency.max_ms);
    }
  }
}

TEST_CASE("node clocks add constant offsets") {
  channel::ClockModel clock;
  clock.offsets_ms["server"] = 0.0;
  clock.offsets_ms["rsu-1"] = 20.0;
  clock.offsets_ms["rsu-2"] = -20.0;

  CHECK(channel::node_clock_ms(clock, "server", 1000.0) == 1000.0);
  CHECK(channel::node_clock_ms(clock, "rsu-1", 1000.0) == 1020.0);
  CHECK_THROWS_AS(channel::node_clock_ms(clock, "ghost", 0.0), UnknownNode);

  // A 100 ms true latency measured rsu-1 -> rsu-2 reads 40 ms short.
  const double sent_local = channel::node_clock_ms(clock, "rsu-1", 0.0);
  const double arrived_local = channel::node_clock_ms(clock, "rsu-2", 100.0);
  CHECK(arrived_local - sent_local == 60.0);

  // Measured entirely at one node, the same latency is exact.
  const double t0 = channel::node_clock_ms(clock, "rsu-1", 0.0);
  const double t1 = channel::node_clock_ms(clock, "rsu-1", 100.0);
  CHECK(t1 - t0 == 100.0);
}

TEST_CASE("identical seeds reproduce identical sample streams") {
  const channel::LatencyDistribution dist{8.17, 2.23, 3.22, 22.91};
  std::mt19937_64 a(99);
  std::mt19937_64 b(99);
  for (int i = 0; i < 1000; ++i) {
    CHECK(channel::sample_latency_ms(dist, a) == channel::sample_latency_ms(dist, b));
  }
}
