// Copyright 2026 The FOCAN Simulator Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cmath>

#include "doctest.h"
#include "focan/baseline.hpp"
#include "helpers.hpp"

using namespace focan;
using test::make_task;
using test::series;

namespace {

// Two things 10 m apart in one cluster, a third 100 m away in another.
CityTopology pair_city() {
  TopologyConfig cfg;
  cfg.fns = {test::make_fn(1, 0, 0), test::make_fn(2, 100, 0)};
  cfg.things = {test::make_thing(1, 0, 0), test::make_thing(2, 10, 0), test::make_thing(3, 100, 0)};
  return build_topology(cfg);
}

ArrivalSeries repeated(std::size_t n, double spacing_s = 0.001) {
  std::vector<AppTask> tasks;
  for (std::size_t i = 0; i < n; ++i) {
    tasks.push_back(make_task(i + 1, 1, ThingId{2}, spacing_s * static_cast<double>(i)));
  }
  return series(tasks, 100.0);
}

}  // namespace

TEST_CASE("expected_transmissions") {
  CHECK(expected_transmissions(0.0) == 1.0);
  CHECK(expected_transmissions(0.2) == doctest::Approx(1.25));
  CHECK(expected_transmissions(0.5) == 2.0);
  CHECK_THROWS_AS(expected_transmissions(1.0), std::domain_error);
  CHECK_THROWS_AS(expected_transmissions(-0.1), std::domain_error);
}

TEST_CASE("validate rejects bad parameters") {
  D2dConfig c;
  c.retx_prob = 1.0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = {};
  c.link_rate_bps = 0.0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
  c = {};
  c.range_m = -1.0;
  CHECK_THROWS_AS(validate(c), std::invalid_argument);
}

TEST_CASE("lossless link: one attempt, exact energy and latency") {
  D2dConfig c;
  c.retx_prob = 0.0;
  const PowerModel m;
  const auto r = run_d2d(c, series({make_task(1, 1, ThingId{2}, 3.0, 2e6)}, 100.0), pair_city(), m, 7,
                         100.0);
  REQUIRE(r.latencies.size() == 1);
  const LatencyRecord& rec = r.latencies[0];
  CHECK(rec.outcome == TaskOutcome::Completed);
  CHECK(rec.attempts == 1);
  CHECK(rec.network_s == doctest::Approx(2e6 / 11e6));
  CHECK(rec.timeout_s == 0.0);
  CHECK(rec.total_s() == doctest::Approx(2e6 / 11e6));
  CHECK(r.ledger.total_net() == doctest::Approx(2e6 * m.nic_wireless_j_per_bit).epsilon(1e-12));
  CHECK(rec.net_j == doctest::Approx(2e6 * m.nic_wireless_j_per_bit).epsilon(1e-12));
  CHECK(r.connections.count[index_of(CommType::Primary)] == 1);
}

TEST_CASE("latency closed form: attempts transmissions plus a timeout per failure") {
  D2dConfig c;
  c.retx_prob = 0.5;
  const auto r = run_d2d(c, repeated(500), pair_city(), PowerModel{}, 3, 100.0);
  for (const LatencyRecord& rec : r.latencies) {
    const double tx = 1e6 / c.link_rate_bps;
    if (rec.outcome == TaskOutcome::Completed) {
      CHECK(rec.total_s() ==
            doctest::Approx(rec.attempts * tx + (rec.attempts - 1) * c.timeout_penalty_s).epsilon(1e-12));
    } else {
      CHECK(rec.outcome == TaskOutcome::Failed);
      CHECK(rec.attempts == c.max_retries + 1);
    }
  }
  CHECK(r.counters.arrived == r.counters.completed + r.counters.failed + r.counters.in_flight);
}

TEST_CASE("mean attempts approaches 1/(1-p)") {
  D2dConfig c;
  c.max_retries = 1000;  // effectively unbounded: the mean is geometric
  for (double p : {0.1, 0.2, 0.3}) {
    c.retx_prob = p;
    const auto r = run_d2d(c, repeated(20000), pair_city(), PowerModel{}, 11, 100.0);
    double sum = 0.0;
    for (const LatencyRecord& rec : r.latencies) sum += rec.attempts;
    const double mean = sum / static_cast<double>(r.latencies.size());
    const double expect = expected_transmissions(p);
    const double sd = std::sqrt(p) / (1.0 - p) / std::sqrt(20000.0);
    CHECK(std::abs(mean - expect) <= 3.0 * sd);
    CHECK(std::abs(mean - expect) / expect <= 0.02);
  }
}

TEST_CASE("property: raising p never lowers a task's attempts or energy") {
  test::Gen g(5);
  const CityTopology city = pair_city();
  for (int trial = 0; trial < 30; ++trial) {
    const std::uint64_t seed = g.engine()();
    D2dConfig lo, hi;
    lo.retx_prob = g.real(0.0, 0.8);
    hi.retx_prob = g.real(lo.retx_prob, 0.95);
    const ArrivalSeries w = repeated(200);
    const auto a = run_d2d(lo, w, city, PowerModel{}, seed, 100.0);
    const auto b = run_d2d(hi, w, city, PowerModel{}, seed, 100.0);
    for (std::size_t i = 0; i < a.latencies.size(); ++i) {
      CHECK(b.latencies[i].attempts >= a.latencies[i].attempts);
    }
    CHECK(b.ledger.total_net() >= a.ledger.total_net());
  }
}

TEST_CASE("out of range or FN destinations fail without energy") {
  const auto r = run_d2d(D2dConfig{},
                         series({make_task(1, 1, ThingId{3}, 0.0), make_task(2, 1, FnId{1}, 0.0)}, 10.0),
                         pair_city(), PowerModel{}, 1, 10.0);
  CHECK(r.counters.failed == 2);
  CHECK(r.ledger.total_net() == 0.0);
  CHECK(r.latencies[0].attempts == 0);
}

TEST_CASE("the baseline uses radios only: no FN CPU energy") {
  const auto r = run_d2d(D2dConfig{}, repeated(10), pair_city(), PowerModel{}, 1, 100.0);
  CHECK(r.ledger.total_cpu() == 0.0);
  CHECK(r.ledger.total_net() > 0.0);
}

TEST_CASE("seeded determinism") {
  const ArrivalSeries w = repeated(300);
  const auto a = run_d2d(D2dConfig{}, w, pair_city(), PowerModel{}, 9, 100.0);
  const auto b = run_d2d(D2dConfig{}, w, pair_city(), PowerModel{}, 9, 100.0);
  const auto c = run_d2d(D2dConfig{}, w, pair_city(), PowerModel{}, 10, 100.0);
  CHECK(a.counters == b.counters);
  CHECK(a.ledger.total_net() == b.ledger.total_net());
  CHECK(a.counters.transmissions != c.counters.transmissions);
}
