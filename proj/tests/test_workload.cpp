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
#include <numeric>
#include <sstream>

#include "doctest.h"
#include "focan/workload.hpp"
#include "helpers.hpp"

using namespace focan;

namespace {

std::vector<TraceSample> parse(const std::string& text, std::vector<std::string>* warnings = nullptr) {
  std::istringstream in(text);
  return parse_trace(in, warnings);
}

bool same_tasks(const ArrivalSeries& a, const ArrivalSeries& b) {
  if (a.tasks.size() != b.tasks.size() || a.horizon_s != b.horizon_s) return false;
  for (std::size_t i = 0; i < a.tasks.size(); ++i) {
    const AppTask& x = a.tasks[i];
    const AppTask& y = b.tasks[i];
    if (x.id != y.id || x.app_id != y.app_id || x.src != y.src || x.dst != y.dst ||
        x.payload_bits != y.payload_bits || x.cpu_bits != y.cpu_bits || x.arrival_s != y.arrival_s) {
      return false;
    }
  }
  return true;
}

TopologyConfig two_cluster_city() {
  TopologyConfig cfg;
  cfg.fns = {test::make_fn(1, 0, 0), test::make_fn(2, 50, 0)};
  for (std::uint32_t i = 1; i <= 6; ++i) {
    cfg.things.push_back(test::make_thing(i, (i % 2) * 50.0 + i, 1.0, {Radio::WiFi},
                                          i == 3 ? std::set<std::string>{"a", "b"}
                                                 : std::set<std::string>{"a"}));
  }
  return cfg;
}

}  // namespace

TEST_CASE("parse_trace examples") {
  const auto two = parse("0.0,0.5\n1.0,0.7");
  REQUIRE(two.size() == 2);
  CHECK(two[0].t_s == 0.0);
  CHECK(two[0].level == 0.5);
  CHECK(two[1].t_s == 1.0);
  CHECK(two[1].level == 0.7);

  try {
    (void)parse("0.0,1.5");
    FAIL("expected TraceError");
  } catch (const TraceError& e) {
    CHECK(e.line() == 1);
  }

  std::vector<std::string> warnings;
  CHECK(parse("", &warnings).empty());
  CHECK(warnings.size() == 1);
}

TEST_CASE("parse_trace details") {
  SUBCASE("header, comments, CRLF and blank lines") {
    const auto s = parse("t_seconds,level\r\n# burst\n\n0,0\n2.5,1\n");
    REQUIRE(s.size() == 2);
    CHECK(s[1].t_s == 2.5);
    CHECK(s[1].level == 1.0);
  }
  SUBCASE("decimal parsing is exact") {
    const auto s = parse("0.1,0.3\n");
    CHECK(s[0].t_s == 0.1);
    CHECK(s[0].level == 0.3);
  }
  SUBCASE("non-monotone time names the line") {
    try {
      (void)parse("0,0.1\n5,0.2\n4,0.3\n");
      FAIL("expected TraceError");
    } catch (const TraceError& e) {
      CHECK(e.line() == 3);
    }
  }
  SUBCASE("malformed rows") {
    CHECK_THROWS_AS(parse("0,0.1\n1;0.2\n"), TraceError);
    CHECK_THROWS_AS(parse("0,0.1,9\n"), TraceError);
    CHECK_THROWS_AS(parse("0,-0.1\n"), TraceError);
    CHECK_THROWS_AS(parse("0,nan\n"), TraceError);
  }
  SUBCASE("round trip through write_trace") {
    const auto orig = synthetic_trace(50.0, 0.5, 3);
    std::ostringstream out;
    write_trace(out, orig);
    const auto back = parse(out.str());
    REQUIRE(back.size() == orig.size());
    for (std::size_t i = 0; i < orig.size(); ++i) {
      CHECK(back[i].t_s == orig[i].t_s);
      CHECK(back[i].level == orig[i].level);
    }
  }
  SUBCASE("missing file") { CHECK_THROWS(load_trace("/nonexistent/trace.csv")); }
}

TEST_CASE("synthetic trace is normalized and bursty") {
  const auto s = synthetic_trace();
  REQUIRE(s.size() > 100);
  double peak = 0.0, lo = 1.0;
  for (std::size_t i = 0; i < s.size(); ++i) {
    CHECK(s[i].level >= 0.0);
    CHECK(s[i].level <= 1.0);
    if (i > 0) CHECK(s[i].t_s >= s[i - 1].t_s);
    peak = std::max(peak, s[i].level);
    lo = std::min(lo, s[i].level);
  }
  CHECK(peak == 1.0);
  CHECK(lo < 0.5);
  CHECK(s.back().t_s <= 1000.0);
}

TEST_CASE("scale_trace") {
  const std::vector<TraceSample> s = {{0.0, 1.0}, {1.0, 0.0}, {2.0, 0.5}};
  const OfferedLoad load = scale_trace(s, 2.5e9);
  CHECK(load.at(0.5) == 2.5e9);
  CHECK(load.at(1.5) == 0.0);
  CHECK(load.at(2.0) == 1.25e9);
  CHECK(load.at(100.0) == 1.25e9);  // last level held
  CHECK(load.at(-1.0) == 0.0);

  SUBCASE("linearity in the maximum rate") {
    const auto trace = synthetic_trace(200.0, 1.0, 9);
    const OfferedLoad one = scale_trace(trace, 3e8);
    const OfferedLoad two = scale_trace(trace, 6e8);
    for (double t = 0.0; t < 200.0; t += 0.37) CHECK(two.at(t) == 2.0 * one.at(t));
  }
}

TEST_CASE("materialize") {
  const CityTopology city = build_topology(two_cluster_city());
  const EndpointPicker pick = uniform_thing_picker(city);
  const TaskShape shape{1e6, 1e6};

  SUBCASE("zero load") {
    const OfferedLoad zero = scale_trace(std::vector<TraceSample>{{0.0, 0.0}}, 2.5e9);
    CHECK(materialize(zero, 1000.0, shape, pick, 1).tasks.empty());
  }
  SUBCASE("constant 10 tasks/s: Poisson count within 3 sigma") {
    const OfferedLoad load = scale_trace(std::vector<TraceSample>{{0.0, 1.0}}, 10.0 * 1e6);
    const ArrivalSeries a = materialize(load, 1000.0, shape, pick, 42);
    const double mean = 10.0 * 1000.0;
    CHECK(std::abs(static_cast<double>(a.tasks.size()) - mean) <= 3.0 * std::sqrt(mean));
    CHECK(same_tasks(a, materialize(load, 1000.0, shape, pick, 42)));
    CHECK(workload_digest(a) == workload_digest(materialize(load, 1000.0, shape, pick, 42)));
    CHECK(workload_digest(a) != workload_digest(materialize(load, 1000.0, shape, pick, 43)));
  }
  SUBCASE("piecewise rate: counts per segment") {
    // 0..500 s at 4/s, 500..1000 s at 16/s
    const OfferedLoad load =
        scale_trace(std::vector<TraceSample>{{0.0, 0.25}, {500.0, 1.0}}, 16.0 * 1e6);
    const ArrivalSeries a = materialize(load, 1000.0, shape, pick, 8);
    std::size_t first = 0;
    for (const AppTask& t : a.tasks) first += t.arrival_s < 500.0 ? 1 : 0;
    const std::size_t second = a.tasks.size() - first;
    CHECK(std::abs(static_cast<double>(first) - 2000.0) <= 3.0 * std::sqrt(2000.0));
    CHECK(std::abs(static_cast<double>(second) - 8000.0) <= 3.0 * std::sqrt(8000.0));
  }
  SUBCASE("endpoints come from the picker") {
    const OfferedLoad load = scale_trace(std::vector<TraceSample>{{0.0, 1.0}}, 50e6);
    const ArrivalSeries a = materialize(load, 20.0, shape, pick, 5);
    REQUIRE(!a.tasks.empty());
    for (const AppTask& t : a.tasks) {
      const auto* dst = std::get_if<ThingId>(&t.dst);
      REQUIRE(dst != nullptr);
      CHECK(*dst != t.src);
      CHECK(city.thing(t.src).authorized_apps.count(t.app_id) == 1);
      CHECK(t.payload_bits == 1e6);
      CHECK(t.cpu_bits == 1e6);
    }
  }
  CHECK_THROWS(materialize(OfferedLoad{}, 10.0, TaskShape{0.0, 0.0}, pick, 1));
}

TEST_CASE("gen_poisson") {
  CHECK(gen_poisson(0.0, 1000.0, 1).tasks.empty());
  CHECK_THROWS_AS(gen_poisson(-1.0, 10.0, 1), std::invalid_argument);

  const ArrivalSeries a = gen_poisson(5.0, 1000.0, 123);
  CHECK(same_tasks(a, gen_poisson(5.0, 1000.0, 123)));

  // inter-arrival sample mean vs 1/rate
  REQUIRE(a.tasks.size() > 1000);
  const double mean_gap = a.tasks.back().arrival_s / static_cast<double>(a.tasks.size());
  CHECK(std::abs(mean_gap - 0.2) <= 0.05 * 0.2);
}

TEST_CASE("property: arrivals are sorted, inside the horizon and seed-determined") {
  focan::test::Gen g(31);
  for (int trial = 0; trial < 50; ++trial) {
    const double horizon = g.real(1.0, 200.0);
    const std::uint64_t seed = static_cast<std::uint64_t>(g.integer(0, 1 << 30));
    std::vector<TraceSample> trace;
    double t = 0.0;
    for (int i = 0; i < g.integer(1, 20); ++i) {
      trace.push_back({t, g.real(0.0, 1.0)});
      t += g.real(0.0, 30.0);
    }
    const OfferedLoad load = scale_trace(trace, g.real(1e6, 5e7));
    const ArrivalSeries a = materialize(load, horizon, TaskShape{}, {}, seed);
    for (std::size_t i = 0; i < a.tasks.size(); ++i) {
      CHECK(a.tasks[i].arrival_s >= 0.0);
      CHECK(a.tasks[i].arrival_s <= horizon);
      if (i > 0) CHECK(a.tasks[i].arrival_s >= a.tasks[i - 1].arrival_s);
    }
    CHECK(same_tasks(a, materialize(load, horizon, TaskShape{}, {}, seed)));
  }
}
