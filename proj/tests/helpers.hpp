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

// Builders, random generators and brute-force oracles shared by the tests.

#ifndef FOCAN_TESTS_HELPERS_HPP_
#define FOCAN_TESTS_HELPERS_HPP_

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <fstream>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "focan/engine.hpp"
#include "focan/routing.hpp"
#include "focan/topology.hpp"
#include "focan/workload.hpp"

namespace focan::test {

inline Thing make_thing(std::uint32_t id, double x, double y,
                        std::set<Radio> radios = {Radio::WiFi},
                        std::set<std::string> apps = {"app"}) {
  Thing t;
  t.id = ThingId{id};
  t.pos = {x, y};
  t.radios = std::move(radios);
  t.authorized_apps = std::move(apps);
  return t;
}

inline FogNode make_fn(std::uint32_t id, double x, double y, double radius = 30.0) {
  FogNode f;
  f.id = FnId{id};
  f.pos = {x, y};
  f.coverage_radius_m = radius;
  return f;
}

inline AppTask make_task(std::uint64_t id, std::uint32_t src, Endpoint dst, double arrival_s,
                         double payload_bits = 1e6, double cpu_bits = 0.0,
                         std::string app = "app") {
  AppTask t;
  t.id = id;
  t.app_id = std::move(app);
  t.src = ThingId{src};
  t.dst = dst;
  t.payload_bits = payload_bits;
  t.cpu_bits = cpu_bits;
  t.arrival_s = arrival_s;
  return t;
}

inline ArrivalSeries series(std::vector<AppTask> tasks, double horizon_s) {
  ArrivalSeries s;
  s.tasks = std::move(tasks);
  s.horizon_s = horizon_s;
  return s;
}

// Timing-only parameters: warm caches and no CPU work make latencies exact.
inline EngineParams exact_params(double horizon_s = 10.0) {
  EngineParams p;
  p.horizon_s = horizon_s;
  p.miss_penalty_s = 0.0;
  return p;
}

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}
  int integer(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }
  double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }
  bool coin(double p = 0.5) { return real(0.0, 1.0) < p; }
  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

// Random connected graph on FN ids 1..n: a random spanning tree plus extra
// edges.
inline FnGraph random_connected_graph(Gen& g, int n, double extra_edge_p) {
  FnGraph graph;
  for (int i = 1; i <= n; ++i) graph.add_node(FnId{static_cast<std::uint32_t>(i)});
  std::vector<std::uint32_t> order(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) order[static_cast<std::size_t>(i)] = static_cast<std::uint32_t>(i + 1);
  std::shuffle(order.begin(), order.end(), g.engine());
  for (std::size_t i = 1; i < order.size(); ++i) {
    const std::size_t parent = static_cast<std::size_t>(g.integer(0, static_cast<int>(i) - 1));
    graph.add_edge(FnId{order[i]}, FnId{order[parent]});
  }
  for (int a = 1; a <= n; ++a) {
    for (int b = a + 1; b <= n; ++b) {
      if (g.coin(extra_edge_p)) {
        graph.add_edge(FnId{static_cast<std::uint32_t>(a)}, FnId{static_cast<std::uint32_t>(b)});
      }
    }
  }
  return graph;
}

// Every simple path from src to dst, by exhaustive DFS.
inline std::vector<std::vector<FnId>> all_simple_paths(const FnGraph& graph, FnId src, FnId dst) {
  std::vector<std::vector<FnId>> out;
  std::vector<FnId> path{src};
  std::set<FnId> on_path{src};
  std::function<void(FnId)> dfs = [&](FnId u) {
    if (u == dst) {
      out.push_back(path);
      return;
    }
    for (FnId v : graph.neighbors(u)) {
      if (on_path.count(v) != 0) continue;
      path.push_back(v);
      on_path.insert(v);
      dfs(v);
      on_path.erase(v);
      path.pop_back();
    }
  };
  dfs(src);
  return out;
}

inline std::size_t brute_min_hops(const FnGraph& graph, FnId src, FnId dst) {
  std::size_t best = std::numeric_limits<std::size_t>::max();
  for (const auto& p : all_simple_paths(graph, src, dst)) best = std::min(best, p.size() - 1);
  return best;
}

// Small random city: a few FNs on a line or grid, things scattered so some
// land outside every radius, optional explicit sparse FN graph.
inline TopologyConfig random_city(Gen& g, int max_fns = 5, int max_things = 15) {
  TopologyConfig cfg;
  const int n_fn = g.integer(1, max_fns);
  for (int i = 0; i < n_fn; ++i) {
    cfg.fns.push_back(make_fn(static_cast<std::uint32_t>(i + 1), g.real(0, 150), g.real(0, 150),
                              g.real(10, 30)));
  }
  const int n_thing = g.integer(2, max_things);
  for (int i = 0; i < n_thing; ++i) {
    std::set<Radio> radios;
    if (g.coin(0.8)) radios.insert(Radio::WiFi);
    if (g.coin(0.5)) radios.insert(Radio::Bluetooth);
    if (g.coin(0.3)) radios.insert(Radio::ZigBee);
    if (radios.empty()) radios.insert(Radio::WiFi);
    std::set<std::string> apps{"app"};
    if (g.coin(0.1)) apps = {"other"};
    const FogNode& near = cfg.fns[static_cast<std::size_t>(g.integer(0, n_fn - 1))];
    cfg.things.push_back(make_thing(static_cast<std::uint32_t>(i + 1),
                                    near.pos.x + g.real(-35, 35), near.pos.y + g.real(-35, 35),
                                    radios, apps));
  }
  if (n_fn > 2 && g.coin(0.5)) {
    cfg.fn_edges.emplace();
    for (int i = 1; i < n_fn; ++i) {
      if (g.coin(0.8)) {
        cfg.fn_edges->emplace_back(FnId{static_cast<std::uint32_t>(i)},
                                   FnId{static_cast<std::uint32_t>(i + 1)});
      }
    }
  }
  return cfg;
}

// Random tasks over the city's things and FNs, sorted by arrival.
inline ArrivalSeries random_tasks(Gen& g, const TopologyConfig& city, int max_tasks,
                                  double horizon_s) {
  ArrivalSeries s;
  s.horizon_s = horizon_s;
  const int n = g.integer(0, max_tasks);
  for (int i = 0; i < n; ++i) {
    const auto& src = city.things[static_cast<std::size_t>(g.integer(0, static_cast<int>(city.things.size()) - 1))];
    Endpoint dst;
    if (g.coin(0.2)) {
      dst = city.fns[static_cast<std::size_t>(g.integer(0, static_cast<int>(city.fns.size()) - 1))].id;
    } else {
      ThingId d = src.id;
      while (d == src.id) {
        d = city.things[static_cast<std::size_t>(g.integer(0, static_cast<int>(city.things.size()) - 1))].id;
      }
      dst = d;
    }
    const std::string app = g.coin(0.9) ? "app" : "other";
    s.tasks.push_back(make_task(static_cast<std::uint64_t>(i + 1), src.id.value, dst,
                                g.real(0.0, horizon_s * 1.05), g.real(1e3, 2e6),
                                g.coin(0.2) ? 0.0 : g.real(0, 4e6), app));
  }
  std::stable_sort(s.tasks.begin(), s.tasks.end(),
                   [](const AppTask& a, const AppTask& b) { return a.arrival_s < b.arrival_s; });
  return s;
}

inline std::filesystem::path scratch_dir(const std::string& name) {
  const auto dir = std::filesystem::temp_directory_path() / ("focan_test_" + name);
  std::filesystem::remove_all(dir);
  std::filesystem::create_directories(dir);
  return dir;
}

inline std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

inline void spit(const std::filesystem::path& p, const std::string& body) {
  std::ofstream out(p, std::ios::binary);
  out << body;
}

}  // namespace focan::test

#endif  // FOCAN_TESTS_HELPERS_HPP_
