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

#include <algorithm>
#include <map>

#include "doctest.h"
#include "focan/routing.hpp"
#include "helpers.hpp"

using namespace focan;

namespace {

constexpr FnId A{1}, B{2}, C{3}, D{4};

FnGraph graph_of(std::initializer_list<std::pair<FnId, FnId>> edges) {
  FnGraph g;
  for (auto [a, b] : edges) g.add_edge(a, b);
  return g;
}

Packet packet(std::uint64_t id, LinkRef link, double ready = 0.0,
              PacketClass cls = PacketClass::SecondaryTask) {
  return Packet{id, id, link, 1e6, cls, ready};
}

void check_schedule(std::span<const Packet> packets, const TdmaConfig& cfg, const TdmaSchedule& s) {
  std::set<std::uint64_t> seen;
  for (const auto& [key, id] : s.assignments) {
    CHECK(key.round >= 1);
    CHECK(key.round <= cfg.ttl_rounds);
    CHECK(key.slot < cfg.slots_per_round);
    CHECK(seen.insert(id).second);  // a packet occupies one slot only
  }
  for (std::uint64_t id : s.dropped) CHECK(seen.insert(id).second);
  std::set<std::uint64_t> input;
  for (const Packet& p : packets) input.insert(p.id);
  CHECK(seen == input);
  // each assignment sits on its packet's own link
  std::map<std::uint64_t, LinkRef> link_of;
  for (const Packet& p : packets) link_of[p.id] = p.link;
  for (const auto& [key, id] : s.assignments) CHECK(key.link == link_of[id]);
}

}  // namespace

TEST_CASE("find_path examples") {
  const FnGraph line = graph_of({{A, B}, {B, C}});
  const RoutePath p = find_path(A, C, line);
  CHECK(p.hops == std::vector<FnId>{A, B, C});
  CHECK(p.hop_count() == 2);
  CHECK(p.direction == Direction::Forward);

  const RoutePath self = find_path(A, A, line);
  CHECK(self.hops == std::vector<FnId>{A});
  CHECK(self.hop_count() == 0);

  SUBCASE("4-cycle tie goes to the smaller intermediate") {
    const FnGraph cycle = graph_of({{A, B}, {B, C}, {C, D}, {D, A}});
    const auto paths = focan::test::all_simple_paths(cycle, A, C);
    REQUIRE(paths.size() == 2);
    for (const auto& q : paths) CHECK(q.size() == 3);  // both are 2 hops
    const auto lex_min = *std::min_element(paths.begin(), paths.end());
    CHECK(lex_min == std::vector<FnId>{A, B, C});
    CHECK(find_path(A, C, cycle).hops == lex_min);
  }
}

TEST_CASE("find_path reports unreachable pairs") {
  FnGraph g = graph_of({{A, B}});
  g.add_node(C);
  try {
    (void)find_path(A, C, g);
    FAIL("expected NoRoute");
  } catch (const NoRoute& e) {
    CHECK(e.src() == A);
    CHECK(e.dst() == C);
  }
  CHECK_THROWS_AS(find_path(A, FnId{42}, g), NoRoute);
}

TEST_CASE("reverse_path") {
  const RoutePath fwd{{A, B, C}, Direction::Forward};
  const RoutePath back = reverse_path(fwd);
  CHECK(back.hops == std::vector<FnId>{C, B, A});
  CHECK(back.direction == Direction::Return);
  CHECK(back.hop_count() == fwd.hop_count());

  const RoutePath single = reverse_path(RoutePath{{A}, Direction::Forward});
  CHECK(single.hops == std::vector<FnId>{A});
  CHECK(single.direction == Direction::Return);

  CHECK_THROWS_AS(reverse_path(back), std::logic_error);
}

TEST_CASE("tdma_schedule examples") {
  const LinkRef l1{A, B}, l2{B, C};
  TdmaConfig cfg;
  cfg.slots_per_round = 1;
  cfg.ttl_rounds = 3;

  SUBCASE("exact fit") {
    const std::vector<Packet> ps = {packet(1, l1), packet(2, l1), packet(3, l1)};
    const TdmaSchedule s = tdma_schedule(ps, cfg);
    CHECK(s.dropped.empty());
    CHECK(s.slot_of(1)->round == 1);
    CHECK(s.slot_of(2)->round == 2);
    CHECK(s.slot_of(3)->round == 3);
    check_schedule(ps, cfg, s);
  }
  SUBCASE("pigeonhole") {
    const std::vector<Packet> ps = {packet(1, l1), packet(2, l1), packet(3, l1), packet(4, l1)};
    const TdmaSchedule s = tdma_schedule(ps, cfg);
    CHECK(s.assignments.size() == 3);
    CHECK(s.dropped == std::set<std::uint64_t>{4});
    check_schedule(ps, cfg, s);
  }
  SUBCASE("two links, exhaustive feasibility") {
    cfg.slots_per_round = 2;
    cfg.ttl_rounds = 2;
    std::vector<Packet> ps;
    for (std::uint64_t i = 1; i <= 6; ++i) ps.push_back(packet(i, i <= 3 ? l1 : l2));
    // oracle: count conflict-free placements of the 6 packets into the
    // 4 (round, slot) cells of their own link
    int feasible = 0;
    for (int code = 0; code < 4096; ++code) {
      std::set<std::pair<int, int>> used;  // (cell, link)
      bool ok = true;
      for (int i = 0; i < 6 && ok; ++i) {
        const int cell = (code >> (2 * i)) & 3;
        ok = used.insert({cell, i < 3 ? 0 : 1}).second;
      }
      feasible += ok ? 1 : 0;
    }
    REQUIRE(feasible > 0);
    const TdmaSchedule s = tdma_schedule(ps, cfg);
    CHECK(s.dropped.empty());
    CHECK(s.max_round() <= 2);
    check_schedule(ps, cfg, s);
  }
  SUBCASE("zero slots is a config error") {
    cfg.slots_per_round = 0;
    CHECK_THROWS_AS(tdma_schedule(std::vector<Packet>{packet(1, l1)}, cfg), TdmaConfigError);
    cfg.slots_per_round = 1;
    cfg.ttl_rounds = 0;
    CHECK_THROWS_AS(validate(cfg), TdmaConfigError);
    cfg.ttl_rounds = 1;
    cfg.slot_duration_s = 0.0;
    CHECK_THROWS_AS(validate(cfg), TdmaConfigError);
  }
}

TEST_CASE("tdma ordering: FIFO, secondary before primary on ties") {
  const LinkRef l{A, B};
  TdmaConfig cfg;
  cfg.slots_per_round = 4;
  cfg.ttl_rounds = 1;
  const std::vector<Packet> ps = {
      packet(1, l, 0.5, PacketClass::SecondaryTask),
      packet(2, l, 0.1, PacketClass::PrimaryTask),
      packet(3, l, 0.1, PacketClass::SecondaryTask),
  };
  const TdmaSchedule s = tdma_schedule(ps, cfg);
  CHECK(s.slot_of(3)->slot == 0);
  CHECK(s.slot_of(2)->slot == 1);
  CHECK(s.slot_of(1)->slot == 2);

  const TdmaSchedule p = tdma_schedule(ps, cfg, TdmaPriority::PrimaryFirst);
  CHECK(p.slot_of(2)->slot == 0);
  CHECK(p.slot_of(3)->slot == 1);
}

TEST_CASE("default slot fits one packet") {
  CHECK(default_slot_duration(1e6, 1e9) == doctest::Approx(1e-3));
  CHECK_THROWS(default_slot_duration(1e6, 0.0));
}

// --- properties -----------------------------------------------------------

TEST_CASE("property: find_path is a lexicographically minimal shortest path") {
  focan::test::Gen g(77);
  for (int trial = 0; trial < 300; ++trial) {
    const int n = g.integer(1, 8);
    const FnGraph graph = focan::test::random_connected_graph(g, n, g.real(0.0, 0.5));
    const FnId s{static_cast<std::uint32_t>(g.integer(1, n))};
    const FnId d{static_cast<std::uint32_t>(g.integer(1, n))};
    const RoutePath p = find_path(s, d, graph);
    const auto all = focan::test::all_simple_paths(graph, s, d);
    std::vector<std::vector<FnId>> shortest;
    const std::size_t best = focan::test::brute_min_hops(graph, s, d);
    for (const auto& q : all) {
      if (q.size() - 1 == best) shortest.push_back(q);
    }
    CHECK(p.hop_count() == best);
    CHECK(p.hops == *std::min_element(shortest.begin(), shortest.end()));
    for (std::size_t i = 0; i + 1 < p.hops.size(); ++i) CHECK(graph.has_edge(p.hops[i], p.hops[i + 1]));

    const RoutePath r = reverse_path(p);
    CHECK(r.hop_count() == p.hop_count());
    for (std::size_t i = 0; i + 1 < r.hops.size(); ++i) CHECK(graph.has_edge(r.hops[i], r.hops[i + 1]));
  }
}

TEST_CASE("property: TDMA exclusivity, TTL bound and partition") {
  focan::test::Gen g(5150);
  const std::vector<LinkRef> links = {{A, B}, {B, A}, {B, C}, {C, D}, {A, D}};
  for (int trial = 0; trial < 300; ++trial) {
    TdmaConfig cfg;
    cfg.slots_per_round = static_cast<std::uint32_t>(g.integer(1, 6));
    cfg.ttl_rounds = static_cast<std::uint32_t>(g.integer(1, 8));
    const int n_links = g.integer(1, 5);
    std::vector<Packet> ps;
    const int n = g.integer(0, 200);
    for (int i = 0; i < n; ++i) {
      ps.push_back(packet(static_cast<std::uint64_t>(i + 1),
                          links[static_cast<std::size_t>(g.integer(0, n_links - 1))],
                          g.integer(0, 20) * 0.001,
                          g.coin() ? PacketClass::PrimaryTask : PacketClass::SecondaryTask));
    }
    const TdmaSchedule s = tdma_schedule(ps, cfg);
    check_schedule(ps, cfg, s);
    // a link only drops once its capacity is exhausted
    std::map<LinkRef, std::size_t> offered, placed;
    for (const Packet& p : ps) ++offered[p.link];
    for (const auto& [key, _] : s.assignments) ++placed[key.link];
    for (const auto& [link, count] : offered) {
      CHECK(placed[link] == std::min<std::size_t>(count, cfg.slots_per_round * cfg.ttl_rounds));
    }
  }
}
