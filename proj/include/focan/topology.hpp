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

// Static city model: things, fog nodes, clustering, link classes and the
// FN-to-FN adjacency graph.

#ifndef FOCAN_TOPOLOGY_HPP_
#define FOCAN_TOPOLOGY_HPP_

#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "focan/ids.hpp"

namespace focan {

struct Position {
  double x = 0.0;  // meters
  double y = 0.0;  // meters
};

double distance(Position a, Position b);

struct Thing {
  ThingId id;
  Position pos;
  std::set<Radio> radios;
  std::set<std::string> authorized_apps;
};

struct FogNode {
  FnId id;
  Position pos;
  double coverage_radius_m = 30.0;
  int cores = 6;
  double core_rate_bps = 10e6;
  // Carried as metadata only; never constrains execution.
  double ram_per_core_bytes = 6.0 * 1024 * 1024 * 1024;
  std::size_t storage_capacity = 8;  // number of cached applications
};

struct RangeConfig {
  double short_range_m = 10.0;  // Bluetooth / ZigBee
  double wifi_range_m = 30.0;
};

// Per-class fixed delays and round trip times of the three link patterns.
struct DelayConfig {
  double t2t_s = 0.002;
  double tfnt_s = 0.004;
  double fn2fn_s = 0.006;  // per FN2FN hop
  double wireless_rtt_s = 0.0005;
  double wired_rtt_s = 0.010;
};

struct CommLink {
  Endpoint a;
  Endpoint b;
  CommType comm_type = CommType::Primary;
  Medium medium = Medium::Wireless;
  double bandwidth_bps = 0.0;
  double one_way_delay_s = 0.0;
  double rtt_s = 0.0;
};

class TopologyError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// Undirected, loop-free adjacency over FN ids. Neighbor lists are sorted.
class FnGraph {
 public:
  void add_node(FnId id);
  void add_edge(FnId a, FnId b);

  bool contains(FnId id) const { return adj_.count(id) != 0; }
  bool has_edge(FnId a, FnId b) const;
  std::span<const FnId> neighbors(FnId id) const;
  std::vector<FnId> nodes() const;
  // Each undirected edge once, as (smaller, larger), sorted.
  std::vector<std::pair<FnId, FnId>> edges() const;
  std::size_t node_count() const { return adj_.size(); }
  std::size_t edge_count() const;

 private:
  std::map<FnId, std::vector<FnId>> adj_;
};

struct TopologyConfig {
  std::vector<Thing> things;
  std::vector<FogNode> fns;
  // Absent: all FNs share one switch (complete graph).
  std::optional<std::vector<std::pair<FnId, FnId>>> fn_edges;
  RangeConfig ranges;
  double fn_link_bandwidth_bps = 1e9;
  double wireless_bandwidth_bps = 54e6;
};

class CityTopology {
 public:
  const std::vector<Thing>& things() const { return things_; }
  const std::vector<FogNode>& fns() const { return fns_; }
  const Thing* find_thing(ThingId id) const;
  const FogNode* find_fn(FnId id) const;
  const Thing& thing(ThingId id) const;
  const FogNode& fn(FnId id) const;

  // nullopt means the thing is not covered by any FN.
  std::optional<FnId> cluster_of(ThingId id) const;
  const std::map<ThingId, std::optional<FnId>>& clusters() const { return cluster_of_; }

  const FnGraph& fn_graph() const { return graph_; }
  const RangeConfig& ranges() const { return ranges_; }
  double fn_link_bandwidth_bps() const { return fn_link_bandwidth_bps_; }
  double wireless_bandwidth_bps() const { return wireless_bandwidth_bps_; }
  Position position_of(const Endpoint& e) const;
  bool contains(const Endpoint& e) const;

 private:
  friend CityTopology build_topology(const TopologyConfig& config);

  std::vector<Thing> things_;
  std::vector<FogNode> fns_;
  std::unordered_map<ThingId, std::size_t> thing_index_;
  std::unordered_map<FnId, std::size_t> fn_index_;
  std::map<ThingId, std::optional<FnId>> cluster_of_;
  FnGraph graph_;
  RangeConfig ranges_;
  double fn_link_bandwidth_bps_ = 1e9;
  double wireless_bandwidth_bps_ = 54e6;
};

// Validates the config and clusters every thing. Throws TopologyError on
// duplicate ids, non-finite positions, bad radii or unknown edge endpoints.
CityTopology build_topology(const TopologyConfig& config);

// Nearest FN whose coverage radius contains the position; ties go to the
// lower FN id.
std::optional<FnId> assign_cluster(Position pos, std::span<const FogNode> fns);
std::optional<FnId> assign_cluster(const Thing& thing, const CityTopology& topology);

// Communication class of the pair (symmetric). Thing pairs out of every
// direct radio range classify as Secondary since they need FN relaying.
CommType classify_link(const Endpoint& a, const Endpoint& b, const CityTopology& topology);

// Link description with medium, bandwidth, one-way delay and RTT.
CommLink describe_link(const Endpoint& a, const Endpoint& b, const CityTopology& topology,
                       const DelayConfig& delays);

const FnGraph& fn_adjacency(const CityTopology& topology);

// Four FNs on a 60 m grid with 40 things placed inside their clusters.
// Used when a run config carries no explicit topology.
TopologyConfig default_city();

}  // namespace focan

#endif  // FOCAN_TOPOLOGY_HPP_
