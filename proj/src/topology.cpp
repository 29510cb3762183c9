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

#include "focan/topology.hpp"

#include <algorithm>
#include <cmath>
#include <random>

namespace focan {

std::string_view to_string(CommType c) {
  switch (c) {
    case CommType::Interprimary: return "interprimary";
    case CommType::Primary: return "primary";
    case CommType::Secondary: return "secondary";
  }
  return "?";
}

std::string_view to_string(Medium m) { return m == Medium::Wired ? "wired" : "wireless"; }

std::string_view to_string(Radio r) {
  switch (r) {
    case Radio::Bluetooth: return "bluetooth";
    case Radio::ZigBee: return "zigbee";
    case Radio::WiFi: return "wifi";
  }
  return "?";
}

std::optional<CommType> parse_comm_type(std::string_view s) {
  for (CommType c : kAllCommTypes) {
    if (to_string(c) == s) return c;
  }
  return std::nullopt;
}

std::optional<Radio> parse_radio(std::string_view s) {
  for (Radio r : {Radio::Bluetooth, Radio::ZigBee, Radio::WiFi}) {
    if (to_string(r) == s) return r;
  }
  return std::nullopt;
}

std::string to_string(FnId id) {
  if (id == kUnattributed) return "-";
  return std::to_string(id.value);
}

std::string to_string(ThingId id) { return std::to_string(id.value); }

std::string to_string(const Endpoint& e) {
  if (const auto* t = std::get_if<ThingId>(&e)) return "t" + std::to_string(t->value);
  return "fn" + std::to_string(std::get<FnId>(e).value);
}

double distance(Position a, Position b) { return std::hypot(a.x - b.x, a.y - b.y); }

// ---------------------------------------------------------------------------
// FnGraph

void FnGraph::add_node(FnId id) { adj_.try_emplace(id); }

void FnGraph::add_edge(FnId a, FnId b) {
  if (a == b) throw TopologyError("self-loop on FN " + to_string(a));
  auto insert_sorted = [](std::vector<FnId>& v, FnId x) {
    auto it = std::lower_bound(v.begin(), v.end(), x);
    if (it == v.end() || *it != x) v.insert(it, x);
  };
  insert_sorted(adj_[a], b);
  insert_sorted(adj_[b], a);
}

bool FnGraph::has_edge(FnId a, FnId b) const {
  auto it = adj_.find(a);
  if (it == adj_.end()) return false;
  return std::binary_search(it->second.begin(), it->second.end(), b);
}

std::span<const FnId> FnGraph::neighbors(FnId id) const {
  auto it = adj_.find(id);
  if (it == adj_.end()) return {};
  return it->second;
}

std::vector<FnId> FnGraph::nodes() const {
  std::vector<FnId> out;
  out.reserve(adj_.size());
  for (const auto& [id, _] : adj_) out.push_back(id);
  return out;
}

std::vector<std::pair<FnId, FnId>> FnGraph::edges() const {
  std::vector<std::pair<FnId, FnId>> out;
  for (const auto& [a, ns] : adj_) {
    for (FnId b : ns) {
      if (a < b) out.emplace_back(a, b);
    }
  }
  return out;
}

std::size_t FnGraph::edge_count() const {
  std::size_t degree_sum = 0;
  for (const auto& [_, ns] : adj_) degree_sum += ns.size();
  return degree_sum / 2;
}

// ---------------------------------------------------------------------------
// CityTopology

const Thing* CityTopology::find_thing(ThingId id) const {
  auto it = thing_index_.find(id);
  return it == thing_index_.end() ? nullptr : &things_[it->second];
}

const FogNode* CityTopology::find_fn(FnId id) const {
  auto it = fn_index_.find(id);
  return it == fn_index_.end() ? nullptr : &fns_[it->second];
}

const Thing& CityTopology::thing(ThingId id) const {
  const Thing* t = find_thing(id);
  if (t == nullptr) throw TopologyError("unknown thing " + to_string(id));
  return *t;
}

const FogNode& CityTopology::fn(FnId id) const {
  const FogNode* f = find_fn(id);
  if (f == nullptr) throw TopologyError("unknown FN " + to_string(id));
  return *f;
}

std::optional<FnId> CityTopology::cluster_of(ThingId id) const {
  auto it = cluster_of_.find(id);
  if (it == cluster_of_.end()) throw TopologyError("unknown thing " + to_string(id));
  return it->second;
}

Position CityTopology::position_of(const Endpoint& e) const {
  if (const auto* t = std::get_if<ThingId>(&e)) return thing(*t).pos;
  return fn(std::get<FnId>(e)).pos;
}

bool CityTopology::contains(const Endpoint& e) const {
  if (const auto* t = std::get_if<ThingId>(&e)) return find_thing(*t) != nullptr;
  return find_fn(std::get<FnId>(e)) != nullptr;
}

namespace {

bool finite(Position p) { return std::isfinite(p.x) && std::isfinite(p.y); }

}  // namespace

CityTopology build_topology(const TopologyConfig& config) {
  const RangeConfig& r = config.ranges;
  if (!(r.short_range_m > 0.0) || !(r.wifi_range_m > 0.0)) {
    throw TopologyError("radio ranges must be > 0");
  }
  if (r.short_range_m > r.wifi_range_m) {
    throw TopologyError("short_range_m must not exceed wifi_range_m");
  }

  CityTopology topo;
  topo.ranges_ = r;
  topo.fn_link_bandwidth_bps_ = config.fn_link_bandwidth_bps;
  topo.wireless_bandwidth_bps_ = config.wireless_bandwidth_bps;

  topo.fns_ = config.fns;
  std::sort(topo.fns_.begin(), topo.fns_.end(),
            [](const FogNode& a, const FogNode& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < topo.fns_.size(); ++i) {
    const FogNode& f = topo.fns_[i];
    if (!topo.fn_index_.emplace(f.id, i).second) {
      throw TopologyError("duplicate FN id " + to_string(f.id));
    }
    if (!finite(f.pos)) throw TopologyError("FN " + to_string(f.id) + ": non-finite position");
    if (!(f.coverage_radius_m > 0.0)) {
      throw TopologyError("FN " + to_string(f.id) + ": coverage radius must be > 0");
    }
    // The FN access network is a primary (WiFi-class) link, so its
    // coverage cannot reach past the WiFi range.
    if (f.coverage_radius_m > r.wifi_range_m) {
      throw TopologyError("FN " + to_string(f.id) + ": coverage radius exceeds wifi_range_m");
    }
    if (f.cores < 1) throw TopologyError("FN " + to_string(f.id) + ": cores must be >= 1");
    if (!(f.core_rate_bps > 0.0)) {
      throw TopologyError("FN " + to_string(f.id) + ": core_rate must be > 0");
    }
    topo.graph_.add_node(f.id);
  }

  topo.things_ = config.things;
  std::sort(topo.things_.begin(), topo.things_.end(),
            [](const Thing& a, const Thing& b) { return a.id < b.id; });
  for (std::size_t i = 0; i < topo.things_.size(); ++i) {
    const Thing& t = topo.things_[i];
    if (!topo.thing_index_.emplace(t.id, i).second) {
      throw TopologyError("duplicate thing id " + to_string(t.id));
    }
    if (!finite(t.pos)) {
      throw TopologyError("thing " + to_string(t.id) + ": non-finite position");
    }
    if (t.radios.empty()) {
      throw TopologyError("thing " + to_string(t.id) + ": needs at least one radio");
    }
    topo.cluster_of_[t.id] = assign_cluster(t.pos, topo.fns_);
  }

  if (config.fn_edges) {
    for (const auto& [a, b] : *config.fn_edges) {
      if (!topo.graph_.contains(a) || !topo.graph_.contains(b)) {
        throw TopologyError("fn_edges references unknown FN " +
                            to_string(topo.graph_.contains(a) ? b : a));
      }
      topo.graph_.add_edge(a, b);
    }
  } else {
    for (std::size_t i = 0; i < topo.fns_.size(); ++i) {
      for (std::size_t j = i + 1; j < topo.fns_.size(); ++j) {
        topo.graph_.add_edge(topo.fns_[i].id, topo.fns_[j].id);
      }
    }
  }
  return topo;
}

std::optional<FnId> assign_cluster(Position pos, std::span<const FogNode> fns) {
  std::optional<FnId> best;
  double best_d = 0.0;
  for (const FogNode& f : fns) {
    const double d = distance(pos, f.pos);
    if (d > f.coverage_radius_m) continue;
    if (!best || d < best_d || (d == best_d && f.id < *best)) {
      best = f.id;
      best_d = d;
    }
  }
  return best;
}

std::optional<FnId> assign_cluster(const Thing& thing, const CityTopology& topology) {
  return assign_cluster(thing.pos, topology.fns());
}

namespace {

bool shares_short_radio(const Thing& a, const Thing& b) {
  for (Radio r : {Radio::Bluetooth, Radio::ZigBee}) {
    if (a.radios.count(r) != 0 && b.radios.count(r) != 0) return true;
  }
  return false;
}

}  // namespace

CommType classify_link(const Endpoint& a, const Endpoint& b, const CityTopology& topology) {
  if (!topology.contains(a)) throw TopologyError("endpoint " + to_string(a) + " not in topology");
  if (!topology.contains(b)) throw TopologyError("endpoint " + to_string(b) + " not in topology");
  if (a == b) throw TopologyError("classify_link needs two distinct endpoints");

  const auto* ta = std::get_if<ThingId>(&a);
  const auto* tb = std::get_if<ThingId>(&b);
  const RangeConfig& r = topology.ranges();
  const double d = distance(topology.position_of(a), topology.position_of(b));

  if (ta == nullptr && tb == nullptr) return CommType::Secondary;
  if (ta != nullptr && tb != nullptr) {
    const Thing& x = topology.thing(*ta);
    const Thing& y = topology.thing(*tb);
    if (d <= r.short_range_m && shares_short_radio(x, y)) return CommType::Interprimary;
    if (d <= r.wifi_range_m && x.radios.count(Radio::WiFi) != 0 &&
        y.radios.count(Radio::WiFi) != 0) {
      return CommType::Primary;
    }
    return CommType::Secondary;
  }
  // thing <-> FN: the FN's access network
  return d <= r.wifi_range_m ? CommType::Primary : CommType::Secondary;
}

CommLink describe_link(const Endpoint& a, const Endpoint& b, const CityTopology& topology,
                       const DelayConfig& delays) {
  CommLink link;
  link.a = a;
  link.b = b;
  link.comm_type = classify_link(a, b, topology);
  const bool fn_pair = std::holds_alternative<FnId>(a) && std::holds_alternative<FnId>(b);
  if (fn_pair) {
    link.medium = Medium::Wired;
    link.bandwidth_bps = topology.fn_link_bandwidth_bps();
    link.one_way_delay_s = delays.fn2fn_s;
    link.rtt_s = delays.wired_rtt_s;
  } else {
    link.medium = Medium::Wireless;
    link.bandwidth_bps = topology.wireless_bandwidth_bps();
    const bool thing_pair = std::holds_alternative<ThingId>(a) && std::holds_alternative<ThingId>(b);
    if (thing_pair && link.comm_type != CommType::Secondary) {
      link.one_way_delay_s = delays.t2t_s;
    } else {
      link.one_way_delay_s = delays.tfnt_s;
    }
    link.rtt_s = delays.wireless_rtt_s;
  }
  return link;
}

const FnGraph& fn_adjacency(const CityTopology& topology) { return topology.fn_graph(); }

TopologyConfig default_city() {
  TopologyConfig cfg;
  const Position centers[] = {{0, 0}, {60, 0}, {0, 60}, {60, 60}};
  for (std::uint32_t i = 0; i < 4; ++i) {
    FogNode f;
    f.id = FnId{i + 1};
    f.pos = centers[i];
    cfg.fns.push_back(f);
  }
  std::mt19937_64 rng(20180416);
  std::uniform_real_distribution<double> radius(0.0, 25.0);
  std::uniform_real_distribution<double> angle(0.0, 2.0 * 3.14159265358979323846);
  for (std::uint32_t i = 0; i < 40; ++i) {
    Thing t;
    t.id = ThingId{i + 1};
    const Position c = centers[i % 4];
    const double rho = radius(rng);
    const double phi = angle(rng);
    t.pos = {c.x + rho * std::cos(phi), c.y + rho * std::sin(phi)};
    t.radios.insert(Radio::WiFi);
    if (i % 2 == 0) t.radios.insert(Radio::Bluetooth);
    if (i % 3 == 0) t.radios.insert(Radio::ZigBee);
    t.authorized_apps = {"messenger"};
    cfg.things.push_back(std::move(t));
  }
  return cfg;
}

}  // namespace focan
