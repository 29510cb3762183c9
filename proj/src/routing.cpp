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

#include "focan/routing.hpp"

#include <algorithm>
#include <cmath>
#include <deque>
#include <numeric>
#include <unordered_map>

namespace focan {

NoRoute::NoRoute(FnId src, FnId dst)
    : RoutingFailure("no route from FN " + to_string(src) + " to FN " + to_string(dst)),
      src_(src),
      dst_(dst) {}

RoutePath find_path(FnId src, FnId dst, const FnGraph& graph) {
  if (!graph.contains(src) || !graph.contains(dst)) throw NoRoute(src, dst);
  if (src == dst) return RoutePath{{src}, Direction::Forward};

  // BFS distances from the destination, then walk greedily from the source
  // through the smallest neighbor that is one hop closer. This yields the
  // lexicographically smallest among all minimum-hop paths.
  std::unordered_map<FnId, std::size_t> dist;
  std::deque<FnId> frontier{dst};
  dist[dst] = 0;
  while (!frontier.empty()) {
    const FnId u = frontier.front();
    frontier.pop_front();
    if (u == src) break;
    for (FnId v : graph.neighbors(u)) {
      if (dist.emplace(v, dist[u] + 1).second) frontier.push_back(v);
    }
  }
  auto it = dist.find(src);
  if (it == dist.end()) throw NoRoute(src, dst);

  RoutePath path;
  path.direction = Direction::Forward;
  path.hops.reserve(it->second + 1);
  FnId cur = src;
  path.hops.push_back(cur);
  while (cur != dst) {
    const std::size_t want = dist.at(cur) - 1;
    for (FnId v : graph.neighbors(cur)) {  // sorted ascending
      auto d = dist.find(v);
      if (d != dist.end() && d->second == want) {
        cur = v;
        break;
      }
    }
    path.hops.push_back(cur);
  }
  return path;
}

RoutePath reverse_path(const RoutePath& path) {
  if (path.direction != Direction::Forward) {
    throw std::logic_error("reverse_path: path is already a return path");
  }
  RoutePath out;
  out.hops.assign(path.hops.rbegin(), path.hops.rend());
  out.direction = Direction::Return;
  return out;
}

double default_slot_duration(double max_packet_bits, double link_bandwidth_bps) {
  if (!(max_packet_bits > 0.0) || !(link_bandwidth_bps > 0.0)) {
    throw std::invalid_argument("default_slot_duration: packet size and bandwidth must be > 0");
  }
  return max_packet_bits / link_bandwidth_bps;
}

std::optional<SlotKey> TdmaSchedule::slot_of(std::uint64_t packet_id) const {
  for (const auto& [key, id] : assignments) {
    if (id == packet_id) return key;
  }
  return std::nullopt;
}

std::uint32_t TdmaSchedule::max_round() const {
  std::uint32_t r = 0;
  for (const auto& [key, _] : assignments) r = std::max(r, key.round);
  return r;
}

void validate(const TdmaConfig& config) {
  if (config.slots_per_round == 0) throw TdmaConfigError("tdma: slots_per_round must be > 0");
  if (config.ttl_rounds == 0) throw TdmaConfigError("tdma: ttl_rounds must be > 0");
  if (!(config.slot_duration_s > 0.0) || !std::isfinite(config.slot_duration_s)) {
    throw TdmaConfigError("tdma: slot_duration_s must be > 0");
  }
}

TdmaSchedule tdma_schedule(std::span<const Packet> packets, const TdmaConfig& config,
                           TdmaPriority priority) {
  validate(config);

  std::vector<std::size_t> order(packets.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  auto class_rank = [priority](PacketClass c) {
    switch (priority) {
      case TdmaPriority::SecondaryFirst: return c == PacketClass::SecondaryTask ? 0 : 1;
      case TdmaPriority::PrimaryFirst: return c == PacketClass::PrimaryTask ? 0 : 1;
      case TdmaPriority::InputOrder: return 0;
    }
    return 0;
  };
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const Packet& pa = packets[a];
    const Packet& pb = packets[b];
    if (pa.ready_s != pb.ready_s) return pa.ready_s < pb.ready_s;
    return class_rank(pa.cls) < class_rank(pb.cls);
  });

  TdmaSchedule schedule;
  std::map<LinkRef, std::uint64_t> used;  // slots consumed per link
  const std::uint64_t capacity =
      static_cast<std::uint64_t>(config.slots_per_round) * config.ttl_rounds;
  for (std::size_t idx : order) {
    const Packet& p = packets[idx];
    std::uint64_t& n = used[p.link];
    if (n >= capacity) {
      schedule.dropped.insert(p.id);
      continue;
    }
    SlotKey key;
    key.round = static_cast<std::uint32_t>(n / config.slots_per_round) + 1;
    key.slot = static_cast<std::uint32_t>(n % config.slots_per_round);
    key.link = p.link;
    schedule.assignments.emplace(key, p.id);
    ++n;
  }
  return schedule;
}

}  // namespace focan
