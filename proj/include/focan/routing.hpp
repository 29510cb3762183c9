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

// FN-to-FN path finding and TDMA slot scheduling on FN2FN links.

#ifndef FOCAN_ROUTING_HPP_
#define FOCAN_ROUTING_HPP_

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <vector>

#include "focan/ids.hpp"
#include "focan/topology.hpp"

namespace focan {

// Forward paths carry label 1, return paths label 0.
enum class Direction : int { Return = 0, Forward = 1 };

struct RoutePath {
  std::vector<FnId> hops;
  Direction direction = Direction::Forward;

  std::size_t hop_count() const { return hops.empty() ? 0 : hops.size() - 1; }
  FnId source() const { return hops.front(); }
  FnId destination() const { return hops.back(); }
};

// Base of every reason a task cannot be routed.
class RoutingFailure : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoRoute : public RoutingFailure {
 public:
  NoRoute(FnId src, FnId dst);
  FnId src() const { return src_; }
  FnId dst() const { return dst_; }

 private:
  FnId src_;
  FnId dst_;
};

// Minimum-hop path with direction Forward. Among minimum-hop paths the
// lexicographically smallest id sequence wins. Throws NoRoute.
RoutePath find_path(FnId src, FnId dst, const FnGraph& graph);

using PathFinder = std::function<RoutePath(FnId, FnId, const FnGraph&)>;

// Throws std::logic_error when the path is already a return path.
RoutePath reverse_path(const RoutePath& path);

struct TdmaConfig {
  double slot_duration_s = 0.001;
  std::uint32_t slots_per_round = 10;
  std::uint32_t ttl_rounds = 10;

  double round_duration_s() const { return slot_duration_s * slots_per_round; }
};

// Slot length that fits one maximum-size packet on the link.
double default_slot_duration(double max_packet_bits, double link_bandwidth_bps);

// Directed FN2FN link.
struct LinkRef {
  FnId from;
  FnId to;
  auto operator<=>(const LinkRef&) const = default;
};

enum class PacketClass : std::uint8_t { SecondaryTask, PrimaryTask };

struct Packet {
  std::uint64_t id = 0;
  std::uint64_t task_id = 0;
  LinkRef link;
  double size_bits = 0.0;
  PacketClass cls = PacketClass::SecondaryTask;
  double ready_s = 0.0;  // arrival time at the link queue
};

// Tie rule between classes that become ready at the same instant.
enum class TdmaPriority : std::uint8_t { SecondaryFirst, PrimaryFirst, InputOrder };

struct SlotKey {
  std::uint32_t round = 0;  // 1-based
  std::uint32_t slot = 0;   // 0-based within the round
  LinkRef link;
  auto operator<=>(const SlotKey&) const = default;
};

struct TdmaSchedule {
  std::map<SlotKey, std::uint64_t> assignments;
  std::set<std::uint64_t> dropped;

  std::optional<SlotKey> slot_of(std::uint64_t packet_id) const;
  std::uint32_t max_round() const;
};

class TdmaConfigError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

// FIFO by ready time (earliest deadline first under a common TTL), each
// link filling its slots in order. Packets that do not fit in ttl_rounds
// rounds are dropped. Throws TdmaConfigError on non-positive config.
TdmaSchedule tdma_schedule(std::span<const Packet> packets, const TdmaConfig& config,
                           TdmaPriority priority = TdmaPriority::SecondaryFirst);

void validate(const TdmaConfig& config);

}  // namespace focan

#endif  // FOCAN_ROUTING_HPP_
