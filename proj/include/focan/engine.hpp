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

// Discrete-event core. A task is authorized at its source, admitted and
// loaded at the ingress FN, carried over FN2FN hops when the destination
// sits in another cluster, executed and stored at the executing FN, and
// finally delivered. Cross-cluster tasks send an acknowledgment back along
// the return path.

#ifndef FOCAN_ENGINE_HPP_
#define FOCAN_ENGINE_HPP_

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "focan/energy.hpp"
#include "focan/fn_server.hpp"
#include "focan/ids.hpp"
#include "focan/routing.hpp"
#include "focan/topology.hpp"
#include "focan/workload.hpp"

namespace focan {

enum class EventKind : std::uint8_t {
  Arrival = 0,
  AuthDone,
  LoadDone,
  ExecDone,
  StoreDone,
  LinkDeliver,
  TdmaRound,
  CloudAbstract,
  End,
};
std::string_view to_string(EventKind k);

// t2t: direct thing pair; tFNt: thing-FN-thing within a cluster (also the
// access leg between a thing and an FN); FN2FN: wired hops between FNs.
enum class LegPattern : std::uint8_t { T2T, TFNT, FN2FN };

// Fixed delay of a leg: t2t and tFNt are per leg, FN2FN is per hop. Throws
// std::invalid_argument for an FN2FN leg with zero hops.
double link_latency(LegPattern pattern, std::size_t hops, const DelayConfig& delays);

enum class RouteKind : std::uint8_t {
  Direct,        // t2t between things in radio range
  Relay,         // tFNt through the shared cluster FN
  LocalAccess,   // thing to an FN in its access range
  RemoteAccess,  // thing to a distant FN via its cluster FN
  CrossCluster,  // thing to a thing in another cluster
  D2D,           // baseline single-hop link
};
std::string_view to_string(RouteKind k);

struct PlannedLeg {
  LegPattern pattern = LegPattern::T2T;
  CommType comm_type = CommType::Primary;
  Medium medium = Medium::Wireless;
  Endpoint from = ThingId{};
  Endpoint to = ThingId{};
  std::size_t hops = 1;            // FN2FN hop count; 1 otherwise
  std::size_t transmissions = 1;   // radio transmissions that carry the payload
  double delay_s = 0.0;
};

struct DispatchPlan {
  RouteKind kind = RouteKind::Direct;
  CommType connection_class = CommType::Primary;
  FnId ingress_fn;  // admission, authorization and application load
  FnId exec_fn;     // execution and storage
  std::optional<RoutePath> path;  // forward FN path when FN2FN hops occur
  std::vector<PlannedLeg> legs;
  std::vector<EventKind> stages;

  std::size_t hop_count() const { return path ? path->hop_count() : 0; }
  double nominal_network_s() const;
};

class NoAccess : public RoutingFailure {
 public:
  using RoutingFailure::RoutingFailure;
};

// Plans a task's route. Throws NoRoute when the FN graph does not connect
// the two clusters and NoAccess when an endpoint has no FN to reach.
DispatchPlan dispatch(const AppTask& task, const CityTopology& topology, const DelayConfig& delays,
                      const PathFinder& path_finder = {});

struct EngineParams {
  double horizon_s = 1000.0;
  double round_s = 1.0;  // accounting round for utilization and energy
  DelayConfig delays;
  double admission_cap_bps = 2.5e9;
  double miss_penalty_s = 0.05;
  double auth_latency_s = 0.0;
  double ack_bits = 8000.0;
  TdmaConfig tdma;
  TdmaPriority tdma_priority = TdmaPriority::SecondaryFirst;
  PowerModel power;
  PathFinder path_finder;  // empty: find_path

  bool record_legs = false;
  bool record_events = false;
  bool record_admissions = false;
};

enum class TaskOutcome : std::uint8_t { InFlight, Completed, Failed, Rejected };
std::string_view to_string(TaskOutcome o);

struct LatencyRecord {
  std::uint64_t task_id = 0;
  std::string app_id;
  ThingId src;
  Endpoint dst = ThingId{};
  RouteKind kind = RouteKind::Direct;
  CommType comm_type = CommType::Primary;
  std::size_t hops = 0;
  TaskOutcome outcome = TaskOutcome::InFlight;
  double arrival_s = 0.0;
  double completion_s = -1.0;

  double network_s = 0.0;
  double admission_s = 0.0;
  double auth_s = 0.0;
  double load_s = 0.0;
  double tdma_wait_s = 0.0;
  double cpu_queue_s = 0.0;
  double exec_s = 0.0;
  double timeout_s = 0.0;  // D2D only
  std::uint32_t attempts = 0;
  std::uint32_t transmissions = 0;  // radio/wire transmissions charged to the task
  double net_j = 0.0;              // their network energy

  double total_s() const { return completion_s - arrival_s; }
  double component_sum_s() const {
    return network_s + admission_s + auth_s + load_s + tdma_wait_s + cpu_queue_s + exec_s +
           timeout_s;
  }
};

struct Counters {
  std::uint64_t arrived = 0;
  std::uint64_t completed = 0;
  std::uint64_t failed = 0;
  std::uint64_t rejected = 0;
  std::uint64_t in_flight = 0;

  std::uint64_t no_route = 0;
  std::uint64_t no_access = 0;
  std::uint64_t tdma_dropped = 0;
  std::uint64_t retries_exhausted = 0;
  std::uint64_t acks_sent = 0;
  std::uint64_t acks_delivered = 0;
  std::uint64_t acks_dropped = 0;
  std::uint64_t cloud_abstracts = 0;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;
  std::uint64_t transmissions = 0;
  std::uint64_t timeouts = 0;

  bool operator==(const Counters&) const = default;
};

// Network energy of every transmission, in order.
struct LegRecord {
  std::uint64_t task_id = 0;
  double time_s = 0.0;
  CommType comm_type = CommType::Primary;
  Medium medium = Medium::Wireless;
  double bits = 0.0;
  double joules = 0.0;
  FnId fn_a;
  FnId fn_b;
};

// Connections (tasks that transmitted at least once) and the network
// energy they used, grouped by the end-to-end class of the endpoint pair.
struct ConnectionStats {
  std::array<std::uint64_t, 3> count{};
  std::array<double, 3> net_joules{};

  bool operator==(const ConnectionStats&) const = default;
};

struct EventTrace {
  double time_s;
  double scheduled_at_s;
  EventKind kind;
};

struct Admission {
  double start_s;
  double bits;
};

struct SimulationResult {
  double horizon_s = 0.0;
  std::vector<LatencyRecord> latencies;  // one per arrived task, task order
  Counters counters;
  ConnectionStats connections;
  std::array<double, 3> class_bytes{};
  std::map<FnId, std::vector<double>> utilization;  // per accounting round
  std::map<FnId, double> busy_core_seconds;          // clipped to the horizon
  std::map<FnId, int> fn_cores;
  EnergyLedger ledger;
  std::vector<LegRecord> legs;
  std::vector<EventTrace> events;
  std::map<FnId, std::vector<Admission>> admissions;
};

// Runs the event loop until the horizon. Deterministic: identical inputs
// yield identical results. Throws std::invalid_argument when the workload
// references endpoints missing from the topology.
SimulationResult simulate(const CityTopology& topology, const ArrivalSeries& workload,
                          const EngineParams& params);

}  // namespace focan

#endif  // FOCAN_ENGINE_HPP_
