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

#include "focan/engine.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>
#include <queue>
#include <stdexcept>
#include <tuple>
#include <unordered_map>

namespace focan {

std::string_view to_string(EventKind k) {
  switch (k) {
    case EventKind::Arrival: return "arrival";
    case EventKind::AuthDone: return "auth_done";
    case EventKind::LoadDone: return "load_done";
    case EventKind::ExecDone: return "exec_done";
    case EventKind::StoreDone: return "store_done";
    case EventKind::LinkDeliver: return "link_deliver";
    case EventKind::TdmaRound: return "tdma_round";
    case EventKind::CloudAbstract: return "cloud_abstract";
    case EventKind::End: return "end";
  }
  return "?";
}

std::string_view to_string(RouteKind k) {
  switch (k) {
    case RouteKind::Direct: return "t2t";
    case RouteKind::Relay: return "tfnt";
    case RouteKind::LocalAccess: return "t2fn";
    case RouteKind::RemoteAccess: return "t2fn_remote";
    case RouteKind::CrossCluster: return "fn2fn";
    case RouteKind::D2D: return "d2d";
  }
  return "?";
}

std::string_view to_string(TaskOutcome o) {
  switch (o) {
    case TaskOutcome::InFlight: return "in_flight";
    case TaskOutcome::Completed: return "completed";
    case TaskOutcome::Failed: return "failed";
    case TaskOutcome::Rejected: return "rejected";
  }
  return "?";
}

double link_latency(LegPattern pattern, std::size_t hops, const DelayConfig& delays) {
  switch (pattern) {
    case LegPattern::T2T: return delays.t2t_s;
    case LegPattern::TFNT: return delays.tfnt_s;
    case LegPattern::FN2FN:
      if (hops == 0) throw std::invalid_argument("link_latency: FN2FN leg needs >= 1 hop");
      return delays.fn2fn_s * static_cast<double>(hops);
  }
  return 0.0;
}

double DispatchPlan::nominal_network_s() const {
  double sum = 0.0;
  for (const PlannedLeg& l : legs) sum += l.delay_s;
  return sum;
}

namespace {

PlannedLeg make_leg(LegPattern pattern, CommType cls, Endpoint from, Endpoint to, std::size_t hops,
                    std::size_t transmissions, const DelayConfig& delays) {
  PlannedLeg leg;
  leg.pattern = pattern;
  leg.comm_type = cls;
  leg.medium = pattern == LegPattern::FN2FN ? Medium::Wired : Medium::Wireless;
  leg.from = from;
  leg.to = to;
  leg.hops = hops;
  leg.transmissions = transmissions;
  leg.delay_s = link_latency(pattern, hops, delays);
  return leg;
}

}  // namespace

DispatchPlan dispatch(const AppTask& task, const CityTopology& topology, const DelayConfig& delays,
                      const PathFinder& path_finder) {
  const Endpoint src = task.src;
  const CommType cls = classify_link(src, task.dst, topology);
  const std::optional<FnId> src_fn = topology.cluster_of(task.src);
  auto route = [&](FnId a, FnId b) {
    return path_finder ? path_finder(a, b, topology.fn_graph()) : find_path(a, b, topology.fn_graph());
  };
  using K = EventKind;

  DispatchPlan plan;
  plan.connection_class = cls;

  if (const auto* fn = std::get_if<FnId>(&task.dst)) {
    if (cls == CommType::Primary) {
      plan.kind = RouteKind::LocalAccess;
      plan.ingress_fn = plan.exec_fn = *fn;
      plan.legs.push_back(make_leg(LegPattern::TFNT, CommType::Primary, src, *fn, 1, 1, delays));
      plan.stages = {K::Arrival, K::LinkDeliver, K::AuthDone, K::LoadDone, K::ExecDone, K::StoreDone};
      return plan;
    }
    if (!src_fn) throw NoAccess("thing " + to_string(task.src) + " is not covered by any FN");
    plan.kind = RouteKind::RemoteAccess;
    plan.ingress_fn = *src_fn;
    plan.exec_fn = *fn;
    plan.path = route(*src_fn, *fn);
    plan.legs.push_back(make_leg(LegPattern::TFNT, CommType::Primary, src, *src_fn, 1, 1, delays));
    plan.stages = {K::Arrival, K::LinkDeliver, K::AuthDone, K::LoadDone};
    if (plan.hop_count() > 0) {
      plan.legs.push_back(make_leg(LegPattern::FN2FN, CommType::Secondary, *src_fn, *fn,
                                   plan.hop_count(), 1, delays));
      plan.stages.insert(plan.stages.end(), plan.hop_count(), K::LinkDeliver);
    }
    plan.stages.insert(plan.stages.end(), {K::ExecDone, K::StoreDone});
    return plan;
  }

  const ThingId dst = std::get<ThingId>(task.dst);
  if (!src_fn) throw NoAccess("thing " + to_string(task.src) + " is not covered by any FN");
  if (cls != CommType::Secondary) {
    plan.kind = RouteKind::Direct;
    plan.ingress_fn = plan.exec_fn = *src_fn;
    plan.legs.push_back(make_leg(LegPattern::T2T, cls, src, dst, 1, 1, delays));
    plan.stages = {K::Arrival, K::AuthDone, K::LoadDone, K::ExecDone, K::StoreDone, K::LinkDeliver};
    return plan;
  }
  const std::optional<FnId> dst_fn = topology.cluster_of(dst);
  if (!dst_fn) throw NoAccess("thing " + to_string(dst) + " is not covered by any FN");
  if (*dst_fn == *src_fn) {
    plan.kind = RouteKind::Relay;
    plan.ingress_fn = plan.exec_fn = *src_fn;
    // thing -> FN -> thing: two radio transmissions inside one tFNt leg
    plan.legs.push_back(make_leg(LegPattern::TFNT, CommType::Primary, src, dst, 1, 2, delays));
    plan.stages = {K::Arrival, K::AuthDone, K::LoadDone, K::ExecDone, K::StoreDone, K::LinkDeliver};
    return plan;
  }
  plan.kind = RouteKind::CrossCluster;
  plan.ingress_fn = *src_fn;
  plan.exec_fn = *dst_fn;
  plan.path = route(*src_fn, *dst_fn);
  plan.legs.push_back(make_leg(LegPattern::TFNT, CommType::Primary, src, *src_fn, 1, 1, delays));
  plan.legs.push_back(make_leg(LegPattern::FN2FN, CommType::Secondary, *src_fn, *dst_fn,
                               plan.hop_count(), 1, delays));
  plan.legs.push_back(make_leg(LegPattern::TFNT, CommType::Primary, *dst_fn, dst, 1, 1, delays));
  plan.stages = {K::Arrival, K::LinkDeliver, K::AuthDone, K::LoadDone};
  plan.stages.insert(plan.stages.end(), plan.hop_count(), K::LinkDeliver);
  plan.stages.insert(plan.stages.end(), {K::ExecDone, K::StoreDone, K::LinkDeliver});
  return plan;
}

// ---------------------------------------------------------------------------
// Event loop

namespace {

struct Event {
  double time;
  EventKind kind;
  std::uint64_t seq;
  std::uint64_t ref;
  double scheduled_at;
};

struct EventAfter {
  bool operator()(const Event& a, const Event& b) const {
    return std::tie(a.time, a.kind, a.seq) > std::tie(b.time, b.kind, b.seq);
  }
};

enum class TransferKind : std::uint8_t { UpLeg, Hop, Final, AckHop };

struct Transfer {
  TransferKind kind;
  std::size_t task;
  std::size_t hop = 0;  // index of the link along the forward or return path
};

struct PendingPacket {
  Packet packet;
  std::size_t transfer;
  std::uint32_t rounds_waited = 0;
};

struct TaskRun {
  std::size_t record = 0;
  std::optional<DispatchPlan> plan;
  std::optional<RoutePath> return_path;
  bool transmitted = false;
};

class Simulator {
 public:
  Simulator(const CityTopology& topology, const ArrivalSeries& workload, const EngineParams& params);
  SimulationResult run();

 private:
  void push(double t, EventKind kind, std::uint64_t ref);
  void on_arrival(std::size_t i, double t);
  void begin_ingress(std::size_t i, double t);
  void on_auth_done(std::size_t i, double t);
  void on_load_done(std::size_t i, double t);
  void begin_exec(std::size_t i, double t);
  void on_exec_done(std::size_t i, double t);
  void on_store_done(std::size_t i, double t);
  void on_link_deliver(std::size_t transfer, double t);
  void on_tdma_round(std::uint64_t round, double t);

  void complete(std::size_t i, double t);
  void fail(std::size_t i);
  void enqueue_packet(std::size_t transfer, LinkRef link, double bits, PacketClass cls, double t);
  void charge(std::size_t i, CommType cls, Medium medium, double bits, std::size_t transmissions,
              FnId fn_a, FnId fn_b, double t);
  FnId attribution(const Endpoint& e, FnId fallback) const;
  void add_busy(std::size_t fn_index, double start, double finish);
  void flush_rounds_until(double t);
  void flush_round(std::size_t r);

  LatencyRecord& rec(std::size_t i) { return result_.latencies[runs_[i].record]; }
  const AppTask& task(std::size_t i) const { return workload_.tasks[order_[i]]; }
  FnServerState& server(FnId id) { return servers_[fn_index_.at(id)]; }

  const CityTopology& topo_;
  const ArrivalSeries& workload_;
  const EngineParams& params_;
  SimulationResult result_;

  std::vector<std::size_t> order_;  // workload indices sorted by arrival
  std::vector<TaskRun> runs_;
  std::vector<FnServerState> servers_;
  std::unordered_map<FnId, std::size_t> fn_index_;
  std::vector<double> ingress_free_;
  std::vector<std::vector<double>> busy_bins_;  // core-seconds per round

  std::priority_queue<Event, std::vector<Event>, EventAfter> queue_;
  std::uint64_t seq_ = 0;
  double now_ = 0.0;

  std::vector<Transfer> transfers_;
  std::vector<PendingPacket> pending_;
  bool round_scheduled_ = false;
  std::size_t next_flush_ = 0;
};

Simulator::Simulator(const CityTopology& topology, const ArrivalSeries& workload,
                     const EngineParams& params)
    : topo_(topology), workload_(workload), params_(params) {
  if (!(params.horizon_s >= 0.0)) throw std::invalid_argument("horizon must be >= 0");
  if (!(params.admission_cap_bps > 0.0)) throw std::invalid_argument("admission cap must be > 0");
  validate(params.tdma);
  validate(params.power);

  for (const AppTask& t : workload.tasks) {
    if (topology.find_thing(t.src) == nullptr) {
      throw std::invalid_argument("task " + std::to_string(t.id) + " references unknown thing " +
                                  to_string(t.src));
    }
    if (!topology.contains(t.dst)) {
      throw std::invalid_argument("task " + std::to_string(t.id) + " references unknown endpoint " +
                                  to_string(t.dst));
    }
    if (t.dst == Endpoint{t.src}) {
      throw std::invalid_argument("task " + std::to_string(t.id) + " sends to itself");
    }
    if (!(t.payload_bits > 0.0) || t.cpu_bits < 0.0) {
      throw std::invalid_argument("task " + std::to_string(t.id) + " has invalid sizes");
    }
  }

  order_.resize(workload.tasks.size());
  std::iota(order_.begin(), order_.end(), std::size_t{0});
  std::stable_sort(order_.begin(), order_.end(), [&](std::size_t a, std::size_t b) {
    return workload.tasks[a].arrival_s < workload.tasks[b].arrival_s;
  });
  runs_.resize(order_.size());

  result_.horizon_s = params.horizon_s;
  result_.ledger = EnergyLedger(params.horizon_s, params.round_s);
  for (const FogNode& f : topology.fns()) {
    fn_index_[f.id] = servers_.size();
    servers_.emplace_back(f);
    result_.ledger.register_fn(f.id);
    result_.fn_cores[f.id] = f.cores;
    result_.utilization[f.id].assign(result_.ledger.round_count(), 0.0);
    result_.busy_core_seconds[f.id] = 0.0;
  }
  ingress_free_.assign(servers_.size(), 0.0);
  busy_bins_.assign(servers_.size(), std::vector<double>(result_.ledger.round_count(), 0.0));
}

void Simulator::push(double t, EventKind kind, std::uint64_t ref) {
  queue_.push(Event{t, kind, seq_++, ref, now_});
}

SimulationResult Simulator::run() {
  if (!order_.empty()) push(task(0).arrival_s, EventKind::Arrival, 0);
  push(params_.horizon_s, EventKind::End, 0);

  while (!queue_.empty()) {
    const Event ev = queue_.top();
    if (ev.time > params_.horizon_s) break;
    queue_.pop();
    flush_rounds_until(ev.time);
    now_ = ev.time;
    if (params_.record_events) result_.events.push_back({ev.time, ev.scheduled_at, ev.kind});

    switch (ev.kind) {
      case EventKind::Arrival: {
        const std::size_t i = ev.ref;
        if (i + 1 < order_.size()) push(task(i + 1).arrival_s, EventKind::Arrival, i + 1);
        on_arrival(i, ev.time);
        break;
      }
      case EventKind::AuthDone: on_auth_done(ev.ref, ev.time); break;
      case EventKind::LoadDone: on_load_done(ev.ref, ev.time); break;
      case EventKind::ExecDone: on_exec_done(ev.ref, ev.time); break;
      case EventKind::StoreDone: on_store_done(ev.ref, ev.time); break;
      case EventKind::LinkDeliver: on_link_deliver(ev.ref, ev.time); break;
      case EventKind::TdmaRound: on_tdma_round(ev.ref, ev.time); break;
      case EventKind::CloudAbstract: ++result_.counters.cloud_abstracts; break;
      case EventKind::End: break;
    }
    if (ev.kind == EventKind::End) break;
  }
  flush_rounds_until(std::numeric_limits<double>::infinity());

  Counters& c = result_.counters;
  for (const LatencyRecord& r : result_.latencies) {
    if (r.outcome == TaskOutcome::InFlight) ++c.in_flight;
  }
  for (const FnServerState& s : servers_) {
    c.cache_hits += s.cache_hits;
    c.cache_misses += s.cache_misses;
  }
  return std::move(result_);
}

void Simulator::on_arrival(std::size_t i, double t) {
  const AppTask& tk = task(i);
  runs_[i].record = result_.latencies.size();
  LatencyRecord r;
  r.task_id = tk.id;
  r.app_id = tk.app_id;
  r.src = tk.src;
  r.dst = tk.dst;
  r.arrival_s = t;
  result_.latencies.push_back(std::move(r));
  ++result_.counters.arrived;

  if (!authorize_app(tk.app_id, topo_.thing(tk.src))) {
    rec(i).outcome = TaskOutcome::Rejected;
    ++result_.counters.rejected;
    return;
  }
  try {
    runs_[i].plan = dispatch(tk, topo_, params_.delays, params_.path_finder);
  } catch (const NoRoute&) {
    ++result_.counters.no_route;
    fail(i);
    return;
  } catch (const RoutingFailure&) {
    ++result_.counters.no_access;
    fail(i);
    return;
  }
  const DispatchPlan& plan = *runs_[i].plan;
  rec(i).kind = plan.kind;
  rec(i).comm_type = plan.connection_class;
  rec(i).hops = plan.hop_count();

  const bool access_first = plan.kind == RouteKind::LocalAccess ||
                            plan.kind == RouteKind::RemoteAccess ||
                            plan.kind == RouteKind::CrossCluster;
  if (!access_first) {
    begin_ingress(i, t);
    return;
  }
  const PlannedLeg& up = plan.legs.front();
  charge(i, up.comm_type, up.medium, tk.payload_bits, up.transmissions,
         attribution(tk.src, plan.ingress_fn), plan.ingress_fn, t);
  rec(i).network_s += up.delay_s;
  transfers_.push_back({TransferKind::UpLeg, i, 0});
  push(t + up.delay_s, EventKind::LinkDeliver, transfers_.size() - 1);
}

void Simulator::begin_ingress(std::size_t i, double t) {
  const AppTask& tk = task(i);
  const std::size_t fi = fn_index_.at(runs_[i].plan->ingress_fn);
  const double admit = std::max(t, ingress_free_[fi]);
  ingress_free_[fi] = admit + tk.payload_bits / params_.admission_cap_bps;
  if (params_.record_admissions) {
    result_.admissions[servers_[fi].id].push_back({admit, tk.payload_bits});
  }
  rec(i).admission_s += admit - t;
  rec(i).auth_s += params_.auth_latency_s;
  push(admit + params_.auth_latency_s, EventKind::AuthDone, i);
}

void Simulator::on_auth_done(std::size_t i, double t) {
  const double penalty =
      load_application(server(runs_[i].plan->ingress_fn), task(i).app_id, params_.miss_penalty_s);
  rec(i).load_s += penalty;
  push(t + penalty, EventKind::LoadDone, i);
}

void Simulator::on_load_done(std::size_t i, double t) {
  const DispatchPlan& plan = *runs_[i].plan;
  if (plan.hop_count() > 0) {
    const RoutePath& p = *plan.path;
    transfers_.push_back({TransferKind::Hop, i, 0});
    enqueue_packet(transfers_.size() - 1, {p.hops[0], p.hops[1]}, task(i).payload_bits,
                   PacketClass::SecondaryTask, t);
    return;
  }
  begin_exec(i, t);
}

void Simulator::begin_exec(std::size_t i, double t) {
  const FnId fn = runs_[i].plan->exec_fn;
  const ExecTiming timing = execute_task(server(fn), task(i), t);
  add_busy(fn_index_.at(fn), timing.start_s, timing.finish_s);
  rec(i).cpu_queue_s += timing.queue_s();
  rec(i).exec_s += timing.finish_s - timing.start_s;
  push(timing.finish_s, EventKind::ExecDone, i);
}

void Simulator::on_exec_done(std::size_t i, double t) { push(t, EventKind::StoreDone, i); }

void Simulator::on_store_done(std::size_t i, double t) {
  const DispatchPlan& plan = *runs_[i].plan;
  const AppTask& tk = task(i);
  store_result(server(plan.exec_fn), tk.app_id);

  if (plan.hop_count() > 0) {
    runs_[i].return_path = reverse_path(*plan.path);
    const RoutePath& back = *runs_[i].return_path;
    ++result_.counters.acks_sent;
    transfers_.push_back({TransferKind::AckHop, i, 0});
    enqueue_packet(transfers_.size() - 1, {back.hops[0], back.hops[1]}, params_.ack_bits,
                   PacketClass::PrimaryTask, t);
  }

  const bool final_leg = plan.kind == RouteKind::Direct || plan.kind == RouteKind::Relay ||
                         plan.kind == RouteKind::CrossCluster;
  if (!final_leg) {
    complete(i, t);
    return;
  }
  const PlannedLeg& leg = plan.legs.back();
  FnId a = plan.exec_fn;
  FnId b = plan.exec_fn;
  if (plan.kind == RouteKind::Direct) {
    a = attribution(leg.from, plan.exec_fn);
    b = attribution(leg.to, a);
  }
  charge(i, leg.comm_type, leg.medium, tk.payload_bits, leg.transmissions, a, b, t);
  rec(i).network_s += leg.delay_s;
  transfers_.push_back({TransferKind::Final, i, 0});
  push(t + leg.delay_s, EventKind::LinkDeliver, transfers_.size() - 1);
}

void Simulator::on_link_deliver(std::size_t transfer, double t) {
  const Transfer tr = transfers_[transfer];
  const std::size_t i = tr.task;
  switch (tr.kind) {
    case TransferKind::UpLeg:
      begin_ingress(i, t);
      return;
    case TransferKind::Final:
      complete(i, t);
      return;
    case TransferKind::Hop: {
      if (rec(i).outcome != TaskOutcome::InFlight) return;
      const RoutePath& p = *runs_[i].plan->path;
      const std::size_t next = tr.hop + 1;
      if (next == p.hop_count()) {
        begin_exec(i, t);
        return;
      }
      transfers_.push_back({TransferKind::Hop, i, next});
      enqueue_packet(transfers_.size() - 1, {p.hops[next], p.hops[next + 1]}, task(i).payload_bits,
                     PacketClass::SecondaryTask, t);
      return;
    }
    case TransferKind::AckHop: {
      const RoutePath& p = *runs_[i].return_path;
      const std::size_t next = tr.hop + 1;
      if (next == p.hop_count()) {
        ++result_.counters.acks_delivered;
        return;
      }
      transfers_.push_back({TransferKind::AckHop, i, next});
      enqueue_packet(transfers_.size() - 1, {p.hops[next], p.hops[next + 1]}, params_.ack_bits,
                     PacketClass::PrimaryTask, t);
      return;
    }
  }
}

void Simulator::enqueue_packet(std::size_t transfer, LinkRef link, double bits, PacketClass cls,
                               double t) {
  PendingPacket pp;
  pp.packet.id = transfer;
  pp.packet.task_id = task(transfers_[transfer].task).id;
  pp.packet.link = link;
  pp.packet.size_bits = bits;
  pp.packet.cls = cls;
  pp.packet.ready_s = t;
  pp.transfer = transfer;
  pending_.push_back(pp);
  if (round_scheduled_) return;

  // A packet ready on a boundary (up to rounding) makes that round; the
  // round never starts before the packet is ready.
  const double len = params_.tdma.round_duration_s();
  const auto k = static_cast<std::uint64_t>(std::ceil(t / len - 1e-9));
  round_scheduled_ = true;
  push(std::max(static_cast<double>(k) * len, t), EventKind::TdmaRound, k);
}

void Simulator::on_tdma_round(std::uint64_t round, double t) {
  round_scheduled_ = false;
  std::vector<Packet> packets;
  packets.reserve(pending_.size());
  for (const PendingPacket& pp : pending_) packets.push_back(pp.packet);

  // One round at a time: packets left over wait for the next round, and a
  // packet that has waited ttl_rounds rounds is dropped.
  TdmaConfig one_round = params_.tdma;
  one_round.ttl_rounds = 1;
  const TdmaSchedule sched = tdma_schedule(packets, one_round, params_.tdma_priority);
  std::unordered_map<std::uint64_t, std::uint32_t> slot_of;
  for (const auto& [key, id] : sched.assignments) slot_of[id] = key.slot;

  std::vector<PendingPacket> still_waiting;
  for (PendingPacket& pp : pending_) {
    const Transfer& tr = transfers_[pp.transfer];
    const std::size_t i = tr.task;
    const bool forward = tr.kind == TransferKind::Hop;
    auto it = slot_of.find(pp.packet.id);
    if (it != slot_of.end()) {
      const double depart = t + it->second * params_.tdma.slot_duration_s;
      if (forward) {
        rec(i).tdma_wait_s += depart - pp.packet.ready_s;
        rec(i).network_s += params_.delays.fn2fn_s;
      }
      charge(i, CommType::Secondary, Medium::Wired, pp.packet.size_bits, 1, pp.packet.link.from,
             pp.packet.link.to, depart);
      push(depart + params_.delays.fn2fn_s, EventKind::LinkDeliver, pp.transfer);
      continue;
    }
    if (++pp.rounds_waited >= params_.tdma.ttl_rounds) {
      if (forward) {
        ++result_.counters.tdma_dropped;
        fail(i);
      } else {
        ++result_.counters.acks_dropped;
      }
      continue;
    }
    still_waiting.push_back(pp);
  }
  pending_ = std::move(still_waiting);
  if (!pending_.empty()) {
    round_scheduled_ = true;
    push(static_cast<double>(round + 1) * params_.tdma.round_duration_s(), EventKind::TdmaRound,
         round + 1);
  }
}

void Simulator::complete(std::size_t i, double t) {
  LatencyRecord& r = rec(i);
  r.outcome = TaskOutcome::Completed;
  r.completion_s = t;
  ++result_.counters.completed;
  if (runs_[i].plan && runs_[i].plan->hop_count() > 0) push(t, EventKind::CloudAbstract, i);
}

void Simulator::fail(std::size_t i) {
  rec(i).outcome = TaskOutcome::Failed;
  ++result_.counters.failed;
}

FnId Simulator::attribution(const Endpoint& e, FnId fallback) const {
  if (const auto* fn = std::get_if<FnId>(&e)) return *fn;
  return topo_.cluster_of(std::get<ThingId>(e)).value_or(fallback);
}

void Simulator::charge(std::size_t i, CommType cls, Medium medium, double bits,
                       std::size_t transmissions, FnId fn_a, FnId fn_b, double t) {
  const double total_bits = bits * static_cast<double>(transmissions);
  const double joules = network_energy(total_bits, medium, params_.power);
  charge_transfer(result_.ledger, fn_a, fn_b, cls, t, joules);
  result_.class_bytes[index_of(cls)] += total_bits / 8.0;
  result_.counters.transmissions += transmissions;

  const CommType conn = rec(i).comm_type;
  if (!runs_[i].transmitted) {
    runs_[i].transmitted = true;
    ++result_.connections.count[index_of(conn)];
  }
  result_.connections.net_joules[index_of(conn)] += joules;
  rec(i).net_j += joules;
  rec(i).transmissions += static_cast<std::uint32_t>(transmissions);
  if (params_.record_legs) {
    result_.legs.push_back({task(i).id, t, cls, medium, total_bits, joules, fn_a, fn_b});
  }
}

void Simulator::add_busy(std::size_t fn_index, double start, double finish) {
  const double h = params_.horizon_s;
  const double a = std::max(start, 0.0);
  const double b = std::min(finish, h);
  if (!(b > a)) return;
  result_.busy_core_seconds[servers_[fn_index].id] += b - a;
  const EnergyLedger& ledger = result_.ledger;
  std::vector<double>& bins = busy_bins_[fn_index];
  for (std::size_t r = ledger.round_of(a); r < bins.size(); ++r) {
    const double rs = static_cast<double>(r) * params_.round_s;
    const double re = rs + ledger.round_duration(r);
    const double lo = std::max(a, rs);
    const double hi = std::min(b, re);
    if (hi > lo) bins[r] += hi - lo;
    if (re >= b) break;
  }
}

void Simulator::flush_rounds_until(double t) {
  const std::size_t n = result_.ledger.round_count();
  while (next_flush_ < n) {
    const double end = static_cast<double>(next_flush_) * params_.round_s +
                       result_.ledger.round_duration(next_flush_);
    if (end > t) break;
    flush_round(next_flush_++);
  }
}

void Simulator::flush_round(std::size_t r) {
  const double dur = result_.ledger.round_duration(r);
  if (!(dur > 0.0)) return;
  std::vector<FnUtilization> samples;
  samples.reserve(servers_.size());
  for (std::size_t k = 0; k < servers_.size(); ++k) {
    const double cap = static_cast<double>(servers_[k].cores.size()) * dur;
    const double u = std::clamp(busy_bins_[k][r] / cap, 0.0, 1.0);
    samples.push_back({servers_[k].id, u});
    result_.utilization[servers_[k].id][r] = u;
  }
  accumulate(result_.ledger, samples, dur, r, params_.power);
}

}  // namespace

SimulationResult simulate(const CityTopology& topology, const ArrivalSeries& workload,
                          const EngineParams& params) {
  Simulator sim(topology, workload, params);
  return sim.run();
}

}  // namespace focan
