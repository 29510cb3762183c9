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

#include "focan/baseline.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

#include "focan/util.hpp"

namespace focan {

void validate(const D2dConfig& config) {
  if (!(config.link_rate_bps > 0.0)) throw std::invalid_argument("d2d: link_rate_bps must be > 0");
  if (!(config.retx_prob >= 0.0 && config.retx_prob < 1.0)) {
    throw std::invalid_argument("d2d: retx_prob must be in [0,1)");
  }
  if (!(config.timeout_penalty_s >= 0.0)) {
    throw std::invalid_argument("d2d: timeout_penalty_s must be >= 0");
  }
  if (!(config.range_m > 0.0)) throw std::invalid_argument("d2d: range_m must be > 0");
}

double expected_transmissions(double retx_prob) {
  if (!(retx_prob >= 0.0 && retx_prob < 1.0)) {
    throw std::domain_error("expected_transmissions: p must be in [0,1)");
  }
  return 1.0 / (1.0 - retx_prob);
}

SimulationResult run_d2d(const D2dConfig& config, const ArrivalSeries& workload,
                         const CityTopology& topology, const PowerModel& model, std::uint64_t seed,
                         double horizon_s, double round_s) {
  validate(config);
  validate(model);

  SimulationResult result;
  result.horizon_s = horizon_s;
  result.ledger = EnergyLedger(horizon_s, round_s);
  for (const FogNode& f : topology.fns()) result.ledger.register_fn(f.id);

  std::vector<std::size_t> order(workload.tasks.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return workload.tasks[a].arrival_s < workload.tasks[b].arrival_s;
  });

  Counters& c = result.counters;
  for (std::size_t idx : order) {
    const AppTask& task = workload.tasks[idx];
    if (task.arrival_s > horizon_s) break;
    if (topology.find_thing(task.src) == nullptr || !topology.contains(task.dst)) {
      throw std::invalid_argument("task " + std::to_string(task.id) + " references unknown endpoints");
    }
    ++c.arrived;
    LatencyRecord rec;
    rec.task_id = task.id;
    rec.app_id = task.app_id;
    rec.src = task.src;
    rec.dst = task.dst;
    rec.kind = RouteKind::D2D;
    rec.arrival_s = task.arrival_s;

    const auto* dst = std::get_if<ThingId>(&task.dst);
    const Position src_pos = topology.thing(task.src).pos;
    if (dst == nullptr || distance(src_pos, topology.thing(*dst).pos) > config.range_m) {
      rec.outcome = TaskOutcome::Failed;  // no multi-hop in the baseline
      ++c.failed;
      ++c.no_route;
      result.latencies.push_back(std::move(rec));
      continue;
    }
    rec.comm_type = classify_link(task.src, *dst, topology);
    rec.hops = 1;

    SplitMix64 rng(mix_seed(seed, task.id));
    std::uint32_t attempts = 0;
    bool delivered = false;
    while (attempts <= config.max_retries) {
      ++attempts;
      if (rng.uniform() >= config.retx_prob) {
        delivered = true;
        break;
      }
    }
    const std::uint32_t timeouts = delivered ? attempts - 1 : attempts;
    rec.attempts = attempts;
    rec.network_s = attempts * (task.payload_bits / config.link_rate_bps);
    rec.timeout_s = timeouts * config.timeout_penalty_s;
    c.transmissions += attempts;
    c.timeouts += timeouts;

    const double bits = attempts * task.payload_bits;
    const double joules = network_energy(bits, Medium::Wireless, model);
    const FnId a = topology.cluster_of(task.src).value_or(kUnattributed);
    const FnId b = topology.cluster_of(*dst).value_or(a);
    charge_transfer(result.ledger, a == kUnattributed ? b : a, b, rec.comm_type, task.arrival_s,
                    joules);
    result.class_bytes[index_of(rec.comm_type)] += bits / 8.0;
    ++result.connections.count[index_of(rec.comm_type)];
    result.connections.net_joules[index_of(rec.comm_type)] += joules;
    rec.net_j = joules;
    rec.transmissions = attempts;

    if (!delivered) {
      rec.outcome = TaskOutcome::Failed;
      ++c.failed;
      ++c.retries_exhausted;
    } else if (task.arrival_s + rec.network_s + rec.timeout_s <= horizon_s) {
      rec.outcome = TaskOutcome::Completed;
      rec.completion_s = task.arrival_s + rec.network_s + rec.timeout_s;
      ++c.completed;
    } else {
      rec.outcome = TaskOutcome::InFlight;
      ++c.in_flight;
    }
    result.latencies.push_back(std::move(rec));
  }
  return result;
}

}  // namespace focan
