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

// Single-hop D2D comparison platform: lossy 802.11b links between things,
// with every failed attempt costing a TCP timeout and a retransmission.

#ifndef FOCAN_BASELINE_HPP_
#define FOCAN_BASELINE_HPP_

#include <cstdint>

#include "focan/energy.hpp"
#include "focan/engine.hpp"
#include "focan/topology.hpp"
#include "focan/workload.hpp"

namespace focan {

struct D2dConfig {
  double link_rate_bps = 11e6;  // 802.11b nominal
  double retx_prob = 0.2;       // per-attempt failure (fading, path loss)
  double timeout_penalty_s = 0.2;
  std::uint32_t max_retries = 7;
  double range_m = 30.0;  // single-hop reach between two things
};

// Throws std::invalid_argument on out-of-range fields.
void validate(const D2dConfig& config);

// 1 / (1 - p). Throws std::domain_error unless 0 <= p < 1.
double expected_transmissions(double retx_prob);

// Each task draws its attempts from its own stream (seed, task id), and an
// attempt fails iff its uniform draw is below retx_prob. Raising retx_prob
// under the same seed therefore never lowers any task's attempt count.
SimulationResult run_d2d(const D2dConfig& config, const ArrivalSeries& workload,
                         const CityTopology& topology, const PowerModel& model, std::uint64_t seed,
                         double horizon_s, double round_s = 1.0);

}  // namespace focan

#endif  // FOCAN_BASELINE_HPP_
