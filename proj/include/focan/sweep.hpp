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

// Independent-run parameter sweeps. Every point is a full single-threaded
// simulation; the parallel driver spreads points across OpenMP threads and
// the serial driver is the reference it must match exactly.

#ifndef FOCAN_SWEEP_HPP_
#define FOCAN_SWEEP_HPP_

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "focan/config.hpp"
#include "focan/engine.hpp"
#include "focan/scenario.hpp"

namespace focan {

struct SweepPoint {
  std::string label;
  SimConfig config;
  Platform platform = Platform::Focan;
};

struct SweepResult {
  std::string label;
  Platform platform = Platform::Focan;
  std::string run_id;
  std::uint64_t workload_digest = 0;
  double horizon_s = 0.0;
  Counters counters;
  ConnectionStats connections;
  double cpu_joules = 0.0;
  double net_joules = 0.0;
  std::string error;  // non-empty when the point threw

  bool ok() const { return error.empty(); }
  bool operator==(const SweepResult&) const = default;
};

std::vector<SweepResult> run_sweep_serial(std::span<const SweepPoint> points);
// Same results, same order; threads = 0 uses the OpenMP default.
std::vector<SweepResult> run_sweep(std::span<const SweepPoint> points, int threads = 0);

}  // namespace focan

#endif  // FOCAN_SWEEP_HPP_
