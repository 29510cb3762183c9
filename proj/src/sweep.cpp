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

#include "focan/sweep.hpp"

#include <omp.h>

#include <exception>

namespace focan {

namespace {

SweepResult run_point(const SweepPoint& p) {
  SweepResult r;
  r.label = p.label;
  r.platform = p.platform;
  try {
    const RunOutput out = execute(p.config, p.platform);
    r.run_id = out.run_id;
    r.workload_digest = out.workload_digest;
    r.horizon_s = out.result.horizon_s;
    r.counters = out.result.counters;
    r.connections = out.result.connections;
    r.cpu_joules = out.result.ledger.total_cpu();
    r.net_joules = out.result.ledger.total_net();
  } catch (const std::exception& e) {
    r.error = e.what();  // exceptions must not cross the parallel region
  }
  return r;
}

}  // namespace

std::vector<SweepResult> run_sweep_serial(std::span<const SweepPoint> points) {
  std::vector<SweepResult> out;
  out.reserve(points.size());
  for (const SweepPoint& p : points) out.push_back(run_point(p));
  return out;
}

std::vector<SweepResult> run_sweep(std::span<const SweepPoint> points, int threads) {
  std::vector<SweepResult> out(points.size());
  const long n = static_cast<long>(points.size());
  const int team = threads > 0 ? threads : omp_get_max_threads();
  // Points differ wildly in cost (horizon, load), hence dynamic scheduling.
#pragma omp parallel for schedule(dynamic, 1) num_threads(team)
  for (long i = 0; i < n; ++i) out[static_cast<std::size_t>(i)] = run_point(points[static_cast<std::size_t>(i)]);
  return out;
}

}  // namespace focan
