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

#include "focan/fn_server.hpp"

#include <algorithm>

namespace focan {

bool LruCache::lookup(const std::string& key) {
  auto it = index_.find(key);
  if (it == index_.end()) return false;
  order_.splice(order_.begin(), order_, it->second);
  return true;
}

std::optional<std::string> LruCache::insert(const std::string& key) {
  if (lookup(key)) return std::nullopt;
  if (capacity_ == 0) return std::nullopt;
  std::optional<std::string> evicted;
  if (index_.size() == capacity_) {
    evicted = std::move(order_.back());
    index_.erase(*evicted);
    order_.pop_back();
  }
  order_.push_front(key);
  index_[key] = order_.begin();
  return evicted;
}

FnServerState::FnServerState(const FogNode& fn)
    : id(fn.id),
      core_rate_bps(fn.core_rate_bps),
      cores(static_cast<std::size_t>(fn.cores)),
      cache(fn.storage_capacity) {}

double FnServerState::utilization_at(double t) const {
  std::size_t busy = 0;
  for (const CoreState& c : cores) {
    if (c.busy_from_s <= t && t < c.busy_until_s) ++busy;
  }
  return static_cast<double>(busy) / static_cast<double>(cores.size());
}

bool authorize_app(std::string_view app_id, const Thing& thing) {
  return thing.authorized_apps.find(std::string(app_id)) != thing.authorized_apps.end();
}

double load_application(FnServerState& state, const std::string& app_id, double miss_penalty_s) {
  if (state.cache.lookup(app_id)) {
    ++state.cache_hits;
    return 0.0;
  }
  ++state.cache_misses;
  state.cache.insert(app_id);
  return miss_penalty_s;
}

ExecTiming execute_task(FnServerState& state, const AppTask& task, double now_s) {
  ExecTiming timing;
  timing.ready_s = now_s;
  timing.start_s = now_s;
  timing.finish_s = now_s;
  if (task.cpu_bits <= 0.0) return timing;

  std::size_t best = 0;
  double best_free = std::max(state.cores[0].busy_until_s, now_s);
  for (std::size_t i = 1; i < state.cores.size(); ++i) {
    const double free_at = std::max(state.cores[i].busy_until_s, now_s);
    if (free_at < best_free) {
      best = i;
      best_free = free_at;
    }
  }
  CoreState& core = state.cores[best];
  if (core.busy_until_s <= now_s) core.busy_from_s = now_s;  // idle core starts a new busy period
  timing.core = best;
  timing.start_s = best_free;
  timing.finish_s = best_free + task.cpu_bits / state.core_rate_bps;
  core.busy_until_s = timing.finish_s;
  return timing;
}

void store_result(FnServerState& state, const std::string& app_id) { state.cache.insert(app_id); }

}  // namespace focan
