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

// Per-FN server state: multicore execution queues and the application
// cache, plus the authorize/load/execute/store steps that act on them.

#ifndef FOCAN_FN_SERVER_HPP_
#define FOCAN_FN_SERVER_HPP_

#include <cstddef>
#include <cstdint>
#include <list>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "focan/topology.hpp"
#include "focan/workload.hpp"

namespace focan {

class LruCache {
 public:
  explicit LruCache(std::size_t capacity = 0) : capacity_(capacity) {}

  bool contains(const std::string& key) const { return index_.count(key) != 0; }
  // Hit moves the key to the MRU position.
  bool lookup(const std::string& key);
  // Inserts or refreshes the key as MRU; returns the evicted key, if any.
  std::optional<std::string> insert(const std::string& key);

  std::size_t size() const { return index_.size(); }
  std::size_t capacity() const { return capacity_; }
  // Most recently used first.
  std::vector<std::string> mru_order() const { return {order_.begin(), order_.end()}; }

 private:
  std::size_t capacity_;
  std::list<std::string> order_;
  std::unordered_map<std::string, std::list<std::string>::iterator> index_;
};

struct CoreState {
  double busy_from_s = 0.0;
  double busy_until_s = 0.0;
};

struct FnServerState {
  explicit FnServerState(const FogNode& fn);

  FnId id;
  double core_rate_bps;
  std::vector<CoreState> cores;
  LruCache cache;
  std::uint64_t cache_hits = 0;
  std::uint64_t cache_misses = 0;

  // Fraction of cores executing at time t.
  double utilization_at(double t) const;
};

bool authorize_app(std::string_view app_id, const Thing& thing);

// Returns the load latency: 0 on a cache hit, miss_penalty_s otherwise (the
// app is then inserted, evicting the LRU entry when full).
double load_application(FnServerState& state, const std::string& app_id, double miss_penalty_s);

struct ExecTiming {
  std::size_t core = 0;
  double ready_s = 0.0;
  double start_s = 0.0;
  double finish_s = 0.0;

  double queue_s() const { return start_s - ready_s; }
  double service_s() const { return finish_s - ready_s; }
};

// Queues the task's CPU demand on the core with the least backlog (lowest
// index on ties). Zero demand completes immediately without occupying a
// core.
ExecTiming execute_task(FnServerState& state, const AppTask& task, double now_s);

// Marks the app most recently used in the FN storage. Idempotent.
void store_result(FnServerState& state, const std::string& app_id);

}  // namespace focan

#endif  // FOCAN_FN_SERVER_HPP_
