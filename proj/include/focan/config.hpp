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

// Run configuration: JSON schema, validation with field paths, normalized
// dump and the stable config hash.

#ifndef FOCAN_CONFIG_HPP_
#define FOCAN_CONFIG_HPP_

#include <cstdint>
#include <filesystem>
#include <stdexcept>
#include <string>
#include <vector>

#include "focan/baseline.hpp"
#include "focan/energy.hpp"
#include "focan/engine.hpp"
#include "focan/routing.hpp"
#include "focan/topology.hpp"
#include "focan/workload.hpp"
#include "json.hpp"

namespace focan {

enum class WorkloadSource : std::uint8_t { Trace, Poisson, Tasks, None };

struct WorkloadConfig {
  WorkloadSource source = WorkloadSource::Trace;
  std::string trace_path;  // empty: bundled synthetic trace
  double max_rate_bps = 2.5e9;
  double rate_per_s = 10.0;  // poisson source
  double payload_bits = 1e6;
  double cpu_bits = 1e6;
  std::vector<AppTask> tasks;  // tasks source
};

struct SimConfig {
  double horizon_s = 1000.0;
  std::uint64_t seed = 1;
  double round_s = 1.0;

  TopologyConfig topology = default_city();
  DelayConfig delays;
  double admission_cap_bps = 2.5e9;
  double core_rate_bps = 10e6;  // defaults for FNs that do not set their own
  int cores = 6;
  std::size_t cache_capacity = 8;
  double miss_penalty_s = 0.05;
  double auth_latency_s = 0.0;
  double ack_bits = 8000.0;

  TdmaConfig tdma;
  bool tdma_slot_auto = true;  // slot = payload / FN link bandwidth
  TdmaPriority tdma_priority = TdmaPriority::SecondaryFirst;

  PowerModel power;
  WorkloadConfig workload;
  D2dConfig d2d;
};

struct Violation {
  std::string path;
  std::string message;
};

class ConfigError : public std::runtime_error {
 public:
  explicit ConfigError(std::vector<Violation> violations);
  ConfigError(std::string path, std::string message)
      : ConfigError(std::vector<Violation>{{std::move(path), std::move(message)}}) {}
  const std::vector<Violation>& violations() const { return violations_; }

 private:
  std::vector<Violation> violations_;
};

// Relative trace/topology paths resolve against base_dir. Throws
// ConfigError listing every violation found.
SimConfig parse_config(const nlohmann::json& doc, const std::filesystem::path& base_dir = {});
// Missing or unparsable files also raise ConfigError.
SimConfig load_config(const std::filesystem::path& path);
nlohmann::json read_config_json(const std::filesystem::path& path);

// Effective configuration with every default filled in.
nlohmann::json to_json(const SimConfig& config);

// Digest of the normalized configuration without the seed.
std::string config_hash(const SimConfig& config);

EngineParams engine_params(const SimConfig& config);
CityTopology build_city(const SimConfig& config);
ArrivalSeries build_workload(const SimConfig& config, const CityTopology& topology);

}  // namespace focan

#endif  // FOCAN_CONFIG_HPP_
