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

#include "focan/scenario.hpp"

#include "focan/baseline.hpp"
#include "focan/util.hpp"

namespace focan {

std::string_view to_string(Platform p) { return p == Platform::Focan ? "focan" : "d2d"; }

std::optional<Platform> parse_platform(std::string_view s) {
  if (s == "focan") return Platform::Focan;
  if (s == "d2d") return Platform::D2D;
  return std::nullopt;
}

RunOutput execute(const SimConfig& config, Platform platform) {
  const CityTopology city = build_city(config);
  const ArrivalSeries workload = build_workload(config, city);
  return execute(config, platform, city, workload);
}

RunOutput execute(const SimConfig& config, Platform platform, const CityTopology& city,
                  const ArrivalSeries& workload) {
  RunOutput out;
  out.platform = platform;
  out.config_hash = config_hash(config);
  out.workload_digest = workload_digest(workload);
  out.seed = config.seed;
  out.run_id = std::string(to_string(platform)) + "-" + out.config_hash.substr(0, 8) + "-s" +
               std::to_string(config.seed);
  if (platform == Platform::Focan) {
    out.result = simulate(city, workload, engine_params(config));
  } else {
    out.result = run_d2d(config.d2d, workload, city, config.power, config.seed, config.horizon_s,
                         config.round_s);
  }
  return out;
}

double per_connection_power(std::uint64_t connections, double net_joules, double horizon_s) {
  if (connections == 0 || horizon_s <= 0.0) return 0.0;
  return net_joules / (static_cast<double>(connections) * horizon_s);
}

}  // namespace focan
