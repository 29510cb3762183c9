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

// One platform run from a configuration: build the city and workload, then
// hand them to the FOCAN engine or the D2D baseline.

#ifndef FOCAN_SCENARIO_HPP_
#define FOCAN_SCENARIO_HPP_

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "focan/config.hpp"
#include "focan/engine.hpp"

namespace focan {

enum class Platform : std::uint8_t { Focan, D2D };
std::string_view to_string(Platform p);
std::optional<Platform> parse_platform(std::string_view s);

struct RunOutput {
  Platform platform = Platform::Focan;
  std::string run_id;  // platform-hash-seed, no wall-clock component
  std::string config_hash;
  std::uint64_t workload_digest = 0;
  std::uint64_t seed = 0;
  SimulationResult result;
};

RunOutput execute(const SimConfig& config, Platform platform);
// Same, on an already built city and workload.
RunOutput execute(const SimConfig& config, Platform platform, const CityTopology& city,
                  const ArrivalSeries& workload);

// Average network power per connection: joules / (connections * horizon).
// Zero when no connection of that class exists.
double per_connection_power(std::uint64_t connections, double net_joules, double horizon_s);

}  // namespace focan

#endif  // FOCAN_SCENARIO_HPP_
