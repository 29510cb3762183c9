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

// Subcommands behind the focan_sim binary. Exit codes: 0 success, 1 runtime
// failure, 2 usage or configuration error.

#ifndef FOCAN_CLI_HPP_
#define FOCAN_CLI_HPP_

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "focan/config.hpp"

namespace focan {

inline constexpr int kExitOk = 0;
inline constexpr int kExitRuntime = 1;
inline constexpr int kExitUsage = 2;

struct CliFlags {
  std::optional<std::string> config;
  std::optional<std::string> trace;
  std::optional<std::string> platform;  // focan | d2d | both
  std::optional<std::uint64_t> seed;
  std::optional<double> horizon_s;
  std::string out = ".";
  std::string format = "csv";
  std::vector<std::string> manifests;  // compare only
};

// Config file, then FOCAN_SIM_SEED when the file has no seed, then flags.
// Throws ConfigError.
SimConfig resolve_config(const CliFlags& flags);

int cmd_run(const CliFlags& flags, std::ostream& out, std::ostream& err);
int cmd_compare(const CliFlags& flags, std::ostream& out, std::ostream& err);
int cmd_validate(const CliFlags& flags, std::ostream& out, std::ostream& err);

}  // namespace focan

#endif  // FOCAN_CLI_HPP_
