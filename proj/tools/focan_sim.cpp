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

// focan_sim: run, compare and validate fog smart-city scenarios.

#include <iostream>

#include "CLI11.hpp"
#include "focan/cli.hpp"

namespace {

void add_common(CLI::App& cmd, focan::CliFlags& f) {
  cmd.add_option("--config", f.config, "scenario configuration (JSON)");
  cmd.add_option("--trace", f.trace, "two-column trace CSV (t_seconds,level)");
  cmd.add_option("--seed", f.seed, "RNG seed (overrides the file and FOCAN_SIM_SEED)");
  cmd.add_option("--horizon", f.horizon_s, "simulated seconds");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Fog smart-city simulator: FOCAN and the D2D baseline"};
  app.require_subcommand(1);

  focan::CliFlags flags;
  CLI::App* run = app.add_subcommand("run", "simulate one platform and write reports");
  add_common(*run, flags);
  run->add_option("--platform", flags.platform, "focan or d2d");
  run->add_option("--out", flags.out, "output directory");
  run->add_option("--format", flags.format, "report format: csv or json");

  CLI::App* compare = app.add_subcommand("compare", "per-class average power, FOCAN vs D2D");
  add_common(*compare, flags);
  compare->add_option("--platform", flags.platform, "must be both");
  compare->add_option("--manifest", flags.manifests, "two run manifests instead of --config");
  compare->add_option("--out", flags.out, "output directory");
  compare->add_option("--format", flags.format, "report format of the two runs: csv or json");

  CLI::App* validate = app.add_subcommand("validate", "check a configuration and print it normalized");
  add_common(*validate, flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? focan::kExitOk : focan::kExitUsage;
  }

  if (run->parsed()) return focan::cmd_run(flags, std::cout, std::cerr);
  if (compare->parsed()) return focan::cmd_compare(flags, std::cout, std::cerr);
  return focan::cmd_validate(flags, std::cout, std::cerr);
}
