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

#include "focan/cli.hpp"

#include <charconv>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <future>
#include <sstream>
#include <ostream>
#include <stdexcept>

#include "focan/report.hpp"
#include "focan/scenario.hpp"
#include "focan/util.hpp"
#include "focan/workload.hpp"

namespace focan {

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

// Bad input files surface as usage errors, everything else as runtime.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::optional<ReportFormat> parse_format(const std::string& s) {
  if (s == "csv") return ReportFormat::Csv;
  if (s == "json") return ReportFormat::Json;
  return std::nullopt;
}

json assumed_parameters(const SimConfig& c, Platform p) {
  json a = {{"nic_wireless_j_per_bit", c.power.nic_wireless_j_per_bit},
            {"nic_wired_j_per_bit", c.power.nic_wired_j_per_bit},
            {"ack_bits", c.ack_bits},
            {"miss_penalty_s", c.miss_penalty_s},
            {"auth_latency_s", c.auth_latency_s},
            {"trace", c.workload.source == WorkloadSource::Trace && c.workload.trace_path.empty()
                          ? json("bundled synthetic")
                          : json(c.workload.trace_path)}};
  if (p == Platform::D2D) {
    a["d2d"] = {{"link_rate_bps", c.d2d.link_rate_bps},
                {"retx_prob", c.d2d.retx_prob},
                {"timeout_penalty_s", c.d2d.timeout_penalty_s},
                {"max_retries", c.d2d.max_retries},
                {"range_m", c.d2d.range_m}};
  }
  return a;
}

void write_file(const fs::path& path, const std::string& body) {
  std::ofstream f(path, std::ios::binary);
  if (!f) throw std::runtime_error("cannot write " + path.string());
  f << body;
  if (!f) throw std::runtime_error("write failed: " + path.string());
}

std::string read_file(const fs::path& path) {
  std::ifstream f(path, std::ios::binary);
  if (!f) throw UsageError("cannot open " + path.string());
  std::ostringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

// Writes the two reports and the manifest into dir; returns the manifest path.
fs::path write_run(const RunOutput& run, const SimConfig& config, const fs::path& dir,
                   ReportFormat format, const std::string& started_at) {
  fs::create_directories(dir);
  RunManifest m;
  m.run_id = run.run_id;
  m.config_hash = run.config_hash;
  m.workload_digest = to_hex(run.workload_digest);
  m.seed = run.seed;
  m.platform = run.platform;
  m.horizon_s = run.result.horizon_s;
  m.format = format;
  m.counters = run.result.counters;
  m.connections = run.result.connections;
  m.assumed_parameters = assumed_parameters(config, run.platform);

  const std::vector<EnergyRow> rows = report(run.result.ledger, run.run_id);
  std::ostringstream energy, latency;
  if (format == ReportFormat::Csv) {
    m.energy_path = "energy.csv";
    m.latency_path = "latency.csv";
    write_energy_csv(energy, rows);
    write_latency_csv(latency, run.run_id, run.result.latencies);
  } else {
    m.energy_path = "energy.json";
    m.latency_path = "latency.json";
    energy << energy_json(rows).dump(1) << '\n';
    latency << latency_json(run.run_id, run.result.latencies).dump(1) << '\n';
  }
  write_file(dir / m.energy_path, energy.str());
  write_file(dir / m.latency_path, latency.str());
  m.started_at = started_at;
  m.finished_at = utc_timestamp();
  const fs::path manifest = dir / "manifest.json";
  write_file(manifest, to_json(m).dump(2) + "\n");
  return manifest;
}

ConnectionStats load_connections(const RunManifest& m, const fs::path& manifest_dir) {
  const fs::path path = manifest_dir / m.latency_path;
  const std::string body = read_file(path);
  try {
    if (m.format == ReportFormat::Csv) {
      std::istringstream in(body);
      return connections_from_latency_csv(in);
    }
    return connections_from_latency_json(json::parse(body));
  } catch (const json::exception& e) {
    throw UsageError(path.string() + ": " + e.what());
  } catch (const std::runtime_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

RunManifest load_manifest(const fs::path& path) {
  try {
    return manifest_from_json(json::parse(read_file(path)));
  } catch (const json::exception& e) {
    throw UsageError(path.string() + ": " + e.what());
  } catch (const UsageError&) {
    throw;
  } catch (const std::runtime_error& e) {
    throw UsageError(path.string() + ": " + e.what());
  }
}

int compare_manifests(const fs::path& a_path, const fs::path& b_path, const fs::path& out_dir,
                      std::ostream& out) {
  const RunManifest a = load_manifest(a_path);
  const RunManifest b = load_manifest(b_path);
  if (a.platform == b.platform) {
    throw UsageError("compare needs one focan and one d2d manifest, got two " +
                     std::string(to_string(a.platform)));
  }
  if (a.horizon_s != b.horizon_s) {
    throw UsageError("mismatched horizons: " + format_fixed(a.horizon_s, 3) + " s vs " +
                     format_fixed(b.horizon_s, 3) + " s");
  }
  if (a.workload_digest != b.workload_digest) {
    throw UsageError("mismatched workloads: digest " + a.workload_digest + " vs " + b.workload_digest);
  }
  const bool a_is_focan = a.platform == Platform::Focan;
  const RunManifest& focan = a_is_focan ? a : b;
  const RunManifest& d2d = a_is_focan ? b : a;
  const fs::path focan_dir = (a_is_focan ? a_path : b_path).parent_path();
  const fs::path d2d_dir = (a_is_focan ? b_path : a_path).parent_path();

  const std::vector<ComparisonRow> rows = compare_connections(
      load_connections(focan, focan_dir), load_connections(d2d, d2d_dir), focan.horizon_s);
  std::ostringstream csv;
  write_comparison_csv(csv, rows);
  fs::create_directories(out_dir);
  write_file(out_dir / "comparison.csv", csv.str());
  out << csv.str();
  return kExitOk;
}

template <typename Body>
int guarded(std::ostream& err, Body&& body) {
  try {
    return body();
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const TraceError& e) {
    err << "error: trace: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "runtime failure: " << e.what() << '\n';
    return kExitRuntime;
  }
}

// Catches trace problems before any simulation time is spent.
void check_trace(const SimConfig& c) {
  if (c.workload.source == WorkloadSource::Trace && !c.workload.trace_path.empty()) {
    (void)load_trace(c.workload.trace_path);
  }
}

}  // namespace

SimConfig resolve_config(const CliFlags& flags) {
  if (!flags.config) throw ConfigError("--config", "required");
  const fs::path path = *flags.config;
  const json doc = read_config_json(path);
  SimConfig c = parse_config(doc, path.parent_path());

  if (!(doc.is_object() && doc.contains("seed"))) {
    if (const char* env = std::getenv("FOCAN_SIM_SEED"); env != nullptr && *env != '\0') {
      std::uint64_t s = 0;
      const std::string_view v(env);
      const auto [ptr, ec] = std::from_chars(v.data(), v.data() + v.size(), s);
      if (ec != std::errc() || ptr != v.data() + v.size()) {
        throw ConfigError("FOCAN_SIM_SEED", "expected a non-negative integer");
      }
      c.seed = s;
    }
  }
  if (flags.seed) c.seed = *flags.seed;
  if (flags.horizon_s) {
    if (!(*flags.horizon_s > 0.0)) throw ConfigError("--horizon", "must be > 0");
    c.horizon_s = *flags.horizon_s;
  }
  if (flags.trace) {
    c.workload.source = WorkloadSource::Trace;
    c.workload.trace_path = *flags.trace;
  }
  return c;
}

int cmd_run(const CliFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const std::string p = flags.platform.value_or("focan");
    if (p == "both") throw UsageError("run executes one platform; use compare for both");
    const auto platform = parse_platform(p);
    if (!platform) throw UsageError("--platform: expected focan, d2d or both");
    const auto format = parse_format(flags.format);
    if (!format) throw UsageError("--format: expected csv or json");
    const SimConfig config = resolve_config(flags);
    check_trace(config);

    const std::string started = utc_timestamp();
    const RunOutput run = execute(config, *platform);
    const fs::path manifest = write_run(run, config, flags.out, *format, started);
    const Counters& c = run.result.counters;
    out << run.run_id << ": " << c.arrived << " arrived, " << c.completed << " completed, "
        << c.failed << " failed, " << c.rejected << " rejected, " << c.in_flight
        << " in flight\n"
        << "manifest: " << manifest.string() << '\n';
    return kExitOk;
  });
}

int cmd_compare(const CliFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    if (!flags.manifests.empty()) {
      if (flags.manifests.size() != 2) throw UsageError("compare takes exactly two --manifest");
      if (flags.config) throw UsageError("use either --config or --manifest, not both");
      return compare_manifests(flags.manifests[0], flags.manifests[1], flags.out, out);
    }
    if (flags.platform && *flags.platform != "both") {
      throw UsageError("compare runs both platforms; --platform must be both");
    }
    const auto format = parse_format(flags.format);
    if (!format) throw UsageError("--format: expected csv or json");
    const SimConfig config = resolve_config(flags);
    check_trace(config);

    const CityTopology city = build_city(config);
    const ArrivalSeries workload = build_workload(config, city);
    const std::string started = utc_timestamp();
    // Each run stays single-threaded; the two only share read-only inputs.
    auto focan_run = std::async(std::launch::async, [&] {
      return execute(config, Platform::Focan, city, workload);
    });
    const RunOutput d2d = execute(config, Platform::D2D, city, workload);
    const RunOutput focan = focan_run.get();

    const fs::path root = flags.out;
    const fs::path fm = write_run(focan, config, root / "focan", *format, started);
    const fs::path dm = write_run(d2d, config, root / "d2d", *format, started);
    return compare_manifests(fm, dm, root, out);
  });
}

int cmd_validate(const CliFlags& flags, std::ostream& out, std::ostream& err) {
  return guarded(err, [&] {
    const SimConfig config = resolve_config(flags);
    check_trace(config);
    out << to_json(config).dump(2) << '\n';
    return kExitOk;
  });
}

}  // namespace focan
