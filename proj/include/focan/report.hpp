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

// Report files: per-task latency table, energy table in CSV or JSON, run
// manifest, and the per-class FOCAN vs D2D comparison table.

#ifndef FOCAN_REPORT_HPP_
#define FOCAN_REPORT_HPP_

#include <array>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "focan/energy.hpp"
#include "focan/engine.hpp"
#include "focan/scenario.hpp"
#include "json.hpp"

namespace focan {

enum class ReportFormat : std::uint8_t { Csv, Json };

void write_latency_csv(std::ostream& out, std::string_view run_id,
                       std::span<const LatencyRecord> records);
nlohmann::json latency_json(std::string_view run_id, std::span<const LatencyRecord> records);
nlohmann::json energy_json(std::span<const EnergyRow> rows);

// Per-class connection statistics rebuilt from a latency report (CSV or
// JSON). Throws std::runtime_error on a malformed file.
ConnectionStats connections_from_latency_csv(std::istream& in);
ConnectionStats connections_from_latency_json(const nlohmann::json& doc);

struct RunManifest {
  std::string run_id;
  std::string config_hash;
  std::string workload_digest;  // hex
  std::uint64_t seed = 0;
  Platform platform = Platform::Focan;
  double horizon_s = 0.0;
  ReportFormat format = ReportFormat::Csv;
  std::string energy_path;   // relative to the manifest's directory
  std::string latency_path;
  std::string started_at;    // UTC, ISO 8601
  std::string finished_at;
  Counters counters;
  ConnectionStats connections;
  nlohmann::json assumed_parameters;
};

nlohmann::json to_json(const RunManifest& m);
// Throws std::runtime_error naming the first missing or mistyped field.
RunManifest manifest_from_json(const nlohmann::json& doc);

struct ComparisonRow {
  std::string comm_type;  // class name, or "common" over classes both served
  std::uint64_t focan_connections = 0;
  double focan_avg_power_w = 0.0;
  std::uint64_t d2d_connections = 0;
  double d2d_avg_power_w = 0.0;
  std::optional<double> ratio;  // d2d / focan; absent when either side is empty
};

std::vector<ComparisonRow> compare_connections(const ConnectionStats& focan, const ConnectionStats& d2d,
                                               double horizon_s);
void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows);

std::string utc_timestamp();

}  // namespace focan

#endif  // FOCAN_REPORT_HPP_
