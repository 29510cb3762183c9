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

#include "focan/report.hpp"

#include <charconv>
#include <chrono>
#include <ctime>
#include <istream>
#include <map>
#include <ostream>
#include <sstream>
#include <stdexcept>

#include "focan/util.hpp"

namespace focan {

using nlohmann::json;

namespace {

constexpr const char* kLatencyHeader =
    "run_id,task_id,app_id,src,dst,route,comm_type,hops,outcome,arrival_s,completion_s,latency_s,"
    "network_s,admission_s,auth_s,load_s,tdma_wait_s,cpu_queue_s,exec_s,timeout_s,attempts,"
    "transmissions,net_j";

std::vector<std::string_view> split(std::string_view line, char sep) {
  std::vector<std::string_view> out;
  std::size_t start = 0;
  while (true) {
    const std::size_t pos = line.find(sep, start);
    out.push_back(line.substr(start, pos - start));
    if (pos == std::string_view::npos) break;
    start = pos + 1;
  }
  return out;
}

template <typename T>
T parse_number(std::string_view s, std::size_t line_no) {
  T v{};
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) {
    throw std::runtime_error("latency report line " + std::to_string(line_no) + ": bad number '" +
                             std::string(s) + "'");
  }
  return v;
}

void add_connection(ConnectionStats& stats, std::string_view cls, std::uint64_t transmissions,
                    double net_j, std::size_t line_no) {
  if (transmissions == 0) return;
  const auto c = parse_comm_type(cls);
  if (!c) {
    throw std::runtime_error("latency report line " + std::to_string(line_no) +
                             ": unknown comm_type '" + std::string(cls) + "'");
  }
  ++stats.count[index_of(*c)];
  stats.net_joules[index_of(*c)] += net_j;
}

json counters_json(const Counters& c) {
  return {{"arrived", c.arrived},
          {"completed", c.completed},
          {"failed", c.failed},
          {"rejected", c.rejected},
          {"in_flight", c.in_flight},
          {"no_route", c.no_route},
          {"no_access", c.no_access},
          {"tdma_dropped", c.tdma_dropped},
          {"retries_exhausted", c.retries_exhausted},
          {"acks_sent", c.acks_sent},
          {"acks_delivered", c.acks_delivered},
          {"acks_dropped", c.acks_dropped},
          {"cloud_abstracts", c.cloud_abstracts},
          {"cache_hits", c.cache_hits},
          {"cache_misses", c.cache_misses},
          {"transmissions", c.transmissions},
          {"timeouts", c.timeouts}};
}

Counters counters_from_json(const json& j) {
  Counters c;
  auto get = [&](const char* k, std::uint64_t& v) { v = j.value(k, std::uint64_t{0}); };
  get("arrived", c.arrived);
  get("completed", c.completed);
  get("failed", c.failed);
  get("rejected", c.rejected);
  get("in_flight", c.in_flight);
  get("no_route", c.no_route);
  get("no_access", c.no_access);
  get("tdma_dropped", c.tdma_dropped);
  get("retries_exhausted", c.retries_exhausted);
  get("acks_sent", c.acks_sent);
  get("acks_delivered", c.acks_delivered);
  get("acks_dropped", c.acks_dropped);
  get("cloud_abstracts", c.cloud_abstracts);
  get("cache_hits", c.cache_hits);
  get("cache_misses", c.cache_misses);
  get("transmissions", c.transmissions);
  get("timeouts", c.timeouts);
  return c;
}

template <typename T>
T require(const json& doc, const char* key) {
  if (!doc.contains(key)) throw std::runtime_error(std::string("manifest: missing field ") + key);
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception&) {
    throw std::runtime_error(std::string("manifest: field ") + key + " has the wrong type");
  }
}

}  // namespace

void write_latency_csv(std::ostream& out, std::string_view run_id,
                       std::span<const LatencyRecord> records) {
  out << kLatencyHeader << '\n';
  for (const LatencyRecord& r : records) {
    const bool done = r.outcome == TaskOutcome::Completed;
    out << run_id << ',' << r.task_id << ',' << r.app_id << ',' << to_string(Endpoint{r.src}) << ','
        << to_string(r.dst) << ',' << to_string(r.kind) << ',' << to_string(r.comm_type) << ','
        << r.hops << ',' << to_string(r.outcome) << ',' << format_fixed(r.arrival_s, 9) << ','
        << (done ? format_fixed(r.completion_s, 9) : "") << ','
        << (done ? format_fixed(r.total_s(), 9) : "") << ',' << format_fixed(r.network_s, 9) << ','
        << format_fixed(r.admission_s, 9) << ',' << format_fixed(r.auth_s, 9) << ','
        << format_fixed(r.load_s, 9) << ',' << format_fixed(r.tdma_wait_s, 9) << ','
        << format_fixed(r.cpu_queue_s, 9) << ',' << format_fixed(r.exec_s, 9) << ','
        << format_fixed(r.timeout_s, 9) << ',' << r.attempts << ',' << r.transmissions << ','
        << format_fixed(r.net_j, 9) << '\n';
  }
}

json latency_json(std::string_view run_id, std::span<const LatencyRecord> records) {
  json rows = json::array();
  for (const LatencyRecord& r : records) {
    const bool done = r.outcome == TaskOutcome::Completed;
    rows.push_back({{"task_id", r.task_id},
                    {"app_id", r.app_id},
                    {"src", to_string(Endpoint{r.src})},
                    {"dst", to_string(r.dst)},
                    {"route", to_string(r.kind)},
                    {"comm_type", to_string(r.comm_type)},
                    {"hops", r.hops},
                    {"outcome", to_string(r.outcome)},
                    {"arrival_s", r.arrival_s},
                    {"completion_s", done ? json(r.completion_s) : json()},
                    {"latency_s", done ? json(r.total_s()) : json()},
                    {"network_s", r.network_s},
                    {"admission_s", r.admission_s},
                    {"auth_s", r.auth_s},
                    {"load_s", r.load_s},
                    {"tdma_wait_s", r.tdma_wait_s},
                    {"cpu_queue_s", r.cpu_queue_s},
                    {"exec_s", r.exec_s},
                    {"timeout_s", r.timeout_s},
                    {"attempts", r.attempts},
                    {"transmissions", r.transmissions},
                    {"net_j", r.net_j}});
  }
  return {{"run_id", run_id}, {"tasks", rows}};
}

json energy_json(std::span<const EnergyRow> rows) {
  json out = json::array();
  for (const EnergyRow& r : rows) {
    out.push_back({{"run_id", r.run_id},
                   {"fn_id", r.fn_id},
                   {"comm_type", r.comm_type},
                   {"cpu_j", r.cpu_j},
                   {"net_j", r.net_j},
                   {"avg_power_w", r.avg_power_w},
                   {"round_index", r.round_index}});
  }
  return out;
}

ConnectionStats connections_from_latency_csv(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line != kLatencyHeader) {
    throw std::runtime_error("latency report: missing or unexpected header");
  }
  const std::vector<std::string_view> header = split(kLatencyHeader, ',');
  std::map<std::string_view, std::size_t> col;
  for (std::size_t i = 0; i < header.size(); ++i) col[header[i]] = i;

  ConnectionStats stats;
  std::size_t line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    const std::vector<std::string_view> f = split(line, ',');
    if (f.size() != header.size()) {
      throw std::runtime_error("latency report line " + std::to_string(line_no) + ": expected " +
                               std::to_string(header.size()) + " fields");
    }
    add_connection(stats, f[col["comm_type"]],
                   parse_number<std::uint64_t>(f[col["transmissions"]], line_no),
                   parse_number<double>(f[col["net_j"]], line_no), line_no);
  }
  return stats;
}

ConnectionStats connections_from_latency_json(const json& doc) {
  ConnectionStats stats;
  if (!doc.is_object() || !doc.contains("tasks") || !doc.at("tasks").is_array()) {
    throw std::runtime_error("latency report: expected an object with a tasks array");
  }
  std::size_t i = 0;
  for (const json& t : doc.at("tasks")) {
    ++i;
    try {
      add_connection(stats, t.at("comm_type").get<std::string>(),
                     t.at("transmissions").get<std::uint64_t>(), t.at("net_j").get<double>(), i);
    } catch (const json::exception& e) {
      throw std::runtime_error("latency report task " + std::to_string(i) + ": " + e.what());
    }
  }
  return stats;
}

json to_json(const RunManifest& m) {
  json conn = json::object();
  for (CommType c : kAllCommTypes) {
    const std::size_t k = index_of(c);
    conn[std::string(to_string(c))] = {
        {"connections", m.connections.count[k]},
        {"net_j", m.connections.net_joules[k]},
        {"avg_power_w",
         per_connection_power(m.connections.count[k], m.connections.net_joules[k], m.horizon_s)}};
  }
  return {{"run_id", m.run_id},
          {"config_hash", m.config_hash},
          {"workload_digest", m.workload_digest},
          {"seed", m.seed},
          {"platform", to_string(m.platform)},
          {"horizon_s", m.horizon_s},
          {"format", m.format == ReportFormat::Csv ? "csv" : "json"},
          {"outputs", {{"energy", m.energy_path}, {"latency", m.latency_path}}},
          {"started_at", m.started_at},
          {"finished_at", m.finished_at},
          {"counters", counters_json(m.counters)},
          {"connections", conn},
          {"assumed_parameters", m.assumed_parameters}};
}

RunManifest manifest_from_json(const json& doc) {
  if (!doc.is_object()) throw std::runtime_error("manifest: expected a JSON object");
  RunManifest m;
  m.run_id = require<std::string>(doc, "run_id");
  m.config_hash = require<std::string>(doc, "config_hash");
  m.workload_digest = require<std::string>(doc, "workload_digest");
  m.seed = require<std::uint64_t>(doc, "seed");
  const auto platform = parse_platform(require<std::string>(doc, "platform"));
  if (!platform) throw std::runtime_error("manifest: unknown platform");
  m.platform = *platform;
  m.horizon_s = require<double>(doc, "horizon_s");
  const std::string fmt = require<std::string>(doc, "format");
  if (fmt != "csv" && fmt != "json") throw std::runtime_error("manifest: unknown format");
  m.format = fmt == "csv" ? ReportFormat::Csv : ReportFormat::Json;
  const json outputs = require<json>(doc, "outputs");
  m.energy_path = require<std::string>(outputs, "energy");
  m.latency_path = require<std::string>(outputs, "latency");
  m.started_at = doc.value("started_at", "");
  m.finished_at = doc.value("finished_at", "");
  if (doc.contains("counters")) m.counters = counters_from_json(doc.at("counters"));
  if (doc.contains("connections")) {
    const json& conn = doc.at("connections");
    for (CommType c : kAllCommTypes) {
      const std::string name(to_string(c));
      if (!conn.contains(name)) continue;
      m.connections.count[index_of(c)] = require<std::uint64_t>(conn.at(name), "connections");
      m.connections.net_joules[index_of(c)] = require<double>(conn.at(name), "net_j");
    }
  }
  m.assumed_parameters = doc.value("assumed_parameters", json::object());
  return m;
}

std::vector<ComparisonRow> compare_connections(const ConnectionStats& focan, const ConnectionStats& d2d,
                                               double horizon_s) {
  std::vector<ComparisonRow> rows;
  std::uint64_t fc = 0, dc = 0;
  double fj = 0.0, dj = 0.0;
  for (CommType c : kAllCommTypes) {
    const std::size_t k = index_of(c);
    ComparisonRow row;
    row.comm_type = std::string(to_string(c));
    row.focan_connections = focan.count[k];
    row.d2d_connections = d2d.count[k];
    row.focan_avg_power_w = per_connection_power(focan.count[k], focan.net_joules[k], horizon_s);
    row.d2d_avg_power_w = per_connection_power(d2d.count[k], d2d.net_joules[k], horizon_s);
    if (row.focan_connections > 0 && row.d2d_connections > 0) {
      if (row.focan_avg_power_w > 0.0) row.ratio = row.d2d_avg_power_w / row.focan_avg_power_w;
      fc += focan.count[k];
      dc += d2d.count[k];
      fj += focan.net_joules[k];
      dj += d2d.net_joules[k];
    }
    rows.push_back(row);
  }
  ComparisonRow common;
  common.comm_type = "common";
  common.focan_connections = fc;
  common.d2d_connections = dc;
  common.focan_avg_power_w = per_connection_power(fc, fj, horizon_s);
  common.d2d_avg_power_w = per_connection_power(dc, dj, horizon_s);
  if (fc > 0 && dc > 0 && common.focan_avg_power_w > 0.0) {
    common.ratio = common.d2d_avg_power_w / common.focan_avg_power_w;
  }
  rows.push_back(common);
  return rows;
}

void write_comparison_csv(std::ostream& out, std::span<const ComparisonRow> rows) {
  // Powers are per connection and tiny; scientific notation keeps precision.
  auto sci = [](double v) {
    char buf[64];
    const auto [ptr, ec] =
        std::to_chars(buf, buf + sizeof(buf), v, std::chars_format::scientific, 9);
    return ec == std::errc() ? std::string(buf, ptr) : std::string("nan");
  };
  out << "comm_type,focan_connections,focan_avg_power_w,d2d_connections,d2d_avg_power_w,ratio\n";
  for (const ComparisonRow& r : rows) {
    out << r.comm_type << ',' << r.focan_connections << ',' << sci(r.focan_avg_power_w) << ','
        << r.d2d_connections << ',' << sci(r.d2d_avg_power_w) << ','
        << (r.ratio ? format_fixed(*r.ratio, 9) : "") << '\n';
  }
}

std::string utc_timestamp() {
  const std::time_t now = std::chrono::system_clock::to_time_t(std::chrono::system_clock::now());
  std::tm tm{};
  gmtime_r(&now, &tm);
  char buf[32];
  std::strftime(buf, sizeof(buf), "%Y-%m-%dT%H:%M:%SZ", &tm);
  return buf;
}

}  // namespace focan
