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

#include "focan/config.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <set>

#include "focan/util.hpp"

namespace focan {

using nlohmann::json;

namespace {

std::string join_violations(const std::vector<Violation>& v) {
  std::string out = "invalid configuration:";
  for (const Violation& x : v) out += "\n  " + x.path + ": " + x.message;
  return out;
}

std::string child(const std::string& path, const std::string& key) {
  return path.empty() ? key : path + "." + key;
}

std::string index_path(const std::string& path, std::size_t i) {
  return path + "[" + std::to_string(i) + "]";
}

// Walks one JSON object, recording type errors, range errors and unknown
// keys against dotted field paths.
class ObjectReader {
 public:
  ObjectReader(const json& obj, std::string path, std::vector<Violation>& out)
      : obj_(obj), path_(std::move(path)), out_(out) {
    if (!obj_.is_object()) fail(path_.empty() ? "<root>" : path_, "expected an object");
  }

  bool ok() const { return obj_.is_object(); }
  bool has(const char* key) const { return ok() && obj_.contains(key) && !obj_.at(key).is_null(); }
  const json& at(const char* key) const { return obj_.at(key); }
  std::string path(const char* key) const { return child(path_, key); }

  void fail(const std::string& path, const std::string& msg) { out_.push_back({path, msg}); }

  void number(const char* key, double& out, const std::function<bool(double)>& valid = {},
              const char* rule = "") {
    seen_.insert(key);
    if (!has(key)) return;
    const json& v = at(key);
    if (!v.is_number()) {
      fail(path(key), "expected a number");
      return;
    }
    const double x = v.get<double>();
    if (!std::isfinite(x) || (valid && !valid(x))) {
      fail(path(key), std::string("must be ") + rule);
      return;
    }
    out = x;
  }

  template <typename Int>
  void integer(const char* key, Int& out, long long min_value) {
    seen_.insert(key);
    if (!has(key)) return;
    const json& v = at(key);
    if (!v.is_number_integer()) {
      fail(path(key), "expected an integer");
      return;
    }
    const long long x = v.get<long long>();
    if (x < min_value) {
      fail(path(key), "must be >= " + std::to_string(min_value));
      return;
    }
    out = static_cast<Int>(x);
  }

  void string(const char* key, std::string& out) {
    seen_.insert(key);
    if (!has(key)) return;
    if (!at(key).is_string()) {
      fail(path(key), "expected a string");
      return;
    }
    out = at(key).get<std::string>();
  }

  const json* object(const char* key) {
    seen_.insert(key);
    if (!has(key)) return nullptr;
    return &at(key);
  }

  void finish() {
    if (!ok()) return;
    for (const auto& [key, _] : obj_.items()) {
      if (seen_.count(key) == 0) fail(child(path_, key), "unknown field");
    }
  }

 private:
  const json& obj_;
  std::string path_;
  std::vector<Violation>& out_;
  std::set<std::string> seen_;
};

auto positive = [](double x) { return x > 0.0; };
auto non_negative = [](double x) { return x >= 0.0; };

void parse_thing(const json& j, const std::string& path, Thing& t, std::vector<Violation>& v) {
  ObjectReader r(j, path, v);
  if (!r.ok()) return;
  if (!r.has("id")) r.fail(r.path("id"), "required");
  r.integer("id", t.id.value, 0);
  r.number("x", t.pos.x);
  r.number("y", t.pos.y);
  if (const json* radios = r.object("radios")) {
    if (!radios->is_array()) {
      r.fail(r.path("radios"), "expected an array");
    } else {
      for (std::size_t i = 0; i < radios->size(); ++i) {
        const json& x = (*radios)[i];
        auto radio = x.is_string() ? parse_radio(x.get<std::string>()) : std::nullopt;
        if (!radio) {
          r.fail(index_path(r.path("radios"), i), "expected one of bluetooth, zigbee, wifi");
        } else {
          t.radios.insert(*radio);
        }
      }
    }
  } else {
    t.radios = {Radio::WiFi};
  }
  if (t.radios.empty()) r.fail(r.path("radios"), "needs at least one radio");
  if (const json* apps = r.object("apps")) {
    if (!apps->is_array()) {
      r.fail(r.path("apps"), "expected an array");
    } else {
      for (std::size_t i = 0; i < apps->size(); ++i) {
        if (!(*apps)[i].is_string()) {
          r.fail(index_path(r.path("apps"), i), "expected a string");
        } else {
          t.authorized_apps.insert((*apps)[i].get<std::string>());
        }
      }
    }
  }
  r.finish();
}

void parse_fn(const json& j, const std::string& path, FogNode& f, std::vector<Violation>& v) {
  ObjectReader r(j, path, v);
  if (!r.ok()) return;
  if (!r.has("id")) r.fail(r.path("id"), "required");
  r.integer("id", f.id.value, 0);
  r.number("x", f.pos.x);
  r.number("y", f.pos.y);
  r.number("radius", f.coverage_radius_m, positive, "> 0");
  r.integer("cores", f.cores, 1);
  r.number("core_rate", f.core_rate_bps, positive, "> 0");
  r.integer("storage_capacity", f.storage_capacity, 0);
  r.number("ram_per_core_bytes", f.ram_per_core_bytes, non_negative, ">= 0");
  r.finish();
}

void parse_topology(const json& j, const std::string& path, const SimConfig& defaults,
                    TopologyConfig& topo, std::vector<Violation>& v) {
  ObjectReader r(j, path, v);
  if (!r.ok()) return;
  topo = TopologyConfig{};
  r.number("short_range_m", topo.ranges.short_range_m, positive, "> 0");
  r.number("wifi_range_m", topo.ranges.wifi_range_m, positive, "> 0");
  r.number("fn_link_bandwidth_bps", topo.fn_link_bandwidth_bps, positive, "> 0");
  r.number("wireless_bandwidth_bps", topo.wireless_bandwidth_bps, positive, "> 0");
  if (const json* things = r.object("things")) {
    if (!things->is_array()) {
      r.fail(r.path("things"), "expected an array");
    } else {
      for (std::size_t i = 0; i < things->size(); ++i) {
        Thing t;
        parse_thing((*things)[i], index_path(r.path("things"), i), t, v);
        topo.things.push_back(std::move(t));
      }
    }
  }
  if (const json* fns = r.object("fns")) {
    if (!fns->is_array()) {
      r.fail(r.path("fns"), "expected an array");
    } else {
      for (std::size_t i = 0; i < fns->size(); ++i) {
        FogNode f;
        f.cores = defaults.cores;
        f.core_rate_bps = defaults.core_rate_bps;
        f.storage_capacity = defaults.cache_capacity;
        parse_fn((*fns)[i], index_path(r.path("fns"), i), f, v);
        topo.fns.push_back(f);
      }
    }
  }
  if (const json* edges = r.object("fn_edges")) {
    topo.fn_edges.emplace();
    if (!edges->is_array()) {
      r.fail(r.path("fn_edges"), "expected an array of [a, b] pairs");
    } else {
      for (std::size_t i = 0; i < edges->size(); ++i) {
        const json& e = (*edges)[i];
        if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned() ||
            !e[1].is_number_unsigned()) {
          r.fail(index_path(r.path("fn_edges"), i), "expected [a, b] with FN ids");
          continue;
        }
        topo.fn_edges->emplace_back(FnId{e[0].get<std::uint32_t>()}, FnId{e[1].get<std::uint32_t>()});
      }
    }
  }
  if (topo.fns.empty()) r.fail(r.path("fns"), "needs at least one FN");
  r.finish();
}

void parse_task(const json& j, const std::string& path, AppTask& t, const WorkloadConfig& w,
                std::vector<Violation>& v) {
  ObjectReader r(j, path, v);
  if (!r.ok()) return;
  t.payload_bits = w.payload_bits;
  t.cpu_bits = w.cpu_bits;
  r.integer("id", t.id, 0);
  r.string("app", t.app_id);
  if (!r.has("src")) r.fail(r.path("src"), "required");
  r.integer("src", t.src.value, 0);
  const bool has_dst = r.has("dst");
  const bool has_dst_fn = r.has("dst_fn");
  if (has_dst == has_dst_fn) r.fail(path, "exactly one of dst, dst_fn is required");
  if (has_dst) {
    ThingId d;
    r.integer("dst", d.value, 0);
    t.dst = d;
  } else {
    r.integer("dst", t.src.value, 0);  // marks the key as known
  }
  if (has_dst_fn) {
    FnId d;
    r.integer("dst_fn", d.value, 0);
    t.dst = d;
  } else {
    std::uint32_t unused = 0;
    r.integer("dst_fn", unused, 0);
  }
  r.number("payload_bits", t.payload_bits, positive, "> 0");
  r.number("cpu_bits", t.cpu_bits, non_negative, ">= 0");
  r.number("arrival_s", t.arrival_s, non_negative, ">= 0");
  r.finish();
}

std::string_view to_string(WorkloadSource s) {
  switch (s) {
    case WorkloadSource::Trace: return "trace";
    case WorkloadSource::Poisson: return "poisson";
    case WorkloadSource::Tasks: return "tasks";
    case WorkloadSource::None: return "none";
  }
  return "?";
}

std::string_view to_string(TdmaPriority p) {
  switch (p) {
    case TdmaPriority::SecondaryFirst: return "secondary_first";
    case TdmaPriority::PrimaryFirst: return "primary_first";
    case TdmaPriority::InputOrder: return "input_order";
  }
  return "?";
}

json load_json_file(const std::filesystem::path& path, const std::string& field) {
  std::ifstream in(path);
  if (!in) throw ConfigError({{field, "cannot open " + path.string()}});
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ConfigError({{field, std::string("malformed JSON: ") + e.what()}});
  }
}

}  // namespace

ConfigError::ConfigError(std::vector<Violation> violations)
    : std::runtime_error(join_violations(violations)), violations_(std::move(violations)) {}

SimConfig parse_config(const json& doc, const std::filesystem::path& base_dir) {
  std::vector<Violation> v;
  SimConfig c;
  ObjectReader r(doc, "", v);
  if (!r.ok()) throw ConfigError(std::move(v));

  r.number("horizon_s", c.horizon_s, positive, "> 0");
  r.integer("seed", c.seed, 0);
  r.number("round_s", c.round_s, positive, "> 0");
  r.number("admission_cap_bps", c.admission_cap_bps, positive, "> 0");
  r.number("core_rate_bps", c.core_rate_bps, positive, "> 0");
  r.integer("cores", c.cores, 1);
  r.integer("cache_capacity", c.cache_capacity, 0);
  r.number("miss_penalty_s", c.miss_penalty_s, non_negative, ">= 0");
  r.number("auth_latency_s", c.auth_latency_s, non_negative, ">= 0");
  r.number("ack_bits", c.ack_bits, positive, "> 0");

  if (const json* d = r.object("delays_ms")) {
    ObjectReader dr(*d, "delays_ms", v);
    double t2t = c.delays.t2t_s * 1e3, tfnt = c.delays.tfnt_s * 1e3, fn2fn = c.delays.fn2fn_s * 1e3;
    dr.number("t2t", t2t, positive, "> 0");
    dr.number("tfnt", tfnt, positive, "> 0");
    dr.number("fn2fn", fn2fn, positive, "> 0");
    dr.finish();
    c.delays.t2t_s = t2t / 1e3;
    c.delays.tfnt_s = tfnt / 1e3;
    c.delays.fn2fn_s = fn2fn / 1e3;
  }
  if (const json* d = r.object("rtt_ms")) {
    ObjectReader dr(*d, "rtt_ms", v);
    double wl = c.delays.wireless_rtt_s * 1e3, wd = c.delays.wired_rtt_s * 1e3;
    dr.number("wireless", wl, positive, "> 0");
    dr.number("wired", wd, positive, "> 0");
    dr.finish();
    c.delays.wireless_rtt_s = wl / 1e3;
    c.delays.wired_rtt_s = wd / 1e3;
  }
  if (const json* t = r.object("tdma")) {
    ObjectReader tr(*t, "tdma", v);
    if (tr.has("slot_duration_s") && tr.at("slot_duration_s").is_string()) {
      (void)tr.object("slot_duration_s");
      if (tr.at("slot_duration_s").get<std::string>() != "auto") {
        tr.fail("tdma.slot_duration_s", "must be a number > 0 or \"auto\"");
      }
    } else if (tr.has("slot_duration_s")) {
      tr.number("slot_duration_s", c.tdma.slot_duration_s, positive, "> 0");
      c.tdma_slot_auto = false;
    } else {
      (void)tr.object("slot_duration_s");
    }
    tr.integer("slots_per_round", c.tdma.slots_per_round, 1);
    tr.integer("ttl_rounds", c.tdma.ttl_rounds, 1);
    std::string prio(to_string(c.tdma_priority));
    tr.string("priority", prio);
    if (prio == "secondary_first") {
      c.tdma_priority = TdmaPriority::SecondaryFirst;
    } else if (prio == "primary_first") {
      c.tdma_priority = TdmaPriority::PrimaryFirst;
    } else if (prio == "input_order") {
      c.tdma_priority = TdmaPriority::InputOrder;
    } else {
      tr.fail("tdma.priority", "expected secondary_first, primary_first or input_order");
    }
    tr.finish();
  }
  if (const json* p = r.object("power")) {
    ObjectReader pr(*p, "power", v);
    pr.number("p_idle_w", c.power.p_idle_w, non_negative, ">= 0");
    pr.number("p_max_w", c.power.p_max_w, positive, "> 0");
    pr.number("nic_wireless_j_per_bit", c.power.nic_wireless_j_per_bit, non_negative, ">= 0");
    pr.number("nic_wired_j_per_bit", c.power.nic_wired_j_per_bit, non_negative, ">= 0");
    pr.finish();
  }
  if (!(c.power.p_idle_w < c.power.p_max_w)) v.push_back({"power", "p_idle_w must be < p_max_w"});

  if (const json* d = r.object("d2d")) {
    ObjectReader dr(*d, "d2d", v);
    dr.number("link_rate_bps", c.d2d.link_rate_bps, positive, "> 0");
    dr.number("retx_prob", c.d2d.retx_prob, [](double x) { return x >= 0.0 && x < 1.0; },
              "in [0,1)");
    dr.number("timeout_penalty_s", c.d2d.timeout_penalty_s, non_negative, ">= 0");
    dr.integer("max_retries", c.d2d.max_retries, 0);
    dr.number("range_m", c.d2d.range_m, positive, "> 0");
    dr.finish();
  }

  // Topology after the FN-level defaults are known.
  if (const json* t = r.object("topology")) {
    if (t->is_string()) {
      std::filesystem::path p = t->get<std::string>();
      if (p.is_relative()) p = base_dir / p;
      try {
        json tj = load_json_file(p, "topology");
        parse_topology(tj, "topology", c, c.topology, v);
      } catch (const ConfigError& e) {
        v.insert(v.end(), e.violations().begin(), e.violations().end());
      }
    } else {
      parse_topology(*t, "topology", c, c.topology, v);
    }
  } else {
    for (FogNode& f : c.topology.fns) {
      f.cores = c.cores;
      f.core_rate_bps = c.core_rate_bps;
      f.storage_capacity = c.cache_capacity;
    }
  }

  if (const json* w = r.object("workload")) {
    ObjectReader wr(*w, "workload", v);
    std::string src(to_string(c.workload.source));
    wr.string("source", src);
    if (src == "trace") {
      c.workload.source = WorkloadSource::Trace;
    } else if (src == "poisson") {
      c.workload.source = WorkloadSource::Poisson;
    } else if (src == "tasks") {
      c.workload.source = WorkloadSource::Tasks;
    } else if (src == "none") {
      c.workload.source = WorkloadSource::None;
    } else {
      wr.fail("workload.source", "expected trace, poisson, tasks or none");
    }
    wr.string("trace", c.workload.trace_path);
    if (!c.workload.trace_path.empty()) {
      std::filesystem::path p = c.workload.trace_path;
      if (p.is_relative() && !base_dir.empty()) c.workload.trace_path = (base_dir / p).string();
    }
    wr.number("max_rate_bps", c.workload.max_rate_bps, non_negative, ">= 0");
    wr.number("rate_per_s", c.workload.rate_per_s, non_negative, ">= 0");
    wr.number("payload_bits", c.workload.payload_bits, positive, "> 0");
    wr.number("cpu_bits", c.workload.cpu_bits, non_negative, ">= 0");
    if (const json* tasks = wr.object("tasks")) {
      if (!tasks->is_array()) {
        wr.fail("workload.tasks", "expected an array");
      } else {
        for (std::size_t i = 0; i < tasks->size(); ++i) {
          AppTask t;
          t.id = i + 1;
          parse_task((*tasks)[i], index_path("workload.tasks", i), t, c.workload, v);
          c.workload.tasks.push_back(std::move(t));
        }
      }
    }
    wr.finish();
  }
  r.finish();

  // Cross-field checks that need a consistent topology.
  if (v.empty()) {
    try {
      const CityTopology topo = build_topology(c.topology);
      for (std::size_t i = 0; i < c.workload.tasks.size(); ++i) {
        const AppTask& t = c.workload.tasks[i];
        const std::string p = index_path("workload.tasks", i);
        if (topo.find_thing(t.src) == nullptr) v.push_back({p + ".src", "unknown thing"});
        if (!topo.contains(t.dst)) {
          v.push_back({p + (std::holds_alternative<FnId>(t.dst) ? ".dst_fn" : ".dst"),
                       "unknown endpoint"});
        }
        if (t.dst == Endpoint{t.src}) v.push_back({p, "source and destination coincide"});
      }
      std::set<std::uint64_t> ids;
      for (std::size_t i = 0; i < c.workload.tasks.size(); ++i) {
        if (!ids.insert(c.workload.tasks[i].id).second) {
          v.push_back({index_path("workload.tasks", i) + ".id", "duplicate task id"});
        }
      }
    } catch (const TopologyError& e) {
      v.push_back({"topology", e.what()});
    }
  }
  if (!v.empty()) throw ConfigError(std::move(v));
  return c;
}

json read_config_json(const std::filesystem::path& path) { return load_json_file(path, "config"); }

SimConfig load_config(const std::filesystem::path& path) {
  const json doc = load_json_file(path, "config");
  return parse_config(doc, path.parent_path());
}

json to_json(const SimConfig& c) {
  json j;
  j["horizon_s"] = c.horizon_s;
  j["seed"] = c.seed;
  j["round_s"] = c.round_s;
  j["admission_cap_bps"] = c.admission_cap_bps;
  j["core_rate_bps"] = c.core_rate_bps;
  j["cores"] = c.cores;
  j["cache_capacity"] = c.cache_capacity;
  j["miss_penalty_s"] = c.miss_penalty_s;
  j["auth_latency_s"] = c.auth_latency_s;
  j["ack_bits"] = c.ack_bits;
  j["delays_ms"] = {{"t2t", c.delays.t2t_s * 1e3},
                    {"tfnt", c.delays.tfnt_s * 1e3},
                    {"fn2fn", c.delays.fn2fn_s * 1e3}};
  j["rtt_ms"] = {{"wireless", c.delays.wireless_rtt_s * 1e3}, {"wired", c.delays.wired_rtt_s * 1e3}};
  j["tdma"] = {{"slot_duration_s", c.tdma_slot_auto ? json("auto") : json(c.tdma.slot_duration_s)},
               {"slots_per_round", c.tdma.slots_per_round},
               {"ttl_rounds", c.tdma.ttl_rounds},
               {"priority", to_string(c.tdma_priority)}};
  j["power"] = {{"p_idle_w", c.power.p_idle_w},
                {"p_max_w", c.power.p_max_w},
                {"nic_wireless_j_per_bit", c.power.nic_wireless_j_per_bit},
                {"nic_wired_j_per_bit", c.power.nic_wired_j_per_bit}};
  j["d2d"] = {{"link_rate_bps", c.d2d.link_rate_bps},
              {"retx_prob", c.d2d.retx_prob},
              {"timeout_penalty_s", c.d2d.timeout_penalty_s},
              {"max_retries", c.d2d.max_retries},
              {"range_m", c.d2d.range_m}};

  json topo;
  topo["short_range_m"] = c.topology.ranges.short_range_m;
  topo["wifi_range_m"] = c.topology.ranges.wifi_range_m;
  topo["fn_link_bandwidth_bps"] = c.topology.fn_link_bandwidth_bps;
  topo["wireless_bandwidth_bps"] = c.topology.wireless_bandwidth_bps;
  topo["things"] = json::array();
  for (const Thing& t : c.topology.things) {
    json radios = json::array();
    for (Radio r : t.radios) radios.push_back(to_string(r));
    topo["things"].push_back({{"id", t.id.value},
                              {"x", t.pos.x},
                              {"y", t.pos.y},
                              {"radios", radios},
                              {"apps", t.authorized_apps}});
  }
  topo["fns"] = json::array();
  for (const FogNode& f : c.topology.fns) {
    topo["fns"].push_back({{"id", f.id.value},
                           {"x", f.pos.x},
                           {"y", f.pos.y},
                           {"radius", f.coverage_radius_m},
                           {"cores", f.cores},
                           {"core_rate", f.core_rate_bps},
                           {"storage_capacity", f.storage_capacity},
                           {"ram_per_core_bytes", f.ram_per_core_bytes}});
  }
  if (c.topology.fn_edges) {
    topo["fn_edges"] = json::array();
    for (const auto& [a, b] : *c.topology.fn_edges) topo["fn_edges"].push_back({a.value, b.value});
  }
  j["topology"] = topo;

  json w;
  w["source"] = to_string(c.workload.source);
  if (!c.workload.trace_path.empty()) w["trace"] = c.workload.trace_path;
  w["max_rate_bps"] = c.workload.max_rate_bps;
  w["rate_per_s"] = c.workload.rate_per_s;
  w["payload_bits"] = c.workload.payload_bits;
  w["cpu_bits"] = c.workload.cpu_bits;
  if (!c.workload.tasks.empty()) {
    w["tasks"] = json::array();
    for (const AppTask& t : c.workload.tasks) {
      json tj = {{"id", t.id},
                 {"app", t.app_id},
                 {"src", t.src.value},
                 {"payload_bits", t.payload_bits},
                 {"cpu_bits", t.cpu_bits},
                 {"arrival_s", t.arrival_s}};
      if (const auto* d = std::get_if<ThingId>(&t.dst)) {
        tj["dst"] = d->value;
      } else {
        tj["dst_fn"] = std::get<FnId>(t.dst).value;
      }
      w["tasks"].push_back(tj);
    }
  }
  j["workload"] = w;
  return j;
}

std::string config_hash(const SimConfig& config) {
  json j = to_json(config);
  j.erase("seed");
  Fnv1a h;
  h.add(std::string_view(j.dump()));
  return to_hex(h.value());
}

EngineParams engine_params(const SimConfig& c) {
  EngineParams p;
  p.horizon_s = c.horizon_s;
  p.round_s = c.round_s;
  p.delays = c.delays;
  p.admission_cap_bps = c.admission_cap_bps;
  p.miss_penalty_s = c.miss_penalty_s;
  p.auth_latency_s = c.auth_latency_s;
  p.ack_bits = c.ack_bits;
  p.tdma = c.tdma;
  if (c.tdma_slot_auto) {
    double max_packet = std::max(c.workload.payload_bits, c.ack_bits);
    for (const AppTask& t : c.workload.tasks) max_packet = std::max(max_packet, t.payload_bits);
    p.tdma.slot_duration_s = default_slot_duration(max_packet, c.topology.fn_link_bandwidth_bps);
  }
  p.tdma_priority = c.tdma_priority;
  p.power = c.power;
  return p;
}

CityTopology build_city(const SimConfig& config) { return build_topology(config.topology); }

ArrivalSeries build_workload(const SimConfig& c, const CityTopology& topology) {
  const TaskShape shape{c.workload.payload_bits, c.workload.cpu_bits};
  switch (c.workload.source) {
    case WorkloadSource::None: {
      ArrivalSeries s;
      s.horizon_s = c.horizon_s;
      return s;
    }
    case WorkloadSource::Tasks: {
      ArrivalSeries s;
      s.horizon_s = c.horizon_s;
      s.tasks = c.workload.tasks;
      std::stable_sort(s.tasks.begin(), s.tasks.end(),
                       [](const AppTask& a, const AppTask& b) { return a.arrival_s < b.arrival_s; });
      return s;
    }
    case WorkloadSource::Poisson:
      if (topology.things().size() < 2) return gen_poisson(0.0, c.horizon_s, c.seed);
      return gen_poisson(c.workload.rate_per_s, c.horizon_s, c.seed, shape,
                         uniform_thing_picker(topology));
    case WorkloadSource::Trace: {
      const std::vector<TraceSample> samples = c.workload.trace_path.empty()
                                                   ? synthetic_trace(c.horizon_s)
                                                   : load_trace(c.workload.trace_path);
      if (topology.things().size() < 2) {
        ArrivalSeries s;
        s.horizon_s = c.horizon_s;
        return s;
      }
      return materialize(scale_trace(samples, c.workload.max_rate_bps), c.horizon_s, shape,
                         uniform_thing_picker(topology), c.seed);
    }
  }
  return {};
}

}  // namespace focan
