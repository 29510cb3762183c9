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

#include "focan/workload.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <cmath>
#include <fstream>
#include <istream>
#include <ostream>
#include <string_view>

#include "focan/util.hpp"

namespace focan {

TraceError::TraceError(std::size_t line, const std::string& what)
    : std::runtime_error("trace line " + std::to_string(line) + ": " + what), line_(line) {}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r')) s.remove_suffix(1);
  return s;
}

bool parse_double(std::string_view s, double& out) {
  s = trim(s);
  if (s.empty()) return false;
  if (s.front() == '+') s.remove_prefix(1);
  const auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), out);
  return ec == std::errc() && ptr == s.data() + s.size() && std::isfinite(out);
}

}  // namespace

std::vector<TraceSample> parse_trace(std::istream& in, std::vector<std::string>* warnings) {
  std::vector<TraceSample> out;
  std::string raw;
  std::size_t line_no = 0;
  bool seen_content = false;
  while (std::getline(in, raw)) {
    ++line_no;
    const std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;

    const auto comma = line.find(',');
    double t = 0.0;
    double level = 0.0;
    const bool ok = comma != std::string_view::npos &&
                    line.find(',', comma + 1) == std::string_view::npos &&
                    parse_double(line.substr(0, comma), t) &&
                    parse_double(line.substr(comma + 1), level);
    if (!ok) {
      double first = 0.0;
      const bool numeric_start = parse_double(line.substr(0, std::min(comma, line.size())), first);
      if (!seen_content && !numeric_start) {  // header row
        seen_content = true;
        continue;
      }
      throw TraceError(line_no, "expected \"t_seconds,level\"");
    }
    seen_content = true;
    if (!std::isfinite(t) || !std::isfinite(level)) throw TraceError(line_no, "non-finite value");
    if (level < 0.0 || level > 1.0) throw TraceError(line_no, "level outside [0,1]");
    if (t < 0.0) throw TraceError(line_no, "negative time");
    if (!out.empty() && t < out.back().t_s) throw TraceError(line_no, "time goes backwards");
    out.push_back({t, level});
  }
  if (out.empty() && warnings != nullptr) warnings->push_back("trace is empty");
  return out;
}

std::vector<TraceSample> load_trace(const std::filesystem::path& path,
                                    std::vector<std::string>* warnings) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open trace " + path.string());
  return parse_trace(in, warnings);
}

void write_trace(std::ostream& out, std::span<const TraceSample> samples) {
  out << "t_seconds,level\n";
  for (const TraceSample& s : samples) {
    out << format_fixed(s.t_s, 3) << ',' << format_fixed(s.level, 6) << '\n';
  }
}

std::vector<TraceSample> synthetic_trace(double horizon_s, double step_s, std::uint64_t seed) {
  constexpr double kTwoPi = 6.283185307179586;
  SplitMix64 rng(seed);
  std::vector<double> raw;
  bool burst = false;
  double burst_height = 0.0;
  for (double t = 0.0; t <= horizon_s + 1e-9; t += step_s) {
    // two-state burst process: rare onsets, short bursts
    const double u = rng.uniform();
    if (!burst && u < 0.03) {
      burst = true;
      burst_height = 0.3 + 0.3 * rng.uniform();
    } else if (burst && u < 0.2) {
      burst = false;
    }
    double v = 0.35 + 0.18 * std::sin(kTwoPi * t / 300.0) + 0.08 * std::sin(kTwoPi * t / 47.0) +
               0.08 * (rng.uniform() - 0.5);
    if (burst) v += burst_height;
    raw.push_back(std::max(v, 0.0));
  }
  const double peak = *std::max_element(raw.begin(), raw.end());
  std::vector<TraceSample> out;
  out.reserve(raw.size());
  for (std::size_t i = 0; i < raw.size(); ++i) {
    // six decimals, so the trace survives a round trip through a file
    const double level = peak > 0 ? std::round(raw[i] / peak * 1e6) / 1e6 : 0.0;
    out.push_back({static_cast<double>(i) * step_s, level});
  }
  return out;
}

double OfferedLoad::at(double t) const {
  auto it = std::upper_bound(segments_.begin(), segments_.end(), t,
                             [](double x, const Segment& s) { return x < s.start_s; });
  if (it == segments_.begin()) return 0.0;
  return std::prev(it)->rate_bps;
}

OfferedLoad scale_trace(std::span<const TraceSample> samples, double max_rate_bps) {
  std::vector<OfferedLoad::Segment> segs;
  segs.reserve(samples.size());
  for (const TraceSample& s : samples) {
    const double rate = s.level * max_rate_bps;
    if (!segs.empty() && segs.back().start_s == s.t_s) {
      segs.back().rate_bps = rate;  // duplicate timestamp: last one wins
    } else {
      segs.push_back({s.t_s, rate});
    }
  }
  return OfferedLoad(std::move(segs));
}

EndpointPicker uniform_thing_picker(const CityTopology& topology) {
  std::vector<ThingId> ids;
  std::vector<std::vector<std::string>> apps;
  for (const Thing& t : topology.things()) {
    ids.push_back(t.id);
    apps.emplace_back(t.authorized_apps.begin(), t.authorized_apps.end());
  }
  if (ids.size() < 2) throw std::invalid_argument("uniform_thing_picker needs two things");
  return [ids = std::move(ids), apps = std::move(apps)](std::mt19937_64& rng) {
    const std::size_t n = ids.size();
    const std::size_t s = rng() % n;
    std::size_t d = rng() % (n - 1);
    if (d >= s) ++d;
    EndpointChoice c;
    c.src = ids[s];
    c.dst = ids[d];
    const auto& a = apps[s];
    c.app_id = a.empty() ? std::string("default") : a[rng() % a.size()];
    return c;
  };
}

namespace {

double exponential(std::mt19937_64& rng, double rate) {
  const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53;  // [0, 1)
  return -std::log1p(-u) / rate;
}

void emit(ArrivalSeries& out, double t, const TaskShape& shape, const EndpointPicker& picker,
          std::mt19937_64& rng) {
  AppTask task;
  task.id = out.tasks.size() + 1;
  task.arrival_s = t;
  task.payload_bits = shape.payload_bits;
  task.cpu_bits = shape.cpu_bits;
  if (picker) {
    EndpointChoice c = picker(rng);
    task.src = c.src;
    task.dst = c.dst;
    task.app_id = std::move(c.app_id);
  }
  out.tasks.push_back(std::move(task));
}

}  // namespace

ArrivalSeries materialize(const OfferedLoad& load, double horizon_s, const TaskShape& shape,
                          const EndpointPicker& picker, std::uint64_t seed) {
  if (!(shape.payload_bits > 0.0)) throw std::invalid_argument("task payload must be > 0");
  ArrivalSeries out;
  out.horizon_s = horizon_s;
  std::mt19937_64 rng(seed);
  const auto& segs = load.segments();
  for (std::size_t i = 0; i < segs.size(); ++i) {
    const double start = std::max(segs[i].start_s, 0.0);
    const double end = std::min(i + 1 < segs.size() ? segs[i + 1].start_s : horizon_s, horizon_s);
    const double rate = segs[i].rate_bps / shape.payload_bits;
    if (!(rate > 0.0) || start >= end) continue;
    // Memorylessness makes restarting at each boundary exact.
    for (double t = start + exponential(rng, rate); t < end; t += exponential(rng, rate)) {
      emit(out, t, shape, picker, rng);
    }
  }
  return out;
}

ArrivalSeries gen_poisson(double rate_per_s, double duration_s, std::uint64_t seed,
                          const TaskShape& shape, const EndpointPicker& picker) {
  if (rate_per_s < 0.0 || !std::isfinite(rate_per_s)) {
    throw std::invalid_argument("gen_poisson: rate must be >= 0");
  }
  ArrivalSeries out;
  out.horizon_s = duration_s;
  if (rate_per_s == 0.0) return out;
  std::mt19937_64 rng(seed);
  for (double t = exponential(rng, rate_per_s); t <= duration_s; t += exponential(rng, rate_per_s)) {
    emit(out, t, shape, picker, rng);
  }
  return out;
}

std::uint64_t workload_digest(const ArrivalSeries& series) {
  Fnv1a h;
  h.add(series.horizon_s);
  for (const AppTask& t : series.tasks) {
    h.add(t.id);
    h.add(t.app_id);
    h.add(t.src.value);
    h.add(static_cast<std::uint64_t>(t.dst.index()));
    h.add(std::holds_alternative<ThingId>(t.dst) ? std::get<ThingId>(t.dst).value
                                                   : std::get<FnId>(t.dst).value);
    h.add(t.payload_bits);
    h.add(t.cpu_bits);
    h.add(t.arrival_s);
  }
  return h.value();
}

}  // namespace focan
