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

// Normalized I/O traces and the task streams derived from them.

#ifndef FOCAN_WORKLOAD_HPP_
#define FOCAN_WORKLOAD_HPP_

#include <cstdint>
#include <filesystem>
#include <functional>
#include <iosfwd>
#include <random>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "focan/ids.hpp"
#include "focan/topology.hpp"

namespace focan {

struct TraceSample {
  double t_s = 0.0;
  double level = 0.0;  // in [0, 1]
};

class TraceError : public std::runtime_error {
 public:
  TraceError(std::size_t line, const std::string& what);
  std::size_t line() const { return line_; }

 private:
  std::size_t line_;
};

// Two-column CSV "t_seconds,level", optional header, '#' comments.
// Parsing is locale independent. An empty input yields an empty series and
// a warning.
std::vector<TraceSample> parse_trace(std::istream& in, std::vector<std::string>* warnings = nullptr);
std::vector<TraceSample> load_trace(const std::filesystem::path& path,
                                    std::vector<std::string>* warnings = nullptr);
void write_trace(std::ostream& out, std::span<const TraceSample> samples);

// Bursty normalized trace (peak level exactly 1) used when no trace file is
// supplied. Deterministic for a given seed.
std::vector<TraceSample> synthetic_trace(double horizon_s = 1000.0, double step_s = 1.0,
                                         std::uint64_t seed = 5);

// Piecewise-constant offered load in bits/s: zero before the first sample,
// the last level held afterwards.
class OfferedLoad {
 public:
  struct Segment {
    double start_s;
    double rate_bps;
  };

  OfferedLoad() = default;
  explicit OfferedLoad(std::vector<Segment> segments) : segments_(std::move(segments)) {}

  double at(double t) const;
  const std::vector<Segment>& segments() const { return segments_; }

 private:
  std::vector<Segment> segments_;
};

OfferedLoad scale_trace(std::span<const TraceSample> samples, double max_rate_bps);

struct AppTask {
  std::uint64_t id = 0;
  std::string app_id;
  ThingId src;
  Endpoint dst = ThingId{};
  double payload_bits = 1e6;
  double cpu_bits = 1e6;  // work at the core processing rate
  double arrival_s = 0.0;
};

struct ArrivalSeries {
  std::vector<AppTask> tasks;  // sorted by arrival
  double horizon_s = 0.0;
};

struct TaskShape {
  double payload_bits = 1e6;
  double cpu_bits = 1e6;
};

struct EndpointChoice {
  ThingId src;
  Endpoint dst = ThingId{};
  std::string app_id;
};

using EndpointPicker = std::function<EndpointChoice(std::mt19937_64&)>;

// Uniform source thing, uniform distinct destination thing, uniform app
// among the source's authorized apps. Requires at least two things.
EndpointPicker uniform_thing_picker(const CityTopology& topology);

// Non-homogeneous Poisson arrivals with rate offered_load(t) / payload_bits,
// sampled exactly per constant segment over [0, horizon].
ArrivalSeries materialize(const OfferedLoad& load, double horizon_s, const TaskShape& shape,
                          const EndpointPicker& picker, std::uint64_t seed);

// Homogeneous Poisson arrivals. Throws std::invalid_argument on negative
// rate. Without a picker the endpoints are left default-constructed.
ArrivalSeries gen_poisson(double rate_per_s, double duration_s, std::uint64_t seed,
                          const TaskShape& shape = {}, const EndpointPicker& picker = {});

// Order-sensitive FNV-1a digest of every task field.
std::uint64_t workload_digest(const ArrivalSeries& series);

}  // namespace focan

#endif  // FOCAN_WORKLOAD_HPP_
