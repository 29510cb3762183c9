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

// CPU and network energy accounting per FN, per communication class and
// per accounting round.

#ifndef FOCAN_ENERGY_HPP_
#define FOCAN_ENERGY_HPP_

#include <cstddef>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "focan/ids.hpp"
#include "focan/topology.hpp"

namespace focan {

struct PowerModel {
  double p_idle_w = 105.0;
  double p_max_w = 195.0;
  // Assumed defaults; there are no published network power numbers.
  double nic_wireless_j_per_bit = 2e-7;
  double nic_wired_j_per_bit = 5e-8;

  double coefficient(Medium m) const {
    return m == Medium::Wired ? nic_wired_j_per_bit : nic_wireless_j_per_bit;
  }
};

// Throws std::invalid_argument unless p_idle < p_max and coefficients >= 0.
void validate(const PowerModel& model);

// Linear idle-to-peak interpolation. Throws std::domain_error when the
// utilization is outside [0, 1].
double cpu_power(double utilization, const PowerModel& model);

double network_energy(double bits, Medium medium, const PowerModel& model);
double network_energy(double bits, const CommLink& link, const PowerModel& model);

class EnergyLedger {
 public:
  EnergyLedger() = default;
  EnergyLedger(double horizon_s, double round_s);

  void register_fn(FnId fn);
  void add_cpu(FnId fn, std::size_t round, double joules);
  void add_network(FnId fn, CommType cls, double time_s, double joules);

  std::size_t round_of(double t) const;
  std::size_t round_count() const { return round_count_; }
  double round_duration(std::size_t round) const;
  double horizon_s() const { return horizon_s_; }
  double round_s() const { return round_s_; }

  const std::map<FnId, double>& cpu_joules() const { return cpu_; }
  const std::map<std::pair<FnId, CommType>, double>& net_joules() const { return net_; }
  double cpu_joules(FnId fn) const;
  double net_joules(FnId fn) const;
  double net_joules(FnId fn, CommType cls) const;
  double cpu_round_joules(FnId fn, std::size_t round) const;
  double net_round_joules(FnId fn, std::size_t round) const;

  // Average power (CPU + network, all FNs) within each round.
  std::map<std::size_t, double> per_round() const;

  std::vector<FnId> fns() const;
  double total_cpu() const;
  double total_net() const;
  double total_net(CommType cls) const;
  double total() const { return total_cpu() + total_net(); }
  bool empty() const { return fns_.empty(); }

 private:
  struct PerFn {
    std::vector<double> cpu_round;
    std::vector<double> net_round;
  };
  PerFn& slot(FnId fn);

  double horizon_s_ = 0.0;
  double round_s_ = 1.0;
  std::size_t round_count_ = 0;
  std::map<FnId, double> cpu_;
  std::map<std::pair<FnId, CommType>, double> net_;
  std::map<FnId, PerFn> fns_;
};

// Splits a transfer's energy evenly between the two attributed FNs.
void charge_transfer(EnergyLedger& ledger, FnId a_side, FnId b_side, CommType cls, double time_s,
                     double joules);

struct FnUtilization {
  FnId fn;
  double utilization = 0.0;
};

// cpu_joules[fn] += cpu_power(u) * interval for every sample. Throws
// std::invalid_argument on a non-positive interval.
void accumulate(EnergyLedger& ledger, std::span<const FnUtilization> samples, double interval_s,
                std::size_t round, const PowerModel& model);

struct EnergyRow {
  std::string run_id;
  std::string fn_id;      // FN id, "all" for cross-FN rows, "-" unattributed
  std::string comm_type;  // class name or "all"
  double cpu_j = 0.0;
  double net_j = 0.0;
  double avg_power_w = 0.0;
  long round_index = -1;  // -1 on whole-run rows
};

// Rows, in order: per-FN totals, per-FN per-class network, cross-FN
// per-class network, per-FN per-round. Average power is joules over the
// horizon (or over the round length for round rows).
std::vector<EnergyRow> report(const EnergyLedger& ledger, std::string_view run_id);

void write_energy_csv(std::ostream& out, std::span<const EnergyRow> rows);

}  // namespace focan

#endif  // FOCAN_ENERGY_HPP_
