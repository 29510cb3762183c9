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

#include "focan/energy.hpp"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "focan/util.hpp"

namespace focan {

void validate(const PowerModel& model) {
  if (!(model.p_idle_w >= 0.0) || !(model.p_idle_w < model.p_max_w)) {
    throw std::invalid_argument("power: need 0 <= p_idle_w < p_max_w");
  }
  if (!(model.nic_wireless_j_per_bit >= 0.0) || !(model.nic_wired_j_per_bit >= 0.0)) {
    throw std::invalid_argument("power: NIC coefficients must be >= 0");
  }
}

double cpu_power(double utilization, const PowerModel& model) {
  if (!(utilization >= 0.0 && utilization <= 1.0)) {
    throw std::domain_error("cpu_power: utilization outside [0,1]");
  }
  return model.p_idle_w + (model.p_max_w - model.p_idle_w) * utilization;
}

double network_energy(double bits, Medium medium, const PowerModel& model) {
  if (bits < 0.0) throw std::invalid_argument("network_energy: negative bit count");
  return model.coefficient(medium) * bits;
}

double network_energy(double bits, const CommLink& link, const PowerModel& model) {
  return network_energy(bits, link.medium, model);
}

// ---------------------------------------------------------------------------

EnergyLedger::EnergyLedger(double horizon_s, double round_s)
    : horizon_s_(horizon_s), round_s_(round_s) {
  if (!(round_s > 0.0)) throw std::invalid_argument("ledger: round length must be > 0");
  if (horizon_s < 0.0) throw std::invalid_argument("ledger: negative horizon");
  round_count_ = horizon_s > 0.0 ? static_cast<std::size_t>(std::ceil(horizon_s / round_s - 1e-9))
                                 : 0;
  round_count_ = std::max<std::size_t>(round_count_, horizon_s > 0.0 ? 1 : 0);
}

EnergyLedger::PerFn& EnergyLedger::slot(FnId fn) {
  auto [it, inserted] = fns_.try_emplace(fn);
  if (inserted) {
    it->second.cpu_round.assign(round_count_, 0.0);
    it->second.net_round.assign(round_count_, 0.0);
    cpu_.try_emplace(fn, 0.0);
  }
  return it->second;
}

void EnergyLedger::register_fn(FnId fn) { slot(fn); }

std::size_t EnergyLedger::round_of(double t) const {
  if (round_count_ == 0) return 0;
  const double r = std::floor(t / round_s_);
  if (r < 0.0) return 0;
  return std::min(static_cast<std::size_t>(r), round_count_ - 1);
}

double EnergyLedger::round_duration(std::size_t round) const {
  const double start = static_cast<double>(round) * round_s_;
  return std::min(start + round_s_, horizon_s_) - start;
}

void EnergyLedger::add_cpu(FnId fn, std::size_t round, double joules) {
  if (joules < 0.0) throw std::invalid_argument("ledger: negative CPU energy");
  PerFn& s = slot(fn);
  cpu_[fn] += joules;
  if (round < s.cpu_round.size()) s.cpu_round[round] += joules;
}

void EnergyLedger::add_network(FnId fn, CommType cls, double time_s, double joules) {
  if (joules < 0.0) throw std::invalid_argument("ledger: negative network energy");
  PerFn& s = slot(fn);
  net_[{fn, cls}] += joules;
  const std::size_t r = round_of(time_s);
  if (r < s.net_round.size()) s.net_round[r] += joules;
}

double EnergyLedger::cpu_joules(FnId fn) const {
  auto it = cpu_.find(fn);
  return it == cpu_.end() ? 0.0 : it->second;
}

double EnergyLedger::net_joules(FnId fn, CommType cls) const {
  auto it = net_.find({fn, cls});
  return it == net_.end() ? 0.0 : it->second;
}

double EnergyLedger::net_joules(FnId fn) const {
  double sum = 0.0;
  for (CommType c : kAllCommTypes) sum += net_joules(fn, c);
  return sum;
}

double EnergyLedger::cpu_round_joules(FnId fn, std::size_t round) const {
  auto it = fns_.find(fn);
  if (it == fns_.end() || round >= it->second.cpu_round.size()) return 0.0;
  return it->second.cpu_round[round];
}

double EnergyLedger::net_round_joules(FnId fn, std::size_t round) const {
  auto it = fns_.find(fn);
  if (it == fns_.end() || round >= it->second.net_round.size()) return 0.0;
  return it->second.net_round[round];
}

std::map<std::size_t, double> EnergyLedger::per_round() const {
  std::map<std::size_t, double> out;
  for (std::size_t r = 0; r < round_count_; ++r) {
    double j = 0.0;
    for (const auto& [_, s] : fns_) j += s.cpu_round[r] + s.net_round[r];
    const double dur = round_duration(r);
    out[r] = dur > 0.0 ? j / dur : 0.0;
  }
  return out;
}

std::vector<FnId> EnergyLedger::fns() const {
  std::vector<FnId> out;
  for (const auto& [id, _] : fns_) out.push_back(id);
  return out;
}

double EnergyLedger::total_cpu() const {
  double sum = 0.0;
  for (const auto& [_, j] : cpu_) sum += j;
  return sum;
}

double EnergyLedger::total_net() const {
  double sum = 0.0;
  for (const auto& [_, j] : net_) sum += j;
  return sum;
}

double EnergyLedger::total_net(CommType cls) const {
  double sum = 0.0;
  for (const auto& [key, j] : net_) {
    if (key.second == cls) sum += j;
  }
  return sum;
}

void charge_transfer(EnergyLedger& ledger, FnId a_side, FnId b_side, CommType cls, double time_s,
                     double joules) {
  if (a_side == b_side) {
    ledger.add_network(a_side, cls, time_s, joules);
    return;
  }
  const double half = 0.5 * joules;
  ledger.add_network(a_side, cls, time_s, half);
  ledger.add_network(b_side, cls, time_s, joules - half);
}

void accumulate(EnergyLedger& ledger, std::span<const FnUtilization> samples, double interval_s,
                std::size_t round, const PowerModel& model) {
  if (!(interval_s > 0.0)) throw std::invalid_argument("accumulate: interval must be > 0");
  for (const FnUtilization& s : samples) {
    ledger.add_cpu(s.fn, round, cpu_power(s.utilization, model) * interval_s);
  }
}

std::vector<EnergyRow> report(const EnergyLedger& ledger, std::string_view run_id) {
  std::vector<EnergyRow> rows;
  if (ledger.empty()) return rows;
  const double horizon = ledger.horizon_s();
  auto avg = [](double joules, double secs) { return secs > 0.0 ? joules / secs : 0.0; };
  const std::vector<FnId> fns = ledger.fns();
  const std::string id(run_id);

  for (FnId fn : fns) {
    const double cpu = ledger.cpu_joules(fn);
    const double net = ledger.net_joules(fn);
    rows.push_back({id, to_string(fn), "all", cpu, net, avg(cpu + net, horizon), -1});
  }
  for (FnId fn : fns) {
    for (CommType c : kAllCommTypes) {
      const double net = ledger.net_joules(fn, c);
      rows.push_back({id, to_string(fn), std::string(to_string(c)), 0.0, net, avg(net, horizon), -1});
    }
  }
  for (CommType c : kAllCommTypes) {
    const double net = ledger.total_net(c);
    rows.push_back({id, "all", std::string(to_string(c)), 0.0, net, avg(net, horizon), -1});
  }
  for (FnId fn : fns) {
    for (std::size_t r = 0; r < ledger.round_count(); ++r) {
      const double cpu = ledger.cpu_round_joules(fn, r);
      const double net = ledger.net_round_joules(fn, r);
      rows.push_back({id, to_string(fn), "all", cpu, net, avg(cpu + net, ledger.round_duration(r)),
                      static_cast<long>(r)});
    }
  }
  return rows;
}

void write_energy_csv(std::ostream& out, std::span<const EnergyRow> rows) {
  out << "run_id,fn_id,comm_type,cpu_j,net_j,avg_power_w,round_index\n";
  for (const EnergyRow& r : rows) {
    out << r.run_id << ',' << r.fn_id << ',' << r.comm_type << ',' << format_fixed(r.cpu_j, 6) << ','
        << format_fixed(r.net_j, 6) << ',' << format_fixed(r.avg_power_w, 6) << ','
        << r.round_index << '\n';
  }
}

}  // namespace focan
