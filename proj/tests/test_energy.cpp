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

#include <sstream>

#include "doctest.h"
#include "focan/energy.hpp"
#include "helpers.hpp"

using namespace focan;

namespace {

bool rel_close(double a, double b, double rel) {
  return std::abs(a - b) <= rel * std::max(std::abs(a), std::abs(b));
}

}  // namespace

TEST_CASE("cpu_power anchors") {
  const PowerModel m;
  CHECK(cpu_power(0.0, m) == 105.0);
  CHECK(cpu_power(1.0, m) == 195.0);
  CHECK(cpu_power(0.5, m) == 150.0);
  CHECK_THROWS_AS(cpu_power(-0.01, m), std::domain_error);
  CHECK_THROWS_AS(cpu_power(1.01, m), std::domain_error);
  PowerModel bad;
  bad.p_idle_w = 200.0;
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}

TEST_CASE("network_energy") {
  const PowerModel m;
  CHECK(network_energy(0.0, Medium::Wireless, m) == 0.0);
  // 1 Mb over the wired medium, by hand: c_w * 1e6
  const double wired = network_energy(1e6, Medium::Wired, m);
  CHECK(wired == doctest::Approx(m.nic_wired_j_per_bit * 1e6));
  CHECK(network_energy(2e6, Medium::Wired, m) == doctest::Approx(2.0 * wired));
  CHECK_THROWS(network_energy(-1.0, Medium::Wired, m));

  EnergyLedger ledger(10.0, 1.0);
  charge_transfer(ledger, FnId{1}, FnId{2}, CommType::Secondary, 0.5, wired);
  CHECK(ledger.net_joules(FnId{1}, CommType::Secondary) == doctest::Approx(wired / 2));
  CHECK(ledger.net_joules(FnId{2}, CommType::Secondary) == doctest::Approx(wired / 2));
  CHECK(ledger.total_net() == doctest::Approx(wired));
  charge_transfer(ledger, FnId{3}, FnId{3}, CommType::Primary, 0.5, 1.0);
  CHECK(ledger.net_joules(FnId{3}) == 1.0);
}

TEST_CASE("accumulate") {
  const PowerModel m;
  SUBCASE("one idle FN over 1000 s") {
    EnergyLedger ledger(1000.0, 1.0);
    const FnUtilization idle{FnId{1}, 0.0};
    for (std::size_t r = 0; r < 1000; ++r) accumulate(ledger, std::span(&idle, 1), 1.0, r, m);
    CHECK(rel_close(ledger.cpu_joules(FnId{1}), 105000.0, 1e-12));
  }
  SUBCASE("two idle FNs for one second") {
    EnergyLedger ledger(1.0, 1.0);
    const std::vector<FnUtilization> s = {{FnId{1}, 0.0}, {FnId{2}, 0.0}};
    accumulate(ledger, s, 1.0, 0, m);
    CHECK(ledger.total_cpu() == 210.0);
  }
  SUBCASE("full load for ten seconds") {
    EnergyLedger ledger(10.0, 10.0);
    const FnUtilization busy{FnId{1}, 1.0};
    accumulate(ledger, std::span(&busy, 1), 10.0, 0, m);
    CHECK(ledger.total_cpu() == 1950.0);
    CHECK(ledger.per_round().at(0) == 195.0);
  }
  SUBCASE("bad interval") {
    EnergyLedger ledger(10.0, 1.0);
    const FnUtilization idle{FnId{1}, 0.0};
    CHECK_THROWS(accumulate(ledger, std::span(&idle, 1), 0.0, 0, m));
  }
}

TEST_CASE("ledger rounds") {
  EnergyLedger ledger(2.5, 1.0);
  CHECK(ledger.round_count() == 3);
  CHECK(ledger.round_duration(2) == doctest::Approx(0.5));
  CHECK(ledger.round_of(0.99) == 0);
  CHECK(ledger.round_of(2.5) == 2);
  CHECK_THROWS(EnergyLedger(10.0, 0.0));
}

TEST_CASE("report") {
  const PowerModel m;
  SUBCASE("idle-only run averages 105 W per FN") {
    EnergyLedger ledger(100.0, 10.0);
    const std::vector<FnUtilization> s = {{FnId{1}, 0.0}, {FnId{2}, 0.0}};
    for (std::size_t r = 0; r < 10; ++r) accumulate(ledger, s, 10.0, r, m);
    const auto rows = report(ledger, "idle");
    int totals = 0;
    for (const EnergyRow& row : rows) {
      if (row.comm_type == "all" && row.round_index == -1) {
        ++totals;
        CHECK(row.avg_power_w == doctest::Approx(105.0));
      }
      if (row.round_index >= 0) CHECK(row.avg_power_w == doctest::Approx(105.0));
    }
    CHECK(totals == 2);
  }
  SUBCASE("empty ledger") {
    CHECK(report(EnergyLedger(), "x").empty());
    std::ostringstream out;
    write_energy_csv(out, report(EnergyLedger(), "x"));
    CHECK(out.str() == "run_id,fn_id,comm_type,cpu_j,net_j,avg_power_w,round_index\n");
  }
  SUBCASE("per-class rows sum to the network total") {
    focan::test::Gen g(404);
    EnergyLedger ledger(50.0, 5.0);
    double charged = 0.0;
    for (int i = 0; i < 500; ++i) {
      const double j = g.real(0.0, 3.0);
      charged += j;
      charge_transfer(ledger, FnId{static_cast<std::uint32_t>(g.integer(1, 4))},
                      g.coin(0.1) ? kUnattributed : FnId{static_cast<std::uint32_t>(g.integer(1, 4))},
                      kAllCommTypes[static_cast<std::size_t>(g.integer(0, 2))], g.real(0.0, 50.0), j);
    }
    double class_rows = 0.0, fn_class_rows = 0.0, round_rows = 0.0;
    for (const EnergyRow& row : report(ledger, "mix")) {
      if (row.fn_id == "all") class_rows += row.net_j;
      else if (row.comm_type != "all") fn_class_rows += row.net_j;
      else if (row.round_index >= 0) round_rows += row.net_j;
    }
    CHECK(rel_close(class_rows, ledger.total_net(), 1e-9));
    CHECK(rel_close(fn_class_rows, ledger.total_net(), 1e-9));
    CHECK(rel_close(round_rows, ledger.total_net(), 1e-9));
    CHECK(rel_close(charged, ledger.total_net(), 1e-9));
  }
  SUBCASE("CSV formatting") {
    EnergyLedger ledger(1.0, 1.0);
    const FnUtilization u{FnId{3}, 0.25};
    accumulate(ledger, std::span(&u, 1), 1.0, 0, m);
    ledger.add_network(kUnattributed, CommType::Primary, 0.0, 0.1234567);
    std::ostringstream out;
    write_energy_csv(out, report(ledger, "r1"));
    const std::string csv = out.str();
    CHECK(csv.find("r1,3,all,127.500000,0.000000,127.500000,-1\n") != std::string::npos);
    CHECK(csv.find("r1,-,primary,0.000000,0.123457,0.123457,-1\n") != std::string::npos);
    CHECK(csv.find("r1,all,primary,0.000000,0.123457,0.123457,-1\n") != std::string::npos);
    CHECK(csv.find("r1,3,all,127.500000,0.000000,127.500000,0\n") != std::string::npos);
  }
}

TEST_CASE("property: ledger totals never decrease") {
  focan::test::Gen g(9);
  const PowerModel m;
  EnergyLedger ledger(100.0, 1.0);
  double last_cpu = 0.0, last_net = 0.0;
  for (int i = 0; i < 1000; ++i) {
    if (g.coin()) {
      const FnUtilization u{FnId{static_cast<std::uint32_t>(g.integer(1, 3))}, g.real(0.0, 1.0)};
      accumulate(ledger, std::span(&u, 1), g.real(0.01, 1.0), static_cast<std::size_t>(g.integer(0, 99)), m);
    } else {
      charge_transfer(ledger, FnId{1}, FnId{2}, CommType::Primary, g.real(0, 100), g.real(0, 1));
    }
    CHECK(ledger.total_cpu() >= last_cpu);
    CHECK(ledger.total_net() >= last_net);
    last_cpu = ledger.total_cpu();
    last_net = ledger.total_net();
  }
  CHECK_THROWS(ledger.add_cpu(FnId{1}, 0, -1.0));
}
