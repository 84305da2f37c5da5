// Copyright 2026 The securecmp Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//   http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "securecmp/fixtures.hpp"

#include <iomanip>
#include <sstream>

#include "securecmp/bitcore.hpp"

namespace securecmp::fixtures {
namespace {

std::vector<Integer> integers(std::initializer_list<long> values) {
  std::vector<Integer> out;
  for (long v : values) out.emplace_back(v);
  return out;
}

std::string pad(const std::string& s, int width) {
  std::ostringstream os;
  os << std::setw(width) << s;
  return os.str();
}

void check(TablesReport& report, const std::string& table,
           const std::string& cell, const Integer& expected,
           const Integer& actual) {
  if (expected != actual) {
    report.diffs.push_back(
        {table, cell, expected.get_str(), actual.get_str()});
  }
}

}  // namespace

opf::GeneralOPF general_table_maps() {
  return {{{3, 5}, {7, 10}, {1, 8}, {4, 18}}};
}

std::vector<Integer> general_table_gap_sums() { return integers({2, 5, 12, 26}); }

std::vector<Integer> general_table_images() {
  return integers(
      {15, 17, 18, 20, 22, 24, 25, 27, 29, 31, 32, 34, 36, 38, 39, 41});
}

opf::PointOPF point_table_instance() {
  return opf::construct_at_point_injected(
      bitcore::BitString::parse("1001"), 16, 0, 63,
      {{13, 25}, {36, 54}, {30, 43}, {-32, 1}});
}

std::vector<Integer> point_table_images() {
  return integers(
      {47, 59, 65, 77, 60, 72, 78, 90, 80, 92, 98, 110, 93, 105, 111, 123});
}

std::vector<opf::RiseFall> point_table_rise_fall() {
  return {{1, false, 12}, {2, true, 18}, {3, true, 13}, {4, false, 33}};
}

TablesReport reproduce_tables() {
  TablesReport report;
  auto& out = report.lines;

  // Per-position mappings with gaps and cumulative gaps.
  const std::string t1 = "General mappings";
  opf::GeneralOPF general = general_table_maps();
  auto sums = general_table_gap_sums();
  out.push_back(t1 + ": computation of f_i");
  out.push_back("  f_i   f_i(0)  f_i(1)  gap  cumulative");
  Integer running = 0;
  for (std::size_t i = 0; i < general.maps.size(); ++i) {
    const auto& m = general.maps[i];
    running += m.gap();
    out.push_back("  f_" + std::to_string(i + 1) + pad(m.zero_val.get_str(), 8) +
                  pad(m.one_val.get_str(), 8) + pad(m.gap().get_str(), 5) +
                  pad(running.get_str(), 12));
    check(report, t1, "cumulative f_" + std::to_string(i + 1), sums[i], running);
  }
  opf::Validation v = opf::validate_general(general);
  if (!v.valid) {
    report.diffs.push_back({t1, "constraints", "valid",
                            "violated at " + std::to_string(*v.first_violation)});
  }

  const std::string t2 = "General images";
  auto images = general_table_images();
  out.push_back(t2 + ": computing F");
  for (unsigned x = 0; x < 16; ++x) {
    auto bits = bitcore::to_bits(x, 4);
    Integer fx = opf::eval(general, bits);
    out.push_back("  " + bits.to_string() + pad(fx.get_str(), 6));
    check(report, t2, "F(" + bits.to_string() + ")", images[x], fx);
  }

  const std::string t3 = "Anchor table (b = 1001)";
  opf::PointOPF point = point_table_instance();
  auto expected_rf = point_table_rise_fall();
  auto rf = opf::rise_fall(point);
  out.push_back(t3 + ": mappings");
  out.push_back("  f_i   f_i(0)  f_i(1)  rise  fall");
  for (std::size_t i = 0; i < point.d(); ++i) {
    const auto& m = point.maps[i];
    std::string amount = rf[i].amount.get_str();
    out.push_back("  f_" + std::to_string(i + 1) + pad(m.zero_val.get_str(), 8) +
                  pad(m.one_val.get_str(), 8) +
                  pad(rf[i].rise ? amount : "-", 6) +
                  pad(rf[i].rise ? "-" : amount, 6));
    std::string cell = std::string(expected_rf[i].rise ? "rise" : "fall") +
                       " f_" + std::to_string(i + 1);
    if (rf[i].rise != expected_rf[i].rise) {
      report.diffs.push_back({t3, cell, expected_rf[i].rise ? "rise" : "fall",
                              rf[i].rise ? "rise" : "fall"});
    }
    check(report, t3, cell, expected_rf[i].amount, rf[i].amount);
  }

  const std::string t4 = "Anchor table (b = 1001)";
  auto point_images = point_table_images();
  out.push_back(t4 + ": F(x)");
  for (unsigned x = 0; x < 16; ++x) {
    auto bits = bitcore::to_bits(x, 4);
    Integer fx = opf::eval_point(point, bits);
    out.push_back("  " + bits.to_string() + pad(fx.get_str(), 6) +
                  (bits == point.b ? "  <- b" : ""));
    check(report, t4, "F(" + bits.to_string() + ")", point_images[x], fx);
  }
  return report;
}

}  // namespace securecmp::fixtures
