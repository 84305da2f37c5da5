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

#pragma once

#include <string>
#include <vector>

#include "securecmp/common.hpp"
#include "securecmp/opf.hpp"

// Published worked examples kept as regression vectors.
namespace securecmp::fixtures {

// Four-position general encoding and its image of every 4-bit input.
opf::GeneralOPF general_table_maps();
std::vector<Integer> general_table_gap_sums();  // cumulative gaps
std::vector<Integer> general_table_images();    // index = input value

// Anchor-point encoding at b = 1001 with its published draws.
inline constexpr const char* kPointFixtureName = "paper-3.4.3";
opf::PointOPF point_table_instance();
std::vector<Integer> point_table_images();  // index = input value
std::vector<opf::RiseFall> point_table_rise_fall();

struct TableDiff {
  std::string table;
  std::string cell;
  std::string expected;
  std::string actual;
};

struct TablesReport {
  std::vector<std::string> lines;  // human-readable rendering
  std::vector<TableDiff> diffs;    // empty when everything matches
};

// Regenerates every table from the opf module and diffs it against the
// embedded values.
TablesReport reproduce_tables();

}  // namespace securecmp::fixtures
