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

#include "gtest/gtest.h"

namespace securecmp::fixtures {
namespace {

using bitcore::to_bits;

TEST(GeneralTableTest, ImagesFollowFromMaps) {
  opf::GeneralOPF f = general_table_maps();
  auto images = general_table_images();
  ASSERT_EQ(images.size(), 16u);
  for (unsigned x = 0; x < 16; ++x) {
    EXPECT_EQ(opf::eval(f, to_bits(x, 4)), images[x]) << x;
  }
  EXPECT_EQ(general_table_gap_sums(),
            (std::vector<Integer>{2, 5, 12, 26}));
}

TEST(PointTableTest, ImagesFollowFromMaps) {
  opf::PointOPF f = point_table_instance();
  auto images = point_table_images();
  ASSERT_EQ(images.size(), 16u);
  for (unsigned x = 0; x < 16; ++x) {
    EXPECT_EQ(opf::eval_point(f, to_bits(x, 4)), images[x]) << x;
  }
  auto rf = opf::rise_fall(f);
  auto expected = point_table_rise_fall();
  ASSERT_EQ(rf.size(), expected.size());
  for (std::size_t i = 0; i < rf.size(); ++i) {
    EXPECT_EQ(rf[i].position, expected[i].position);
    EXPECT_EQ(rf[i].rise, expected[i].rise);
    EXPECT_EQ(rf[i].amount, expected[i].amount);
  }
}

TEST(PointTableTest, AnchorSplitsImages) {
  auto images = point_table_images();
  for (unsigned x = 0; x < 16; ++x) {
    if (x < 9) EXPECT_LT(images[x], images[9]);
    if (x > 9) EXPECT_GT(images[x], images[9]);
  }
}

TEST(ReproduceTablesTest, NoDiffs) {
  TablesReport r = reproduce_tables();
  EXPECT_TRUE(r.diffs.empty());
  EXPECT_FALSE(r.lines.empty());
}

}  // namespace
}  // namespace securecmp::fixtures
