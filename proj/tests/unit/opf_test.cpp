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

#include "securecmp/opf.hpp"

#include <cmath>
#include <random>

#include "gtest/gtest.h"
#include "securecmp/fixtures.hpp"

namespace securecmp::opf {
namespace {

using bitcore::BitString;
using bitcore::to_bits;

// Plain-arithmetic evaluation of the shared family, independent of opf.
long shared_oracle(long s, long k, long l, unsigned long x, int width) {
  long total = 0;
  long power = k;
  for (int i = 0; i < width; ++i) {
    total += s + ((x >> i) & 1 ? power * l : 0);
    power *= k;
  }
  return total;
}

int width_of(unsigned long v) { return v == 0 ? 1 : 64 - __builtin_clzl(v); }

GeneralOPF random_valid(std::mt19937_64& gen, std::size_t n) {
  GeneralOPF f;
  Integer lower = 0;
  for (std::size_t i = 0; i < n; ++i) {
    Integer zero = static_cast<long>(gen() % 2001) - 1000;
    Integer gap = lower + 1 + static_cast<long>(gen() % 50);
    f.maps.push_back({zero, zero + gap});
    lower += gap;
  }
  return f;
}

TEST(ValidateGeneralTest, PublishedMapsAreValid) {
  Validation v = validate_general(fixtures::general_table_maps());
  EXPECT_TRUE(v.valid);
  EXPECT_FALSE(v.first_violation.has_value());
}

TEST(ValidateGeneralTest, EqualityViolatesDominance) {
  Validation v = validate_general(GeneralOPF{{{3, 5}, {7, 9}}});
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.first_violation, 2u);
  EXPECT_EQ(v.kind, Validation::Violation::GapNotDominant);
}

TEST(ValidateGeneralTest, NonPositiveGap) {
  Validation v = validate_general(GeneralOPF{{{5, 3}}});
  EXPECT_FALSE(v.valid);
  EXPECT_EQ(v.first_violation, 1u);
  EXPECT_EQ(v.kind, Validation::Violation::NonPositiveGap);
}

TEST(EvalTest, PublishedImages) {
  GeneralOPF f = fixtures::general_table_maps();
  EXPECT_EQ(eval(f, BitString::parse("0000")), 15);
  EXPECT_EQ(eval(f, BitString::parse("0101")), 24);
  EXPECT_EQ(eval(f, BitString::parse("1111")), 41);
  // Shorter inputs are zero-padded.
  EXPECT_EQ(eval(f, BitString::parse("101")), 24);
  EXPECT_THROW(eval(f, BitString::parse("10000")), Error);
}

TEST(SharedEvalTest, Examples) {
  SharedParams p{3, 2, 5};
  EXPECT_EQ(shared_eval(p, BitString::parse("101")),
            shared_oracle(3, 2, 5, 0b101, 3));
  EXPECT_EQ(shared_eval(p, BitString::parse("101")), 59);
  EXPECT_EQ(shared_eval(p, BitString::parse("100")), 49);
  EXPECT_EQ(shared_oracle(3, 2, 5, 0b100, 3), 49);
  // Unequal minimal widths keep their order.
  Integer a = shared_eval(p, BitString::parse("100"));
  Integer b = shared_eval(p, BitString::parse("11"));
  EXPECT_EQ(b, 36);
  EXPECT_EQ(b, shared_oracle(3, 2, 5, 0b11, 2));
  EXPECT_GT(a, b);
}

TEST(SharedEvalTest, MatchesInducedGeneralEncoding) {
  SharedParams p{7, 3, 11};
  GeneralOPF f = induce(p, 8);
  for (unsigned x = 0; x < 256; ++x) {
    EXPECT_EQ(shared_eval(p, to_bits(x, 8)), eval(f, to_bits(x, 8)));
  }
}

TEST(SharedEvalTest, RejectsBadParams) {
  EXPECT_THROW(shared_eval(SharedParams{3, 1, 5}, BitString::parse("1")), Error);
  EXPECT_THROW(shared_eval(SharedParams{0, 2, 5}, BitString::parse("1")), Error);
  EXPECT_THROW(shared_eval(SharedParams{3, 2, 0}, BitString::parse("1")), Error);
}

TEST(SharedOutputBitsTest, MatchesExhaustiveMaximum) {
  SharedParams p{3, 2, 5};
  EXPECT_EQ(shared_output_bits(p, 3), 7u);  // max 79
  for (int n = 1; n <= 12; ++n) {
    long best = 0;
    for (unsigned long x = 0; x < (1ul << n); ++x) {
      best = std::max(best, shared_oracle(3, 2, 5, x, n));
    }
    EXPECT_EQ(shared_output_bits(p, n), static_cast<std::size_t>(width_of(best)))
        << "n=" << n;
  }
  // n = 1: s + k*l
  EXPECT_EQ(shared_output_bits(SharedParams{100, 9, 7}, 1),
            static_cast<std::size_t>(width_of(100 + 63)));
  EXPECT_THROW(shared_output_bits(p, 0), Error);
}

TEST(SharedOutputBitsTest, GrowsByNLog2KPerDoubling) {
  SharedParams p{5, 3, 7};
  for (std::size_t n : {8u, 16u, 32u}) {
    double step = static_cast<double>(shared_output_bits(p, 2 * n)) -
                  static_cast<double>(shared_output_bits(p, n));
    EXPECT_NEAR(step, n * std::log2(3.0), 2.0) << "n=" << n;
  }
}

TEST(GeneralProperty, ValidEncodingsAreMonotoneExhaustive) {
  std::mt19937_64 gen(1);
  for (int trial = 0; trial < 60; ++trial) {
    std::size_t n = 1 + gen() % 12;
    GeneralOPF f = random_valid(gen, n);
    ASSERT_TRUE(validate_general(f).valid);
    Integer prev = eval(f, to_bits(0, n));
    for (unsigned long x = 1; x < (1ul << n); ++x) {
      Integer cur = eval(f, to_bits(x, n));
      ASSERT_LT(prev, cur) << "n=" << n << " x=" << x;
      prev = cur;
    }
  }
}

TEST(GeneralProperty, ValidEncodingsAreMonotoneRandomized64) {
  std::mt19937_64 gen(2);
  for (int trial = 0; trial < 20; ++trial) {
    std::size_t n = 13 + gen() % 52;
    GeneralOPF f = random_valid(gen, n);
    for (int i = 0; i < 200; ++i) {
      Integer x = Integer(static_cast<unsigned long>(gen() >> (64 - n)));
      Integer y = Integer(static_cast<unsigned long>(gen() >> (64 - n)));
      if (x == y) continue;
      if (x > y) std::swap(x, y);
      ASSERT_LT(eval(f, to_bits(x, n)), eval(f, to_bits(y, n)));
    }
  }
}

TEST(SharedProperty, InducedEncodingAlwaysValidates) {
  std::mt19937_64 gen(3);
  for (int trial = 0; trial < 200; ++trial) {
    SharedParams p{1 + static_cast<long>(gen() % 1000),
                   2 + static_cast<long>(gen() % 20),
                   1 + static_cast<long>(gen() % 1000)};
    ASSERT_TRUE(validate_general(induce(p, 1 + gen() % 40)).valid);
  }
}

TEST(SharedProperty, OrderPreservedAcrossUnequalWidths) {
  std::mt19937_64 gen(4);
  SharedParams p{17, 3, 29};
  for (int i = 0; i < 5000; ++i) {
    unsigned long a = gen() >> (32 + gen() % 32);
    unsigned long b = gen() >> (32 + gen() % 32);
    if (a == b) continue;
    Integer fa = shared_eval(p, to_bits(a));
    Integer fb = shared_eval(p, to_bits(b));
    ASSERT_EQ(a > b, fa > fb) << a << " vs " << b;
  }
}

TEST(SharedProperty, ExtensionGapIsExactlyKTimesL) {
  for (std::size_t n = 2; n <= 10; ++n) {
    // k = n, l the smallest value with k * l >= 2^n.
    Integer k = n;
    Integer l = ((Integer(1) << n) + k - 1) / k;
    SharedParams p{3, k, l};
    ASSERT_GE(k * l, Integer(1) << n);
    Integer min_gap = -1;
    for (unsigned long x = 0; x < (1ul << (n - 1)); ++x) {
      Integer gap = shared_eval(p, to_bits(x << 1 | 1, n)) -
                    shared_eval(p, to_bits(x << 1, n));
      if (min_gap < 0 || gap < min_gap) min_gap = gap;
      ASSERT_EQ(gap, k * l);
    }
    EXPECT_EQ(min_gap, k * l);
  }
}

TEST(ConstructAtPointTest, InjectedPublishedInstance) {
  PointOPF f = fixtures::point_table_instance();
  ASSERT_EQ(f.d(), 4u);
  EXPECT_EQ(f.maps[0], (PerBitMap{13, 25}));
  EXPECT_EQ(f.maps[3], (PerBitMap{-32, 1}));
  EXPECT_EQ(eval_point(f, BitString::parse("0000")), 47);
  EXPECT_EQ(eval_point(f, BitString::parse("1001")), 92);
  EXPECT_EQ(eval_point(f, BitString::parse("1111")), 123);
}

TEST(ConstructAtPointTest, RiseFallAudit) {
  auto rf = rise_fall(fixtures::point_table_instance());
  ASSERT_EQ(rf.size(), 4u);
  EXPECT_FALSE(rf[0].rise);
  EXPECT_EQ(rf[0].amount, 12);
  EXPECT_TRUE(rf[1].rise);
  EXPECT_EQ(rf[1].amount, 18);
  EXPECT_TRUE(rf[2].rise);
  EXPECT_EQ(rf[2].amount, 13);
  EXPECT_FALSE(rf[3].rise);
  EXPECT_EQ(rf[3].amount, 33);
}

TEST(ConstructAtPointTest, SingleBitAnchor) {
  PointOPF f = construct_at_point(BitString::parse("1"), 5, 0, 100,
                                  prg::Seed::from_index(1));
  ASSERT_EQ(f.d(), 1u);
  EXPECT_LT(f.maps[0].zero_val, f.maps[0].one_val);
  EXPECT_GT(f.maps[0].zero_val, f.maps[0].one_val - 5);
}

TEST(ConstructAtPointTest, InjectedValuesAreValidated) {
  auto b = BitString::parse("1001");
  try {
    construct_at_point_injected(b, 16, 0, 63,
                                {{13, 25}, {36, 54}, {30, 60}, {-32, 1}});
    FAIL() << "expected a violation";
  } catch (const Error& e) {
    EXPECT_NE(std::string(e.what()).find("position 3"), std::string::npos);
  }
  // Anchor mapping outside the sampling range.
  EXPECT_THROW(construct_at_point_injected(
                   b, 16, 0, 20, {{13, 25}, {36, 54}, {30, 43}, {-32, 1}}),
               Error);
  EXPECT_THROW(construct_at_point_injected(b, 16, 0, 63, {{13, 25}}), Error);
}

TEST(ConstructAtPointTest, ArgumentChecks) {
  auto b = BitString::parse("10");
  EXPECT_THROW(construct_at_point(b, 1, 0, 10, prg::Seed::from_index(1)), Error);
  EXPECT_THROW(construct_at_point(b, 4, 10, 10, prg::Seed::from_index(1)),
               Error);
}

TEST(ConstructAtPointTest, Deterministic) {
  auto b = BitString::parse("1100101");
  PointOPF x = construct_at_point(b, 16, -20, 300, prg::Seed::from_index(9));
  PointOPF y = construct_at_point(b, 16, -20, 300, prg::Seed::from_index(9));
  EXPECT_EQ(x.maps, y.maps);
  PointOPF z = construct_at_point(b, 16, -20, 300, prg::Seed::from_index(10));
  EXPECT_NE(x.maps, z.maps);
}

TEST(ConstructAtPointTest, DrawsRespectTheirIntervals) {
  auto b = BitString::parse("0110100111010");
  PointOPF f = construct_at_point(b, 9, 100, 200, prg::Seed::from_index(3));
  // Re-validating the drawn maps through the injected path must succeed.
  EXPECT_NO_THROW(construct_at_point_injected(b, 9, 100, 200, f.maps));
}

TEST(EvalPointTest, PublishedRows) {
  PointOPF f = fixtures::point_table_instance();
  EXPECT_EQ(eval_point(f, BitString::parse("0110")), 78);
  EXPECT_EQ(eval_point(f, BitString::parse("1100")), 93);
  EXPECT_EQ(eval_point(f, BitString::parse("1001")), 92);
  EXPECT_EQ(eval_point(f, BitString::parse("11")), 77);  // padded to 0011
  EXPECT_THROW(eval_point(f, BitString::parse("10000")), Error);
}

TEST(OutputBoundsTest, Examples) {
  EXPECT_EQ(output_bounds(fixtures::point_table_instance()),
            std::make_pair(Integer(47), Integer(123)));
  PointOPF single =
      construct_at_point_injected(BitString::parse("0"), 2, 0, 5, {{0, 1}});
  EXPECT_EQ(output_bounds(single), std::make_pair(Integer(0), Integer(1)));
}

// Extremal draws on the alternating anchor 1010...10: rises take the top of
// the sampling range and their largest gap, falls the bottom and theirs.
PointOPF worst_case(std::size_t d, const Integer& l, const Integer& lo,
                    const Integer& hi) {
  Integer rises = 0;
  Integer falls = 0;
  std::vector<PerBitMap> maps;
  std::vector<std::uint8_t> bits;
  for (std::size_t i = 0; i < d; ++i) {
    bool fall = i % 2 == 1;
    bits.push_back(fall);
    if (fall) {
      maps.push_back({lo - rises - l + 1, lo});
      falls += maps.back().gap();
    } else {
      maps.push_back({hi, hi + falls + l - 1});
      rises += maps.back().gap();
    }
  }
  return construct_at_point_injected(BitString(bits), l, lo, hi, maps);
}

TEST(OutputBoundsTest, WorstCaseSpanGrowsLinearlyInBits) {
  const Integer l = 16, lo = 0, hi = 255;
  std::vector<double> bits;
  for (std::size_t d = 8; d <= 64; d += 8) {
    auto [mn, mx] = output_bounds(worst_case(d, l, lo, hi));
    std::size_t span_bits = bit_length(Integer(mx - mn));
    // Each gap exceeds the opposite-kind sum, so gaps grow like Fibonacci
    // numbers: about log2(phi) ~ 0.694 bits per position.
    EXPECT_GE(span_bits, d / 2);
    EXPECT_LE(span_bits, static_cast<std::size_t>(0.7 * d) + bit_length(l) +
                             bit_length(Integer(d) * hi) + 2);
    bits.push_back(static_cast<double>(span_bits));
  }
  for (std::size_t i = 1; i < bits.size(); ++i) {
    EXPECT_NEAR(bits[i] - bits[i - 1], 8 * std::log2((1 + std::sqrt(5.0)) / 2),
                1.0);  // 8 positions per step
  }
}

TEST(PointProperty, OrderPreservedAtAnchorExhaustive) {
  std::mt19937_64 gen(5);
  for (int trial = 0; trial < 24; ++trial) {
    std::size_t d = 1 + trial % 12;
    unsigned long b = gen() & ((1ul << d) - 1);
    PointOPF f = construct_at_point(to_bits(b, d), 2 + gen() % 30, -50,
                                    200 + gen() % 100,
                                    prg::Seed::from_index(1000 + trial));
    Integer fb = eval_point(f, to_bits(b, d));
    for (unsigned long x = 0; x < (1ul << d); ++x) {
      Integer fx = eval_point(f, to_bits(x, d));
      if (x < b) ASSERT_LT(fx, fb) << "d=" << d << " b=" << b << " x=" << x;
      if (x > b) ASSERT_GT(fx, fb) << "d=" << d << " b=" << b << " x=" << x;
    }
  }
}

TEST(PointProperty, NotGloballyMonotone) {
  PointOPF f = fixtures::point_table_instance();
  EXPECT_GT(eval_point(f, BitString::parse("0111")),
            eval_point(f, BitString::parse("1000")));
}

TEST(JsonTest, PointSchema) {
  auto j = to_json(fixtures::point_table_instance());
  EXPECT_EQ(j["b"], "1001");
  EXPECT_EQ(j["maps"][3][0], -32);
  EXPECT_EQ(j["range"][1], 63);
  EXPECT_TRUE(j["seed_hex"].is_null());
  EXPECT_EQ(integer_json(Integer(1) << 80), "1208925819614629174706176");
}

}  // namespace
}  // namespace securecmp::opf
