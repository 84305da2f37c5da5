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

#include "securecmp/bitcore.hpp"

#include <random>

#include "gtest/gtest.h"

namespace securecmp::bitcore {
namespace {

TEST(ToBitsTest, FixedWidth) {
  BitString x = to_bits(9, 4);
  EXPECT_EQ(x.lsb_first(), (std::vector<std::uint8_t>{1, 0, 0, 1}));
  EXPECT_EQ(x.to_string(), "1001");
}

TEST(ToBitsTest, MinimalMode) {
  EXPECT_EQ(to_bits(0).to_string(), "0");
  BitString five = to_bits(5);
  EXPECT_EQ(five.to_string(), "101");
  EXPECT_EQ(five.width(), 3u);
}

TEST(ToBitsTest, RejectsTooNarrowWidth) {
  EXPECT_THROW(to_bits(16, 4), Error);
  EXPECT_THROW(to_bits(-1), Error);
  EXPECT_THROW(to_bits(1, 0), Error);
}

TEST(FromBitsTest, Examples) {
  EXPECT_EQ(from_bits(BitString::parse("1001")), 9);
  EXPECT_EQ(from_bits(BitString::parse("0")), 0);
  EXPECT_EQ(from_bits(BitString::parse("1111")), 15);
}

TEST(BitStringTest, RejectsEmptyAndGarbage) {
  EXPECT_THROW(BitString({}), Error);
  EXPECT_THROW(BitString::parse(""), Error);
  EXPECT_THROW(BitString::parse("10a1"), Error);
  EXPECT_THROW(BitString({0, 2}), Error);
  EXPECT_THROW(to_bits(3, 4).bit(5), Error);
}

TEST(TwosComplementTest, Examples) {
  EXPECT_EQ(twos_complement_encode(-2, 8).to_string(), "11111110");
  EXPECT_EQ(twos_complement_encode(2, 8).to_string(), "00000010");
  EXPECT_EQ(twos_complement_encode(-128, 8).to_string(), "10000000");
  EXPECT_THROW(twos_complement_encode(128, 8), Error);
  EXPECT_THROW(twos_complement_encode(-129, 8), Error);
  EXPECT_EQ(twos_complement_decode(BitString::parse("10000000")), -128);
}

TEST(MsbTest, Examples) {
  EXPECT_EQ(msb(BitString::parse("11111110")), 1);
  EXPECT_EQ(msb(BitString::parse("00000010")), 0);
  EXPECT_EQ(msb(BitString::parse("1")), 1);
}

TEST(ComplementTest, Examples) {
  EXPECT_EQ(complement(BitString::parse("1001"), 4).to_string(), "0110");
  EXPECT_EQ(complement(BitString::parse("11"), 4).to_string(), "1100");
  EXPECT_EQ(complement(BitString::parse("0000"), 4).to_string(), "1111");
  EXPECT_THROW(complement(BitString::parse("10000"), 4), Error);
  // Leading zeros beyond the width are fine; only the value matters.
  EXPECT_EQ(complement(BitString::parse("00011"), 4).to_string(), "1100");
}

TEST(XorTest, Examples) {
  EXPECT_EQ(bit_xor(BitString::parse("1010"), BitString::parse("0110"))
                .to_string(),
            "1100");
  auto x = BitString::parse("1101");
  EXPECT_EQ(bit_xor(x, x).to_string(), "0000");
  EXPECT_EQ(bit_xor(BitString::parse("11111110"), BitString::parse("10100101"))
                .to_string(),
            "01011011");
  EXPECT_THROW(bit_xor(BitString::parse("101"), BitString::parse("0101")),
               Error);
}

TEST(BitcoreProperty, RoundTripSampled64Bit) {
  std::mt19937_64 gen(7);
  for (int i = 0; i < 20000; ++i) {
    std::uint64_t v = gen() >> (gen() % 64);
    Integer value;
    mpz_import(value.get_mpz_t(), 1, 1, sizeof v, 0, 0, &v);
    BitString x = to_bits(value);
    EXPECT_EQ(from_bits(x), value);
    if (v != 0) EXPECT_EQ(msb(x), 1) << "minimal mode has no leading zero";
    EXPECT_EQ(from_bits(to_bits(value, 64)), value);
  }
}

TEST(BitcoreProperty, ComplementReversesOrderExhaustive) {
  for (std::size_t w = 1; w <= 10; ++w) {
    const unsigned limit = 1u << w;
    std::vector<Integer> image(limit);
    for (unsigned x = 0; x < limit; ++x) {
      image[x] = from_bits(complement(to_bits(x), w));
    }
    for (unsigned x = 0; x + 1 < limit; ++x) {
      // Strictly decreasing consecutive images implies x < y => c(x) > c(y).
      ASSERT_GT(image[x], image[x + 1]) << "w=" << w << " x=" << x;
    }
  }
}

TEST(BitcoreProperty, XorWithMaskIsBijectionExhaustive) {
  for (std::size_t w = 1; w <= 10; ++w) {
    const unsigned limit = 1u << w;
    for (unsigned mask : {0u, limit - 1, (limit / 2 + 1) & (limit - 1), 0x155u & (limit - 1)}) {
      std::vector<bool> seen(limit, false);
      BitString m = to_bits(mask, w);
      for (unsigned x = 0; x < limit; ++x) {
        unsigned y = from_bits(bit_xor(to_bits(x, w), m)).get_ui();
        ASSERT_FALSE(seen[y]) << "w=" << w << " mask=" << mask;
        seen[y] = true;
      }
    }
  }
}

TEST(BitcoreProperty, SignBitMatchesNegativityExhaustive) {
  for (std::size_t w = 1; w <= 10; ++w) {
    long half = 1l << (w - 1);
    for (long v = -half; v < half; ++v) {
      BitString x = twos_complement_encode(v, w);
      ASSERT_EQ(msb(x), v < 0 ? 1 : 0) << "w=" << w << " v=" << v;
      ASSERT_EQ(twos_complement_decode(x), v);
    }
  }
}

}  // namespace
}  // namespace securecmp::bitcore
