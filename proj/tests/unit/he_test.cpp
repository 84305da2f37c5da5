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

#include "securecmp/he.hpp"

#include "gtest/gtest.h"

namespace securecmp::he {
namespace {

using bitcore::BitString;
using bitcore::to_bits;

class TransparentTest : public ::testing::Test {
 protected:
  simnet::Counters counters;
  TransparentScheme scheme{&counters};
  SchemeKeys keys = scheme.keygen(8, prg::Seed::from_index(1));
  prg::Keystream rng{Bytes{'t', 'e', 's', 't'}};

  Ciphertext enc(unsigned v, std::size_t w = 8) {
    return scheme.enc(keys.public_part, to_bits(v, w), rng);
  }
  unsigned dec(const Ciphertext& c) {
    return bitcore::from_bits(scheme.dec(keys.private_part, c)).get_ui();
  }
};

TEST_F(TransparentTest, KeygenIsDeterministicPerSeed) {
  SchemeKeys again = scheme.keygen(8, prg::Seed::from_index(1));
  EXPECT_EQ(again.public_part.key_id, keys.public_part.key_id);
  EXPECT_EQ(again.private_part.secret, keys.private_part.secret);
  SchemeKeys other = scheme.keygen(8, prg::Seed::from_index(2));
  EXPECT_NE(other.public_part.key_id, keys.public_part.key_id);
  EXPECT_NE(other.private_part.secret, keys.private_part.secret);
  EXPECT_THROW(scheme.keygen(1, prg::Seed::from_index(1)), Error);
}

TEST_F(TransparentTest, RoundTrip) {
  EXPECT_EQ(scheme.dec(keys.private_part,
                       scheme.enc(keys.public_part,
                                  BitString::parse("00000010"), rng))
                .to_string(),
            "00000010");
}

TEST_F(TransparentTest, EncryptionIsRandomized) {
  Ciphertext x = enc(77);
  Ciphertext y = enc(77);
  EXPECT_NE(x, y);
  EXPECT_EQ(dec(x), 77u);
  EXPECT_EQ(dec(y), 77u);
}

TEST_F(TransparentTest, WidthMismatchRejected) {
  EXPECT_THROW(scheme.enc(keys.public_part, to_bits(3, 7), rng), Error);
}

TEST_F(TransparentTest, WrongPrivateKeyRejected) {
  SchemeKeys other = scheme.keygen(8, prg::Seed::from_index(9));
  EXPECT_THROW(scheme.dec(other.private_part, enc(5)), Error);
}

TEST_F(TransparentTest, MalformedCiphertextRejected) {
  Bytes bytes = enc(5).serialize();
  bytes.pop_back();
  EXPECT_THROW(scheme.dec(keys.private_part, Ciphertext::parse(bytes)), Error);
  EXPECT_THROW(Ciphertext::parse(Bytes{8}), Error);
}

TEST_F(TransparentTest, SerializationStartsWithWidthByte) {
  Ciphertext c = enc(200);
  Bytes s = c.serialize();
  EXPECT_EQ(s[0], 8);
  EXPECT_EQ(Ciphertext::parse(s), c);
}

TEST_F(TransparentTest, SubtractionExamples) {
  auto sub = [&](unsigned a, unsigned b) {
    return scheme.dec(keys.private_part,
                      scheme.hom_sub(keys.public_part, enc(a), enc(b)));
  };
  EXPECT_EQ(sub(5, 3).to_string(), "00000010");
  EXPECT_EQ(sub(3, 5).to_string(), "11111110");
  Ciphertext x = enc(123);
  EXPECT_EQ(dec(scheme.hom_sub(keys.public_part, x, x)), 0u);
  // Plaintext arithmetic oracle for the two's complement of a - b.
  EXPECT_EQ(sub(3, 5), bitcore::twos_complement_encode(3 - 5, 8));
}

TEST_F(TransparentTest, XorExamples) {
  auto x = enc(0b11111110);
  auto y = enc(0b10100101);
  EXPECT_EQ(scheme.dec(keys.private_part, scheme.hom_xor(keys.public_part, x, y))
                .to_string(),
            "01011011");
  EXPECT_EQ(dec(scheme.hom_xor(keys.public_part, x, enc(0))), 0b11111110u);
  EXPECT_EQ(dec(scheme.hom_xor(keys.public_part, x, x)), 0u);
}

TEST_F(TransparentTest, OperandsUnderOtherKeysRejected) {
  SchemeKeys other = scheme.keygen(8, prg::Seed::from_index(9));
  Ciphertext foreign = scheme.enc(other.public_part, to_bits(1, 8), rng);
  EXPECT_THROW(scheme.hom_sub(keys.public_part, enc(1), foreign), Error);
  EXPECT_THROW(scheme.hom_xor(keys.public_part, foreign, enc(1)), Error);
}

TEST_F(TransparentTest, CountersTrackEachOperation) {
  Ciphertext x = enc(4);
  Ciphertext y = enc(9);
  Ciphertext z = scheme.hom_sub(keys.public_part, x, y);
  Ciphertext r = scheme.encode_public(keys.public_part, to_bits(0x5a, 8));
  scheme.dec(keys.private_part, scheme.hom_xor(keys.public_part, z, r));
  EXPECT_EQ(counters.get("enc"), 2u);
  EXPECT_EQ(counters.get("hom_sub"), 1u);
  EXPECT_EQ(counters.get("hom_xor"), 1u);
  EXPECT_EQ(counters.get("dec"), 1u);
}

TEST(HomomorphicProperty, SubThenXorExhaustiveWidth4) {
  TransparentScheme scheme;
  SchemeKeys keys = scheme.keygen(4, prg::Seed::from_index(5));
  prg::Keystream rng(Bytes{'w', '4'});
  for (unsigned a = 0; a < 16; ++a) {
    for (unsigned b = 0; b < 16; ++b) {
      for (unsigned r = 0; r < 16; ++r) {
        auto ea = scheme.enc(keys.public_part, to_bits(a, 4), rng);
        auto eb = scheme.enc(keys.public_part, to_bits(b, 4), rng);
        auto er = scheme.enc(keys.public_part, to_bits(r, 4), rng);
        auto v = scheme.hom_xor(keys.public_part,
                                scheme.hom_sub(keys.public_part, ea, eb), er);
        unsigned expected = ((a - b) & 0xf) ^ r;
        ASSERT_EQ(bitcore::from_bits(scheme.dec(keys.private_part, v)),
                  expected)
            << a << " " << b << " " << r;
      }
    }
  }
}

TEST(HomomorphicProperty, BlindingIsBijectiveUpToWidth8) {
  for (std::size_t w : {2u, 5u, 8u}) {
    const unsigned limit = 1u << w;
    for (unsigned a = 0; a < limit; a += (w == 8 ? 37 : 1)) {
      for (unsigned b = 0; b < limit; b += (w == 8 ? 29 : 1)) {
        BitString diff = to_bits((a - b) & (limit - 1), w);
        std::vector<bool> seen(limit, false);
        for (unsigned r = 0; r < limit; ++r) {
          unsigned v =
              bitcore::from_bits(bitcore::bit_xor(diff, to_bits(r, w))).get_ui();
          ASSERT_FALSE(seen[v]);
          seen[v] = true;
        }
      }
    }
  }
}

TEST(MakeSchemeTest, OnlyTransparentShips) {
  EXPECT_EQ(make_scheme("transparent", nullptr)->name(), "transparent");
  EXPECT_THROW(make_scheme("paillier", nullptr), Error);
}

}  // namespace
}  // namespace securecmp::he
