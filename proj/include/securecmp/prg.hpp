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

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "securecmp/common.hpp"

namespace securecmp::prg {

inline constexpr std::size_t kDefaultSeedBits = 128;

using Digest = std::array<std::uint8_t, 32>;

Digest sha256(std::span<const std::uint8_t> data);

// Opaque seed of c = 8 * size() bits.
class Seed {
 public:
  explicit Seed(Bytes bytes);

  static Seed from_hex(std::string_view hex);

  // Seed of kDefaultSeedBits derived from a small integer, for sweeps and
  // tests that need "seed number i".
  static Seed from_index(std::uint64_t index);

  const Bytes& bytes() const { return bytes_; }
  std::size_t bits() const { return bytes_.size() * 8; }
  std::string hex() const { return to_hex(bytes_); }

  friend bool operator==(const Seed&, const Seed&) = default;

 private:
  Bytes bytes_;
};

// Domain-separated child seed of the same length: the first bytes of the
// keystream keyed by seed || 0x00 || label.
Seed derive(const Seed& seed, std::string_view label);

// SHA-256 in counter mode: block j = SHA-256(key || le64(j)), j = 0, 1, ...
class Keystream {
 public:
  explicit Keystream(Bytes key);

  void fill(std::span<std::uint8_t> out);
  Bytes take(std::size_t n);

  // Uniform integer in [0, bound) by rejection sampling; bound >= 1.
  Integer uniform_below(const Integer& bound);

 private:
  void refill();

  Bytes key_;
  std::uint64_t counter_ = 0;
  Digest block_{};
  std::size_t used_ = block_.size();
};

struct SubseedSchedule {
  std::vector<Seed> subseeds;  // exactly 2 * d entries
  std::size_t d = 0;
};

// Splits 2 * d * c bits of keystream over seed into 2d subseeds of c bits.
SubseedSchedule expand(const Seed& seed, std::size_t d);

// Uniform draw from [lo, hi], or from the open interval (lo, hi) when
// exclusive, using the keystream of subseed. Throws on an empty interval.
Integer int_in_range(const Seed& subseed, const Integer& lo, const Integer& hi,
                     bool exclusive);

}  // namespace securecmp::prg
