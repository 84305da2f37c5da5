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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "securecmp/common.hpp"

namespace securecmp::bitcore {

// Binary digits of a value, least significant bit first. Positions are
// 1-based: bit(1) is the LSB and bit(width()) the MSB.
class BitString {
 public:
  // Bits given LSB-first. Must be non-empty and contain only 0/1.
  explicit BitString(std::vector<std::uint8_t> lsb_first);

  // Parses an MSB-first '0'/'1' string such as "1001".
  static BitString parse(std::string_view msb_first);

  std::size_t width() const { return bits_.size(); }
  int bit(std::size_t position) const;
  const std::vector<std::uint8_t>& lsb_first() const { return bits_; }

  // MSB-first rendering, the transcript and table format.
  std::string to_string() const;

  // Copy padded with high zeros (or unchanged if already wide enough).
  BitString padded(std::size_t width) const;

  friend bool operator==(const BitString&, const BitString&) = default;

 private:
  std::vector<std::uint8_t> bits_;
};

// Minimal mode when width is empty: no leading zeros, "0" for zero.
BitString to_bits(const Integer& value,
                  std::optional<std::size_t> width = std::nullopt);

Integer from_bits(const BitString& x);

BitString twos_complement_encode(const Integer& value, std::size_t width);
Integer twos_complement_decode(const BitString& x);

int msb(const BitString& x);

// Bitwise complement of x zero-padded to width.
BitString complement(const BitString& x, std::size_t width);

BitString bit_xor(const BitString& x, const BitString& y);

}  // namespace securecmp::bitcore
