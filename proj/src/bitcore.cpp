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

#include <algorithm>

namespace securecmp::bitcore {

BitString::BitString(std::vector<std::uint8_t> lsb_first)
    : bits_(std::move(lsb_first)) {
  if (bits_.empty()) throw Error("bit string must have width >= 1");
  for (std::uint8_t b : bits_) {
    if (b > 1) throw Error("bit string entries must be 0 or 1");
  }
}

BitString BitString::parse(std::string_view msb_first) {
  std::vector<std::uint8_t> bits;
  bits.reserve(msb_first.size());
  for (auto it = msb_first.rbegin(); it != msb_first.rend(); ++it) {
    if (*it != '0' && *it != '1') {
      throw Error("invalid bit string: " + std::string(msb_first));
    }
    bits.push_back(*it == '1');
  }
  return BitString(std::move(bits));
}

int BitString::bit(std::size_t position) const {
  if (position < 1 || position > bits_.size()) {
    throw Error("bit position " + std::to_string(position) +
                " outside width " + std::to_string(bits_.size()));
  }
  return bits_[position - 1];
}

std::string BitString::to_string() const {
  std::string out;
  out.reserve(bits_.size());
  for (auto it = bits_.rbegin(); it != bits_.rend(); ++it) {
    out.push_back(*it ? '1' : '0');
  }
  return out;
}

BitString BitString::padded(std::size_t width) const {
  if (width <= bits_.size()) return *this;
  auto bits = bits_;
  bits.resize(width, 0);
  return BitString(std::move(bits));
}

BitString to_bits(const Integer& value, std::optional<std::size_t> width) {
  if (sgn(value) < 0) throw Error("to_bits expects a non-negative value");
  std::size_t needed = std::max<std::size_t>(bit_length(value), 1);
  std::size_t w = needed;
  if (width) {
    if (*width == 0) throw Error("bit width must be positive");
    if (bit_length(value) > *width) {
      throw Error("value " + value.get_str() + " does not fit in " +
                  std::to_string(*width) + " bits");
    }
    w = *width;
  }
  std::vector<std::uint8_t> bits(w, 0);
  for (std::size_t i = 0; i < needed; ++i) {
    bits[i] = mpz_tstbit(value.get_mpz_t(), i);
  }
  return BitString(std::move(bits));
}

Integer from_bits(const BitString& x) {
  Integer v;
  const auto& bits = x.lsb_first();
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i]) mpz_setbit(v.get_mpz_t(), i);
  }
  return v;
}

BitString twos_complement_encode(const Integer& value, std::size_t width) {
  if (width == 0) throw Error("bit width must be positive");
  Integer half = Integer(1) << (width - 1);
  if (value < -half || value >= half) {
    throw Error("value " + value.get_str() + " outside " +
                std::to_string(width) + "-bit two's complement range");
  }
  Integer word = value;
  if (sgn(word) < 0) word += half << 1;
  return to_bits(word, width);
}

Integer twos_complement_decode(const BitString& x) {
  Integer v = from_bits(x);
  if (msb(x)) v -= Integer(1) << x.width();
  return v;
}

int msb(const BitString& x) { return x.bit(x.width()); }

BitString complement(const BitString& x, std::size_t width) {
  if (width == 0) throw Error("bit width must be positive");
  if (bit_length(from_bits(x)) > width) {
    throw Error("complement width " + std::to_string(width) +
                " smaller than value width");
  }
  std::vector<std::uint8_t> bits(width);
  const auto& src = x.lsb_first();
  for (std::size_t i = 0; i < width; ++i) {
    std::uint8_t b = i < src.size() ? src[i] : 0;
    bits[i] = b ^ 1;
  }
  return BitString(std::move(bits));
}

BitString bit_xor(const BitString& x, const BitString& y) {
  if (x.width() != y.width()) {
    throw Error("xor width mismatch: " + std::to_string(x.width()) + " vs " +
                std::to_string(y.width()));
  }
  std::vector<std::uint8_t> bits(x.width());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    bits[i] = x.lsb_first()[i] ^ y.lsb_first()[i];
  }
  return BitString(std::move(bits));
}

}  // namespace securecmp::bitcore
