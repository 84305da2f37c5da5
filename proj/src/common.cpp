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

#include "securecmp/common.hpp"

#include <cctype>

namespace securecmp {

std::string to_hex(const Bytes& bytes) {
  static constexpr char kDigits[] = "0123456789abcdef";
  std::string out;
  out.reserve(bytes.size() * 2);
  for (std::uint8_t b : bytes) {
    out.push_back(kDigits[b >> 4]);
    out.push_back(kDigits[b & 0xf]);
  }
  return out;
}

Bytes from_hex(std::string_view hex) {
  if (hex.starts_with("0x") || hex.starts_with("0X")) hex.remove_prefix(2);
  if (hex.size() % 2 != 0) {
    throw Error("hex string has odd length: " + std::string(hex));
  }
  auto nibble = [&](char c) -> std::uint8_t {
    if (c >= '0' && c <= '9') return c - '0';
    c = static_cast<char>(std::tolower(static_cast<unsigned char>(c)));
    if (c >= 'a' && c <= 'f') return c - 'a' + 10;
    throw Error("invalid hex digit in: " + std::string(hex));
  };
  Bytes out(hex.size() / 2);
  for (std::size_t i = 0; i < out.size(); ++i) {
    out[i] = static_cast<std::uint8_t>(nibble(hex[2 * i]) << 4 |
                                       nibble(hex[2 * i + 1]));
  }
  return out;
}

std::size_t bit_length(const Integer& v) {
  if (sgn(v) == 0) return 0;
  return mpz_sizeinbase(v.get_mpz_t(), 2);
}

Bytes integer_to_bytes(const Integer& v) {
  Integer mag = abs(v);
  std::size_t len = (bit_length(mag) + 7) / 8;
  if (len == 0) return Bytes{0};
  Bytes out(len);
  mpz_export(out.data(), nullptr, 1, 1, 1, 0, mag.get_mpz_t());
  return out;
}

Integer integer_from_bytes(const Bytes& bytes) {
  Integer v;
  if (!bytes.empty()) {
    mpz_import(v.get_mpz_t(), bytes.size(), 1, 1, 1, 0, bytes.data());
  }
  return v;
}

Bytes integer_to_bytes_fixed(const Integer& v, std::size_t len) {
  if (sgn(v) < 0 || (bit_length(v) + 7) / 8 > len) {
    throw Error("integer does not fit in " + std::to_string(len) + " bytes");
  }
  Bytes out(len, 0);
  std::size_t used = (bit_length(v) + 7) / 8;
  if (used > 0) {
    mpz_export(out.data() + (len - used), nullptr, 1, 1, 1, 0, v.get_mpz_t());
  }
  return out;
}

}  // namespace securecmp
