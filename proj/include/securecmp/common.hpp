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

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <gmpxx.h>

namespace securecmp {

// Arbitrary-precision signed integer used for inputs, mappings and
// protocol values.
using Integer = mpz_class;

using Bytes = std::vector<std::uint8_t>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_hex(const Bytes& bytes);
Bytes from_hex(std::string_view hex);

// Number of bits in |v| (0 for v == 0).
std::size_t bit_length(const Integer& v);

// Big-endian magnitude bytes, at least one byte.
Bytes integer_to_bytes(const Integer& v);
Integer integer_from_bytes(const Bytes& bytes);

// Fixed-length big-endian encoding of a non-negative value; throws if it
// does not fit.
Bytes integer_to_bytes_fixed(const Integer& v, std::size_t len);

}  // namespace securecmp
