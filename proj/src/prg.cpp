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

#include "securecmp/prg.hpp"

#include <algorithm>
#include <cstring>

#include <openssl/evp.h>

namespace securecmp::prg {

Digest sha256(std::span<const std::uint8_t> data) {
  Digest out{};
  unsigned int len = 0;
  if (EVP_Digest(data.data(), data.size(), out.data(), &len, EVP_sha256(),
                 nullptr) != 1 ||
      len != out.size()) {
    throw Error("SHA-256 failed");
  }
  return out;
}

Seed::Seed(Bytes bytes) : bytes_(std::move(bytes)) {
  if (bytes_.empty()) throw Error("seed must not be empty");
}

Seed Seed::from_hex(std::string_view hex) { return Seed(securecmp::from_hex(hex)); }

Seed Seed::from_index(std::uint64_t index) {
  Bytes key{'s', 'e', 'e', 'd', '/'};
  for (int i = 0; i < 8; ++i) key.push_back((index >> (8 * i)) & 0xff);
  return Seed(Keystream(std::move(key)).take(kDefaultSeedBits / 8));
}

Seed derive(const Seed& seed, std::string_view label) {
  Bytes key = seed.bytes();
  key.push_back(0);
  key.insert(key.end(), label.begin(), label.end());
  return Seed(Keystream(std::move(key)).take(seed.bytes().size()));
}

Keystream::Keystream(Bytes key) : key_(std::move(key)) {
  key_.resize(key_.size() + 8);
}

void Keystream::refill() {
  std::uint8_t* ctr = key_.data() + key_.size() - 8;
  for (int i = 0; i < 8; ++i) ctr[i] = (counter_ >> (8 * i)) & 0xff;
  ++counter_;
  block_ = sha256(key_);
  used_ = 0;
}

void Keystream::fill(std::span<std::uint8_t> out) {
  std::size_t pos = 0;
  while (pos < out.size()) {
    if (used_ == block_.size()) refill();
    std::size_t n = std::min(block_.size() - used_, out.size() - pos);
    std::memcpy(out.data() + pos, block_.data() + used_, n);
    used_ += n;
    pos += n;
  }
}

Bytes Keystream::take(std::size_t n) {
  Bytes out(n);
  fill(out);
  return out;
}

Integer Keystream::uniform_below(const Integer& bound) {
  if (bound < 1) throw Error("uniform_below needs a positive bound");
  if (bound == 1) return 0;
  std::size_t nbits = bit_length(Integer(bound - 1));
  std::size_t nbytes = (nbits + 7) / 8;
  Bytes buf(nbytes);
  Integer candidate;
  while (true) {
    fill(buf);
    mpz_import(candidate.get_mpz_t(), nbytes, 1, 1, 1, 0, buf.data());
    mpz_tdiv_r_2exp(candidate.get_mpz_t(), candidate.get_mpz_t(), nbits);
    if (candidate < bound) return candidate;
  }
}

SubseedSchedule expand(const Seed& seed, std::size_t d) {
  if (d == 0) throw Error("expand needs d >= 1");
  const std::size_t piece = seed.bytes().size();
  Keystream stream(seed.bytes());
  SubseedSchedule schedule;
  schedule.d = d;
  schedule.subseeds.reserve(2 * d);
  for (std::size_t j = 0; j < 2 * d; ++j) {
    schedule.subseeds.emplace_back(stream.take(piece));
  }
  return schedule;
}

Integer int_in_range(const Seed& subseed, const Integer& lo, const Integer& hi,
                     bool exclusive) {
  Integer first = exclusive ? Integer(lo + 1) : lo;
  Integer last = exclusive ? Integer(hi - 1) : hi;
  if (last < first) {
    throw Error(std::string("empty sampling interval ") +
                (exclusive ? "(" : "[") + lo.get_str() + ", " + hi.get_str() +
                (exclusive ? ")" : "]"));
  }
  Keystream stream(subseed.bytes());
  return first + stream.uniform_below(last - first + 1);
}

}  // namespace securecmp::prg
