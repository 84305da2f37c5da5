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

#include <algorithm>
#include <string>

namespace securecmp::he {
namespace {

constexpr std::size_t kKeyIdBytes = 8;
constexpr std::size_t kNonceBytes = 16;
constexpr std::size_t kMaxWidth = 255;

std::size_t word_bytes(std::size_t width) { return (width + 7) / 8; }

Bytes concat(std::string_view tag, const Bytes& a, const Bytes& b = {}) {
  Bytes out(tag.begin(), tag.end());
  out.insert(out.end(), a.begin(), a.end());
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

Bytes word_to_le(const Integer& word, std::size_t width) {
  Bytes out(word_bytes(width), 0);
  std::size_t count = 0;
  mpz_export(out.data(), &count, -1, 1, 0, 0, word.get_mpz_t());
  return out;
}

Integer word_from_le(const std::uint8_t* data, std::size_t n) {
  Integer v;
  mpz_import(v.get_mpz_t(), n, -1, 1, 0, 0, data);
  return v;
}

Integer reduce(const Integer& v, std::size_t width) {
  Integer r;
  mpz_fdiv_r_2exp(r.get_mpz_t(), v.get_mpz_t(), width);
  return r;
}

Integer mask_word(const Bytes& eval_key, const Bytes& nonce,
                  std::size_t width) {
  prg::Keystream stream(concat("mask", eval_key, nonce));
  Bytes pad = stream.take(word_bytes(width));
  return reduce(word_from_le(pad.data(), pad.size()), width);
}

Bytes key_id_for(const Bytes& secret) {
  auto digest = prg::sha256(concat("he-id", secret));
  return Bytes(digest.begin(), digest.begin() + kKeyIdBytes);
}

Bytes eval_key_for(const Bytes& secret) {
  auto digest = prg::sha256(concat("he-eval", secret));
  return Bytes(digest.begin(), digest.end());
}

struct Opened {
  Bytes key_id;
  Bytes nonce;
  Integer word;  // still masked
};

Opened open(const Ciphertext& c) {
  const Bytes& body = c.body();
  if (body.size() != kKeyIdBytes + kNonceBytes + word_bytes(c.width())) {
    throw Error("malformed ciphertext: body of " + std::to_string(body.size()) +
                " bytes for width " + std::to_string(c.width()));
  }
  Opened o;
  o.key_id.assign(body.begin(), body.begin() + kKeyIdBytes);
  o.nonce.assign(body.begin() + kKeyIdBytes,
                 body.begin() + kKeyIdBytes + kNonceBytes);
  o.word = word_from_le(body.data() + kKeyIdBytes + kNonceBytes,
                        body.size() - kKeyIdBytes - kNonceBytes);
  if (bit_length(o.word) > c.width()) {
    throw Error("malformed ciphertext: word exceeds width");
  }
  return o;
}

Ciphertext seal(const PublicKey& pk, const Bytes& nonce, const Integer& plain) {
  Integer masked = plain ^ mask_word(pk.eval_key, nonce, pk.width);
  Bytes body = pk.key_id;
  body.insert(body.end(), nonce.begin(), nonce.end());
  Bytes word = word_to_le(masked, pk.width);
  body.insert(body.end(), word.begin(), word.end());
  return Ciphertext(pk.width, std::move(body));
}

void check_operand(const PublicKey& pk, const Ciphertext& c,
                   const Opened& o) {
  if (c.width() != pk.width) {
    throw Error("ciphertext width " + std::to_string(c.width()) +
                " does not match key width " + std::to_string(pk.width));
  }
  if (o.key_id != pk.key_id) {
    throw Error("ciphertext was produced under a different key");
  }
}

}  // namespace

Ciphertext::Ciphertext(std::size_t width, Bytes body)
    : width_(width), body_(std::move(body)) {
  if (width_ < 1 || width_ > kMaxWidth) {
    throw Error("ciphertext width out of range: " + std::to_string(width_));
  }
}

Ciphertext Ciphertext::parse(const Bytes& serialized) {
  if (serialized.size() < 2) throw Error("malformed ciphertext: too short");
  return Ciphertext(serialized[0], Bytes(serialized.begin() + 1, serialized.end()));
}

Bytes Ciphertext::serialize() const {
  Bytes out;
  out.reserve(body_.size() + 1);
  out.push_back(static_cast<std::uint8_t>(width_));
  out.insert(out.end(), body_.begin(), body_.end());
  return out;
}

void TransparentScheme::count(std::string_view tag) {
  if (counters_) counters_->bump(tag);
}

SchemeKeys TransparentScheme::keygen(std::size_t width,
                                     const prg::Seed& seed) const {
  if (width < 2 || width > kMaxWidth) {
    throw Error("homomorphic word width must be in [2, 255], got " +
                std::to_string(width));
  }
  Bytes secret = prg::Keystream(concat("he-secret", seed.bytes())).take(32);
  SchemeKeys keys;
  keys.width = width;
  keys.public_part = PublicKey{width, key_id_for(secret), eval_key_for(secret)};
  keys.private_part = PrivateKey{width, std::move(secret)};
  return keys;
}

Ciphertext TransparentScheme::enc(const PublicKey& pk,
                                  const bitcore::BitString& m,
                                  prg::Keystream& rng) {
  if (m.width() != pk.width) {
    throw Error("plaintext width " + std::to_string(m.width()) +
                " does not match key width " + std::to_string(pk.width));
  }
  count("enc");
  return seal(pk, rng.take(kNonceBytes), bitcore::from_bits(m));
}

Ciphertext TransparentScheme::encode_public(const PublicKey& pk,
                                            const bitcore::BitString& m) const {
  if (m.width() != pk.width) {
    throw Error("plaintext width " + std::to_string(m.width()) +
                " does not match key width " + std::to_string(pk.width));
  }
  return seal(pk, Bytes(kNonceBytes, 0), bitcore::from_bits(m));
}

bitcore::BitString TransparentScheme::dec(const PrivateKey& sk,
                                          const Ciphertext& c) {
  Opened o = open(c);
  if (c.width() != sk.width || o.key_id != key_id_for(sk.secret)) {
    throw Error("decryption key does not match ciphertext");
  }
  count("dec");
  Integer plain = o.word ^ mask_word(eval_key_for(sk.secret), o.nonce, c.width());
  return bitcore::to_bits(plain, c.width());
}

Ciphertext TransparentScheme::hom_sub(const PublicKey& pk, const Ciphertext& x,
                                      const Ciphertext& y) {
  Opened ox = open(x);
  Opened oy = open(y);
  check_operand(pk, x, ox);
  check_operand(pk, y, oy);
  count("hom_sub");
  Integer px = ox.word ^ mask_word(pk.eval_key, ox.nonce, pk.width);
  Integer py = oy.word ^ mask_word(pk.eval_key, oy.nonce, pk.width);
  auto digest = prg::sha256(concat("sub", ox.nonce, oy.nonce));
  return seal(pk, Bytes(digest.begin(), digest.begin() + kNonceBytes),
              reduce(px - py, pk.width));
}

Ciphertext TransparentScheme::hom_xor(const PublicKey& pk, const Ciphertext& x,
                                      const Ciphertext& y) {
  Opened ox = open(x);
  Opened oy = open(y);
  check_operand(pk, x, ox);
  check_operand(pk, y, oy);
  count("hom_xor");
  Integer px = ox.word ^ mask_word(pk.eval_key, ox.nonce, pk.width);
  Integer py = oy.word ^ mask_word(pk.eval_key, oy.nonce, pk.width);
  auto digest = prg::sha256(concat("xor", ox.nonce, oy.nonce));
  return seal(pk, Bytes(digest.begin(), digest.begin() + kNonceBytes), px ^ py);
}

std::unique_ptr<HomomorphicScheme> make_scheme(std::string_view backend,
                                               simnet::Counters* counters) {
  if (backend == "transparent") {
    return std::make_unique<TransparentScheme>(counters);
  }
  throw Error("unknown homomorphic backend: " + std::string(backend));
}

}  // namespace securecmp::he
