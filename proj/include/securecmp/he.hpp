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
#include <memory>
#include <string_view>

#include "securecmp/bitcore.hpp"
#include "securecmp/common.hpp"
#include "securecmp/prg.hpp"
#include "securecmp/simnet.hpp"

// Partially homomorphic encryption over w-bit words supporting subtraction
// modulo 2^w and bitwise XOR between ciphertexts.
namespace securecmp::he {

struct PublicKey {
  std::size_t width = 0;
  Bytes key_id;    // identifies the key pair inside ciphertexts
  Bytes eval_key;  // material needed for homomorphic evaluation
};

struct PrivateKey {
  std::size_t width = 0;
  Bytes secret;
};

struct SchemeKeys {
  PublicKey public_part;
  PrivateKey private_part;
  std::size_t width = 0;
};

// Serialized form: one width byte followed by the body.
class Ciphertext {
 public:
  Ciphertext(std::size_t width, Bytes body);

  static Ciphertext parse(const Bytes& serialized);

  std::size_t width() const { return width_; }
  const Bytes& body() const { return body_; }
  Bytes serialize() const;

  friend bool operator==(const Ciphertext&, const Ciphertext&) = default;

 private:
  std::size_t width_;
  Bytes body_;
};

class HomomorphicScheme {
 public:
  virtual ~HomomorphicScheme() = default;

  virtual std::string_view name() const = 0;

  virtual SchemeKeys keygen(std::size_t width, const prg::Seed& seed) const = 0;

  // Randomized encryption; nonces come from rng. Counts "enc".
  virtual Ciphertext enc(const PublicKey& pk, const bitcore::BitString& m,
                         prg::Keystream& rng) = 0;

  // Noise-free encoding of a value the caller already knows. Not counted as
  // an encryption.
  virtual Ciphertext encode_public(const PublicKey& pk,
                                   const bitcore::BitString& m) const = 0;

  // Counts "dec".
  virtual bitcore::BitString dec(const PrivateKey& sk, const Ciphertext& c) = 0;

  // (x - y) mod 2^w. Counts "hom_sub".
  virtual Ciphertext hom_sub(const PublicKey& pk, const Ciphertext& x,
                             const Ciphertext& y) = 0;

  // Bitwise x XOR y. Counts "hom_xor".
  virtual Ciphertext hom_xor(const PublicKey& pk, const Ciphertext& x,
                             const Ciphertext& y) = 0;
};

// Reference backend. A ciphertext is the plaintext word masked with a
// keystream derived from the public evaluation key and a per-ciphertext
// nonce, tagged with the key id. Homomorphic operations unmask, compute and
// re-mask, so results are exact; decryption checks the private key against
// the tag. Not semantically secure: anyone holding the public part can
// unmask.
class TransparentScheme final : public HomomorphicScheme {
 public:
  explicit TransparentScheme(simnet::Counters* counters = nullptr)
      : counters_(counters) {}

  std::string_view name() const override { return "transparent"; }

  SchemeKeys keygen(std::size_t width, const prg::Seed& seed) const override;
  Ciphertext enc(const PublicKey& pk, const bitcore::BitString& m,
                 prg::Keystream& rng) override;
  Ciphertext encode_public(const PublicKey& pk,
                           const bitcore::BitString& m) const override;
  bitcore::BitString dec(const PrivateKey& sk, const Ciphertext& c) override;
  Ciphertext hom_sub(const PublicKey& pk, const Ciphertext& x,
                     const Ciphertext& y) override;
  Ciphertext hom_xor(const PublicKey& pk, const Ciphertext& x,
                     const Ciphertext& y) override;

 private:
  void count(std::string_view tag);

  simnet::Counters* counters_;
};

std::unique_ptr<HomomorphicScheme> make_scheme(std::string_view backend,
                                               simnet::Counters* counters);

}  // namespace securecmp::he
