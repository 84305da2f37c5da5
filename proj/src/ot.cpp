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

#include "securecmp/ot.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <string>

#include "securecmp/bitcore.hpp"

namespace securecmp::ot {
namespace {

std::size_t word_bytes(const Config& c) { return (c.payload_bits + 7) / 8; }
std::size_t element_bytes(const Config& c) { return (c.modulus_bits + 7) / 8; }

Integer encode_word(const Integer& value, std::size_t bits) {
  try {
    return bitcore::from_bits(bitcore::twos_complement_encode(value, bits));
  } catch (const Error&) {
    throw Error("OT payload " + value.get_str() + " does not fit in " +
                std::to_string(bits) + " bits");
  }
}

Integer decode_word(const Integer& word, std::size_t bits) {
  return bitcore::twos_complement_decode(bitcore::to_bits(word, bits));
}

Integer pad_for(const Integer& key, const Config& c) {
  Bytes seed{'o', 't', '-', 'p', 'a', 'd'};
  Bytes k = integer_to_bytes_fixed(key, element_bytes(c));
  seed.insert(seed.end(), k.begin(), k.end());
  Bytes pad = prg::Keystream(std::move(seed)).take(word_bytes(c));
  Integer v = integer_from_bytes(pad);
  mpz_tdiv_r_2exp(v.get_mpz_t(), v.get_mpz_t(), c.payload_bits);
  return v;
}

void append(Bytes& out, const Bytes& part) {
  out.insert(out.end(), part.begin(), part.end());
}

Integer read(const Bytes& in, std::size_t offset, std::size_t len) {
  return integer_from_bytes(Bytes(in.begin() + offset, in.begin() + offset + len));
}

Integer powm(const Integer& base, const Integer& exp, const Integer& mod) {
  Integer r;
  mpz_powm(r.get_mpz_t(), base.get_mpz_t(), exp.get_mpz_t(), mod.get_mpz_t());
  return r;
}

// Exponent pair (e, e^-1 mod p-1) for v -> v^e mod p.
std::pair<Integer, Integer> exponent_pair(prg::Keystream& rng, const Integer& p) {
  Integer order = p - 1;
  while (true) {
    Integer e = 3 + rng.uniform_below(p - 4);
    Integer g;
    mpz_gcd(g.get_mpz_t(), e.get_mpz_t(), order.get_mpz_t());
    if (g != 1) continue;
    Integer inv;
    mpz_invert(inv.get_mpz_t(), e.get_mpz_t(), order.get_mpz_t());
    return {e, inv};
  }
}

void check_config(const Config& c) {
  if (c.payload_bits < 1) throw Error("OT payload width must be positive");
  if (c.backend == Backend::CommutativeRsa && c.modulus_bits < 32) {
    throw Error("OT modulus must have at least 32 bits");
  }
}

}  // namespace

Backend parse_backend(std::string_view name) {
  if (name == "transparent") return Backend::Transparent;
  if (name == "commutative-rsa") return Backend::CommutativeRsa;
  throw Error("unknown OT backend: " + std::string(name));
}

std::string_view backend_name(Backend backend) {
  return backend == Backend::Transparent ? "transparent" : "commutative-rsa";
}

std::size_t payload_width_for(std::span<const Integer> values) {
  std::size_t width = 1;
  for (const auto& v : values) {
    // w bits hold [-2^(w-1), 2^(w-1)).
    std::size_t need = sgn(v) >= 0 ? bit_length(v) + 1
                                   : bit_length(Integer(-v - 1)) + 1;
    width = std::max(width, need);
  }
  return width;
}

const Integer& group_prime(std::size_t bits) {
  static std::mutex mu;
  static std::map<std::size_t, Integer> cache;
  std::lock_guard lock(mu);
  auto it = cache.find(bits);
  if (it != cache.end()) return it->second;
  if (bits < 32) throw Error("OT modulus must have at least 32 bits");

  Bytes key{'o', 't', '-', 'g', 'r', 'o', 'u', 'p'};
  for (int i = 0; i < 8; ++i) key.push_back((bits >> (8 * i)) & 0xff);
  prg::Keystream stream(std::move(key));
  Integer p;
  do {
    Integer candidate = stream.uniform_below(Integer(1) << bits);
    mpz_setbit(candidate.get_mpz_t(), bits - 1);
    mpz_nextprime(p.get_mpz_t(), candidate.get_mpz_t());
  } while (bit_length(p) != bits);
  return cache.emplace(bits, p).first->second;
}

SenderSession::SenderSession(const Config& config, SenderInput input,
                             const prg::Seed& seed, simnet::Counters* counters)
    : config_(config),
      input_(std::move(input)),
      rng_(seed.bytes()),
      counters_(counters) {
  check_config(config_);
  // Fail early on payloads that do not fit.
  encode_word(input_.m0, config_.payload_bits);
  encode_word(input_.m1, config_.payload_bits);
}

Bytes SenderSession::offer() {
  const std::size_t wb = word_bytes(config_);
  Integer w0 = encode_word(input_.m0, config_.payload_bits);
  Integer w1 = encode_word(input_.m1, config_.payload_bits);
  Bytes out;
  if (config_.backend == Backend::Transparent) {
    append(out, integer_to_bytes_fixed(w0, wb));
    append(out, integer_to_bytes_fixed(w1, wb));
    return out;
  }

  const Integer& p = group_prime(config_.modulus_bits);
  const std::size_t eb = element_bytes(config_);
  std::tie(exp_, inv_exp_) = exponent_pair(rng_, p);
  Integer k0 = 2 + rng_.uniform_below(p - 3);
  Integer k1 = 2 + rng_.uniform_below(p - 3);
  Integer c0 = powm(k0, exp_, p);
  Integer c1 = powm(k1, exp_, p);
  if (counters_) counters_->bump("ot_enc", 2);
  append(out, integer_to_bytes_fixed(c0, eb));
  append(out, integer_to_bytes_fixed(c1, eb));
  append(out, integer_to_bytes_fixed(w0 ^ pad_for(k0, config_), wb));
  append(out, integer_to_bytes_fixed(w1 ^ pad_for(k1, config_), wb));
  return out;
}

Bytes SenderSession::answer(const Bytes& query) {
  if (config_.backend == Backend::Transparent) {
    throw Error("transparent OT has no query round");
  }
  const std::size_t eb = element_bytes(config_);
  if (query.size() != 2 * eb || sgn(exp_) == 0) {
    throw Error("malformed OT query");
  }
  const Integer& p = group_prime(config_.modulus_bits);
  Integer first = read(query, 0, eb);
  if (counters_) counters_->bump("ot_dec");
  return integer_to_bytes_fixed(powm(first, inv_exp_, p), eb);
}

ReceiverSession::ReceiverSession(const Config& config, ReceiverInput input,
                                 const prg::Seed& seed,
                                 simnet::Counters* counters)
    : config_(config), input_(input), rng_(seed.bytes()), counters_(counters) {
  check_config(config_);
  if (input_.choice != 0 && input_.choice != 1) {
    throw Error("OT choice must be 0 or 1");
  }
}

std::optional<Bytes> ReceiverSession::accept_offer(const Bytes& offer) {
  const std::size_t wb = word_bytes(config_);
  if (config_.backend == Backend::Transparent) {
    if (offer.size() != 2 * wb) throw Error("malformed OT offer");
    received_ = decode_word(read(offer, input_.choice * wb, wb),
                            config_.payload_bits);
    return std::nullopt;
  }

  const std::size_t eb = element_bytes(config_);
  if (offer.size() != 2 * eb + 2 * wb) throw Error("malformed OT offer");
  const Integer& p = group_prime(config_.modulus_bits);
  Integer e;
  std::tie(e, inv_exp_) = exponent_pair(rng_, p);
  Integer c0 = read(offer, 0, eb);
  Integer c1 = read(offer, eb, eb);
  Integer z0 = powm(c0, e, p);
  Integer z1 = powm(c1, e, p);
  if (counters_) counters_->bump("ot_enc", 2);
  std::size_t masked_at = 2 * eb + input_.choice * wb;
  masked_choice_.assign(offer.begin() + masked_at,
                        offer.begin() + masked_at + wb);

  const Integer& chosen = input_.choice ? z1 : z0;
  const Integer& other = input_.choice ? z0 : z1;
  Bytes query = integer_to_bytes_fixed(chosen, eb);
  append(query, integer_to_bytes_fixed(other, eb));
  return query;
}

void ReceiverSession::finish(const Bytes& answer) {
  if (config_.backend == Backend::Transparent) {
    throw Error("transparent OT has no answer round");
  }
  const std::size_t eb = element_bytes(config_);
  if (answer.size() != eb || masked_choice_.empty()) {
    throw Error("malformed OT answer");
  }
  const Integer& p = group_prime(config_.modulus_bits);
  Integer key = powm(integer_from_bytes(answer), inv_exp_, p);
  if (counters_) counters_->bump("ot_dec");
  Integer word = integer_from_bytes(masked_choice_) ^ pad_for(key, config_);
  received_ = decode_word(word, config_.payload_bits);
}

const Integer& ReceiverSession::received() const {
  if (!received_) throw Error("OT not complete");
  return *received_;
}

namespace {

class SenderParty final : public simnet::Party {
 public:
  SenderParty(SenderSession session, Backend backend)
      : session_(std::move(session)), backend_(backend) {}

  simnet::PartyId id() const override { return simnet::PartyId::Bob; }
  bool done() const override { return done_; }
  std::string state() const override { return offered_ ? "offered" : "idle"; }

  std::vector<simnet::Message> step(
      std::span<const simnet::Message> inbox) override {
    std::vector<simnet::Message> out;
    if (!offered_) {
      offered_ = true;
      done_ = backend_ == Backend::Transparent;
      out.push_back({.to = simnet::PartyId::Alice,
                     .label = "ot_offer",
                     .payload = session_.offer()});
      return out;
    }
    for (const auto& m : inbox) {
      if (m.label == "ot_query") {
        out.push_back({.to = simnet::PartyId::Alice,
                       .label = "ot_answer",
                       .payload = session_.answer(m.payload)});
        done_ = true;
      }
    }
    return out;
  }

 private:
  SenderSession session_;
  Backend backend_;
  bool offered_ = false;
  bool done_ = false;
};

class ReceiverParty final : public simnet::Party {
 public:
  ReceiverParty(ReceiverSession session) : session_(std::move(session)) {}

  simnet::PartyId id() const override { return simnet::PartyId::Alice; }
  bool done() const override { return session_.complete(); }
  std::string state() const override {
    return session_.complete() ? "complete" : "waiting";
  }
  const ReceiverSession& session() const { return session_; }

  std::vector<simnet::Message> step(
      std::span<const simnet::Message> inbox) override {
    std::vector<simnet::Message> out;
    for (const auto& m : inbox) {
      if (m.label == "ot_offer") {
        if (auto query = session_.accept_offer(m.payload)) {
          out.push_back({.to = simnet::PartyId::Bob,
                         .label = "ot_query",
                         .payload = std::move(*query)});
        }
      } else if (m.label == "ot_answer") {
        session_.finish(m.payload);
      }
    }
    return out;
  }

 private:
  ReceiverSession session_;
};

}  // namespace

Result execute(const SenderInput& sender, const ReceiverInput& receiver,
               const Config& config, const prg::Seed& seed) {
  simnet::Counters counters;
  SenderParty bob(SenderSession(config, sender, prg::derive(seed, "ot-sender"),
                                &counters),
                  config.backend);
  ReceiverParty alice(ReceiverSession(
      config, receiver, prg::derive(seed, "ot-receiver"), &counters));
  simnet::Party* parties[] = {&alice, &bob};
  Result result;
  result.transcript = simnet::run(parties);
  result.transcript.counters = counters;
  result.received = alice.session().received();
  return result;
}

}  // namespace securecmp::ot
