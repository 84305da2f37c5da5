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

#include "securecmp/protocols.hpp"

#include <algorithm>
#include <memory>
#include <string>

#include "securecmp/bitcore.hpp"
#include "securecmp/he.hpp"

namespace securecmp::protocols {

using simnet::Message;
using simnet::PartyId;

std::string_view relation_name(Relation r) {
  switch (r) {
    case Relation::Lt:
      return "LT";
    case Relation::Eq:
      return "EQ";
    case Relation::Gt:
      return "GT";
    case Relation::GtOrEq:
      return "GE";
  }
  return "?";
}

Relation reversed(Relation r) {
  switch (r) {
    case Relation::Lt:
      return Relation::Gt;
    case Relation::Gt:
      return Relation::Lt;
    case Relation::Eq:
      return Relation::Eq;
    case Relation::GtOrEq:
      break;
  }
  throw Error("cannot reverse an unresolved GT-or-EQ result");
}

std::uint8_t relation_code(Relation r) { return static_cast<std::uint8_t>(r); }

Relation relation_from_code(std::uint8_t code) {
  if (code > relation_code(Relation::GtOrEq)) {
    throw Error("invalid relation code " + std::to_string(code));
  }
  return static_cast<Relation>(code);
}

std::optional<bool> Outcome::predicate_gt() const {
  if (relation == Relation::GtOrEq) return std::nullopt;
  return relation == Relation::Gt;
}

Outcome oracle(const Integer& a, const Integer& b) {
  int c = cmp(a, b);
  return {c < 0 ? Relation::Lt : c == 0 ? Relation::Eq : Relation::Gt};
}

Protocol parse_protocol(std::string_view name) {
  if (name == "a" || name == "A") return Protocol::A;
  if (name == "b" || name == "B") return Protocol::B;
  if (name == "b-ext" || name == "B-ext") return Protocol::BExt;
  if (name == "c" || name == "C") return Protocol::C;
  throw Error("unknown protocol: " + std::string(name));
}

std::string_view protocol_name(Protocol p) {
  switch (p) {
    case Protocol::A:
      return "a";
    case Protocol::B:
      return "b";
    case Protocol::BExt:
      return "b-ext";
    case Protocol::C:
      return "c";
  }
  return "?";
}

void ProtocolConfig::set_seed(const prg::Seed& seed) {
  alice_seed = prg::derive(seed, "alice");
  bob_seed = prg::derive(seed, "bob");
}

namespace {

void require_non_negative(const Integer& a, const Integer& b) {
  if (sgn(a) < 0 || sgn(b) < 0) throw Error("inputs must be non-negative");
}

Message to(PartyId recipient, std::string label, Bytes payload) {
  return Message{.to = recipient, .label = std::move(label),
                 .payload = std::move(payload)};
}

// ---------------------------------------------------------------------------
// Homomorphic protocol: Bob sends E(b); Alice returns
// V = (E(a) - E(b)) xor E(R); Bob returns msb(D(V)); Alice unblinds with
// msb(R) and reports the result.

class AliceA final : public simnet::Party {
 public:
  AliceA(const Integer& a, std::size_t width, he::HomomorphicScheme& scheme,
         he::PublicKey pk, const prg::Seed& seed)
      : input_(bitcore::twos_complement_encode(a, width)),
        scheme_(scheme),
        pk_(std::move(pk)),
        rng_(prg::derive(seed, "protocol-a").bytes()) {}

  PartyId id() const override { return PartyId::Alice; }
  bool done() const override { return stage_ == Stage::Done; }
  std::string state() const override {
    switch (stage_) {
      case Stage::AwaitCipher:
        return "await_enc_b";
      case Stage::AwaitMsb:
        return "await_msb";
      case Stage::Done:
        break;
    }
    return "done";
  }
  Relation relation() const { return relation_; }

  std::vector<Message> step(std::span<const Message> inbox) override {
    std::vector<Message> out;
    for (const auto& m : inbox) {
      if (stage_ == Stage::AwaitCipher && m.label == "enc_b") {
        he::Ciphertext enc_b = he::Ciphertext::parse(m.payload);
        he::Ciphertext enc_a = scheme_.enc(pk_, input_, rng_);
        Integer r = rng_.uniform_below(Integer(1) << pk_.width);
        mask_ = bitcore::to_bits(r, pk_.width);
        he::Ciphertext v = scheme_.hom_xor(
            pk_, scheme_.hom_sub(pk_, enc_a, enc_b),
            scheme_.encode_public(pk_, *mask_));
        out.push_back(to(PartyId::Bob, "blinded_v", v.serialize()));
        stage_ = Stage::AwaitMsb;
      } else if (stage_ == Stage::AwaitMsb && m.label == "msb_bit") {
        int sign = (m.payload.at(0) & 1) ^ bitcore::msb(*mask_);
        relation_ = sign ? Relation::Lt : Relation::GtOrEq;
        out.push_back(to(PartyId::Bob, "result", {relation_code(relation_)}));
        stage_ = Stage::Done;
      }
    }
    return out;
  }

 private:
  enum class Stage { AwaitCipher, AwaitMsb, Done };

  bitcore::BitString input_;
  he::HomomorphicScheme& scheme_;
  he::PublicKey pk_;
  prg::Keystream rng_;
  std::optional<bitcore::BitString> mask_;
  Stage stage_ = Stage::AwaitCipher;
  Relation relation_ = Relation::Eq;
};

class BobA final : public simnet::Party {
 public:
  BobA(const Integer& b, he::HomomorphicScheme& scheme, he::SchemeKeys keys,
       const prg::Seed& seed)
      : input_(bitcore::twos_complement_encode(b, keys.width)),
        scheme_(scheme),
        keys_(std::move(keys)),
        rng_(prg::derive(seed, "protocol-a").bytes()) {}

  PartyId id() const override { return PartyId::Bob; }
  bool done() const override { return stage_ == Stage::Done; }
  std::string state() const override {
    switch (stage_) {
      case Stage::Start:
        return "start";
      case Stage::AwaitV:
        return "await_blinded_v";
      case Stage::AwaitResult:
        return "await_result";
      case Stage::Done:
        break;
    }
    return "done";
  }
  Relation relation() const { return relation_; }

  std::vector<Message> step(std::span<const Message> inbox) override {
    std::vector<Message> out;
    if (stage_ == Stage::Start) {
      he::Ciphertext c = scheme_.enc(keys_.public_part, input_, rng_);
      out.push_back(to(PartyId::Alice, "enc_b", c.serialize()));
      stage_ = Stage::AwaitV;
      return out;
    }
    for (const auto& m : inbox) {
      if (stage_ == Stage::AwaitV && m.label == "blinded_v") {
        bitcore::BitString blinded =
            scheme_.dec(keys_.private_part, he::Ciphertext::parse(m.payload));
        out.push_back(to(PartyId::Alice, "msb_bit",
                         {static_cast<std::uint8_t>(bitcore::msb(blinded))}));
        stage_ = Stage::AwaitResult;
      } else if (stage_ == Stage::AwaitResult && m.label == "result") {
        relation_ = relation_from_code(m.payload.at(0));
        stage_ = Stage::Done;
      }
    }
    return out;
  }

 private:
  enum class Stage { Start, AwaitV, AwaitResult, Done };

  bitcore::BitString input_;
  he::HomomorphicScheme& scheme_;
  he::SchemeKeys keys_;
  prg::Keystream rng_;
  Stage stage_ = Stage::Start;
  Relation relation_ = Relation::Eq;
};

// ---------------------------------------------------------------------------
// Third-party protocol: Alice sends (s, k, l, u, W) to Bob; both submit
// F(input) (inputs complemented within W when u = 0) to Ursula, who returns
// the three-way comparison to both.

bitcore::BitString shared_input(const Integer& v, const opf::SharedParams& p) {
  // Checked for both coin values so that a failure does not reveal u.
  if (bit_length(v) > p.complement_width) {
    throw Error("input " + v.get_str() + " does not fit the complement width " +
                std::to_string(p.complement_width));
  }
  if (p.u == 1) return bitcore::to_bits(v);
  return bitcore::complement(bitcore::to_bits(v), p.complement_width);
}

Relation compare(const Integer& x, const Integer& y) {
  return oracle(x, y).relation;
}

class AliceB final : public simnet::Party {
 public:
  AliceB(const Integer& a, opf::SharedParams params)
      : a_(a), params_(std::move(params)) {
    shared_input(a_, params_);  // range check before any message
  }

  PartyId id() const override { return PartyId::Alice; }
  bool done() const override { return done_; }
  std::string state() const override {
    return done_ ? "done" : sent_ ? "await_result" : "start";
  }
  Relation relation() const { return relation_; }

  std::vector<Message> step(std::span<const Message> inbox) override {
    std::vector<Message> out;
    if (!sent_) {
      sent_ = true;
      out.push_back(to(PartyId::Bob, "params", encode_shared_params(params_)));
      Integer value = opf::shared_eval(params_, shared_input(a_, params_));
      out.push_back(to(PartyId::Ursula, "submit_a", integer_to_bytes(value)));
      return out;
    }
    for (const auto& m : inbox) {
      if (m.label == "result" && m.from == PartyId::Ursula) {
        Relation r = relation_from_code(m.payload.at(0));
        relation_ = params_.u == 0 ? reversed(r) : r;
        done_ = true;
      }
    }
    return out;
  }

 private:
  Integer a_;
  opf::SharedParams params_;
  bool sent_ = false;
  bool done_ = false;
  Relation relation_ = Relation::Eq;
};

class BobB final : public simnet::Party {
 public:
  explicit BobB(const Integer& b) : b_(b) {}

  PartyId id() const override { return PartyId::Bob; }
  bool done() const override { return done_; }
  std::string state() const override {
    return done_ ? "done" : params_ ? "await_result" : "await_params";
  }
  Relation relation() const { return relation_; }

  std::vector<Message> step(std::span<const Message> inbox) override {
    std::vector<Message> out;
    for (const auto& m : inbox) {
      if (m.label == "params" && m.from == PartyId::Alice && !params_) {
        params_ = decode_shared_params(m.payload);
        Integer value = opf::shared_eval(*params_, shared_input(b_, *params_));
        out.push_back(to(PartyId::Ursula, "submit_b", integer_to_bytes(value)));
      } else if (m.label == "result" && m.from == PartyId::Ursula && params_) {
        Relation r = relation_from_code(m.payload.at(0));
        relation_ = params_->u == 0 ? reversed(r) : r;
        done_ = true;
      }
    }
    return out;
  }

 private:
  Integer b_;
  std::optional<opf::SharedParams> params_;
  bool done_ = false;
  Relation relation_ = Relation::Eq;
};

class UrsulaB final : public simnet::Party {
 public:
  PartyId id() const override { return PartyId::Ursula; }
  bool done() const override { return done_; }
  std::string state() const override {
    return done_ ? "done" : "collecting";
  }

  std::vector<Message> step(std::span<const Message> inbox) override {
    std::vector<Message> out;
    for (const auto& m : inbox) {
      if (m.label == "submit_a") value_a_ = integer_from_bytes(m.payload);
      if (m.label == "submit_b") value_b_ = integer_from_bytes(m.payload);
    }
    if (!done_ && value_a_ && value_b_) {
      std::uint8_t code = relation_code(compare(*value_a_, *value_b_));
      out.push_back(to(PartyId::Alice, "result", {code}));
      out.push_back(to(PartyId::Bob, "result", {code}));
      done_ = true;
    }
    return out;
  }

 private:
  std::optional<Integer> value_a_;
  std::optional<Integer> value_b_;
  bool done_ = false;
};

// ---------------------------------------------------------------------------
// Anchor-point protocol: Bob builds F at b; Alice obtains f_i(a_i) by one OT
// per position, receives F(b), compares and tells Bob.

}  // namespace

// Gaps at position i stay below l * 2^(i-1), so
// |F| <= d * max(|lo|, |hi|) + l * 2^d bounds every mapping and every F value.
std::size_t point_payload_bits(const ProtocolConfig& cfg) {
  Integer reach = abs(cfg.range_lo) > abs(cfg.range_hi) ? abs(cfg.range_lo)
                                                        : abs(cfg.range_hi);
  Integer bound = Integer(cfg.d_bound) * reach + (cfg.point_l << cfg.d_bound);
  Integer extremes[] = {bound, Integer(-bound)};
  return ot::payload_width_for(extremes);
}

namespace {

std::string indexed(std::string_view label, std::size_t i) {
  return std::string(label) + "." + std::to_string(i + 1);
}

std::optional<std::size_t> index_of(const std::string& label,
                                    std::string_view prefix) {
  if (!label.starts_with(prefix) || label.size() <= prefix.size() + 1 ||
      label[prefix.size()] != '.') {
    return std::nullopt;
  }
  return std::stoul(label.substr(prefix.size() + 1)) - 1;
}

ot::Config point_ot_config(const ProtocolConfig& cfg) {
  return ot::Config{cfg.ot_backend, cfg.ot_modulus_bits,
                    point_payload_bits(cfg)};
}

class AliceC final : public simnet::Party {
 public:
  AliceC(const Integer& a, const ProtocolConfig& cfg,
         simnet::Counters* counters)
      : payload_bits_(point_payload_bits(cfg)) {
    bitcore::BitString bits = bitcore::to_bits(a, cfg.d_bound);
    ot::Config config = point_ot_config(cfg);
    for (std::size_t i = 0; i < cfg.d_bound; ++i) {
      sessions_.emplace_back(
          config, ot::ReceiverInput{bits.lsb_first()[i]},
          prg::derive(cfg.alice_seed, indexed("ot-receiver", i)), counters);
    }
  }

  PartyId id() const override { return PartyId::Alice; }
  bool done() const override { return done_; }
  std::string state() const override {
    return done_ ? "done" : "transferring";
  }
  Relation relation() const { return relation_; }
  const Integer& encoded_input() const { return encoded_a_; }

  std::vector<Message> step(std::span<const Message> inbox) override {
    std::vector<Message> out;
    for (const auto& m : inbox) {
      if (auto i = index_of(m.label, "ot_offer")) {
        if (auto query = sessions_.at(*i).accept_offer(m.payload)) {
          out.push_back(to(PartyId::Bob, indexed("ot_query", *i),
                           std::move(*query)));
        }
      } else if (auto j = index_of(m.label, "ot_answer")) {
        sessions_.at(*j).finish(m.payload);
      } else if (m.label == "f_b") {
        encoded_b_ = bitcore::twos_complement_decode(
            bitcore::to_bits(integer_from_bytes(m.payload), payload_bits_));
      }
    }
    bool all = std::all_of(sessions_.begin(), sessions_.end(),
                           [](const auto& s) { return s.complete(); });
    if (!done_ && all && encoded_b_) {
      encoded_a_ = 0;
      for (const auto& s : sessions_) encoded_a_ += s.received();
      relation_ = compare(encoded_a_, *encoded_b_);
      out.push_back(to(PartyId::Bob, "result", {relation_code(relation_)}));
      done_ = true;
    }
    return out;
  }

 private:
  std::size_t payload_bits_;
  std::vector<ot::ReceiverSession> sessions_;
  std::optional<Integer> encoded_b_;
  Integer encoded_a_;
  bool done_ = false;
  Relation relation_ = Relation::Eq;
};

class BobC final : public simnet::Party {
 public:
  BobC(const Integer& b, const ProtocolConfig& cfg, simnet::Counters* counters)
      : f_(point_opf_for(b, cfg)), payload_bits_(point_payload_bits(cfg)) {
    ot::Config config = point_ot_config(cfg);
    transparent_ = config.backend == ot::Backend::Transparent;
    for (std::size_t i = 0; i < f_.d(); ++i) {
      sessions_.emplace_back(
          config, ot::SenderInput{f_.maps[i].zero_val, f_.maps[i].one_val},
          prg::derive(cfg.bob_seed, indexed("ot-sender", i)), counters);
    }
    answered_.assign(f_.d(), false);
  }

  PartyId id() const override { return PartyId::Bob; }
  bool done() const override { return stage_ == Stage::Done; }
  std::string state() const override {
    switch (stage_) {
      case Stage::Start:
        return "start";
      case Stage::Transferring:
        return "transferring";
      case Stage::AwaitResult:
        return "await_result";
      case Stage::Done:
        break;
    }
    return "done";
  }
  Relation relation() const { return relation_; }
  const opf::PointOPF& encoding() const { return f_; }

  std::vector<Message> step(std::span<const Message> inbox) override {
    std::vector<Message> out;
    if (stage_ == Stage::Start) {
      for (std::size_t i = 0; i < sessions_.size(); ++i) {
        out.push_back(
            to(PartyId::Alice, indexed("ot_offer", i), sessions_[i].offer()));
      }
      stage_ = Stage::Transferring;
      if (transparent_) send_encoded_anchor(out);
      return out;
    }
    for (const auto& m : inbox) {
      if (auto i = index_of(m.label, "ot_query")) {
        out.push_back(to(PartyId::Alice, indexed("ot_answer", *i),
                         sessions_.at(*i).answer(m.payload)));
        answered_.at(*i) = true;
      } else if (m.label == "result") {
        relation_ = relation_from_code(m.payload.at(0));
        stage_ = Stage::Done;
      }
    }
    if (stage_ == Stage::Transferring &&
        std::all_of(answered_.begin(), answered_.end(),
                    [](bool x) { return x; })) {
      send_encoded_anchor(out);
    }
    return out;
  }

 private:
  enum class Stage { Start, Transferring, AwaitResult, Done };

  void send_encoded_anchor(std::vector<Message>& out) {
    Integer fb = opf::eval_point(f_, f_.b);
    Integer word = bitcore::from_bits(
        bitcore::twos_complement_encode(fb, payload_bits_));
    out.push_back(to(PartyId::Alice, "f_b",
                     integer_to_bytes_fixed(word, (payload_bits_ + 7) / 8)));
    stage_ = Stage::AwaitResult;
  }

  opf::PointOPF f_;
  std::size_t payload_bits_;
  bool transparent_ = true;
  std::vector<ot::SenderSession> sessions_;
  std::vector<bool> answered_;
  Stage stage_ = Stage::Start;
  Relation relation_ = Relation::Eq;
};

void check_agreement(Relation alice, Relation bob) {
  if (alice != bob) {
    throw Error("parties disagree on the result: Alice " +
                std::string(relation_name(alice)) + ", Bob " +
                std::string(relation_name(bob)));
  }
}

}  // namespace

Bytes encode_shared_params(const opf::SharedParams& p) {
  Bytes out;
  for (const Integer* v : {&p.s, &p.k, &p.l}) {
    Bytes mag = integer_to_bytes(*v);
    if (mag.size() > 0xffff) throw Error("shared parameter too large");
    out.push_back(static_cast<std::uint8_t>(mag.size() >> 8));
    out.push_back(static_cast<std::uint8_t>(mag.size() & 0xff));
    out.insert(out.end(), mag.begin(), mag.end());
  }
  out.push_back(static_cast<std::uint8_t>(p.u));
  out.push_back(static_cast<std::uint8_t>(p.complement_width >> 8));
  out.push_back(static_cast<std::uint8_t>(p.complement_width & 0xff));
  return out;
}

opf::SharedParams decode_shared_params(const Bytes& bytes) {
  std::size_t pos = 0;
  auto need = [&](std::size_t n) {
    if (pos + n > bytes.size()) throw Error("truncated parameter message");
  };
  opf::SharedParams p;
  for (Integer* v : {&p.s, &p.k, &p.l}) {
    need(2);
    std::size_t len = std::size_t{bytes[pos]} << 8 | bytes[pos + 1];
    pos += 2;
    need(len);
    *v = integer_from_bytes(Bytes(bytes.begin() + pos, bytes.begin() + pos + len));
    pos += len;
  }
  need(3);
  p.u = bytes[pos];
  p.complement_width = std::size_t{bytes[pos + 1]} << 8 | bytes[pos + 2];
  pos += 3;
  if (pos != bytes.size()) throw Error("trailing bytes in parameter message");
  opf::check_shared(p);
  return p;
}

opf::SharedParams shared_params_for(const ProtocolConfig& cfg,
                                    bool extension) {
  prg::Keystream rng(prg::derive(cfg.alice_seed, "protocol-b").bytes());
  opf::SharedParams p;
  if (cfg.shared) {
    p = *cfg.shared;
  } else if (extension) {
    std::size_t n = cfg.extension_bits.value_or(cfg.complement_width);
    Integer base = n < 2 ? Integer(2) : Integer(n);
    p.k = base + rng.uniform_below(base);
    Integer need = (Integer(1) << n);
    Integer l_min = (need + p.k - 1) / p.k;
    p.l = l_min + rng.uniform_below(l_min);
    p.s = 1 + rng.uniform_below(base);
  } else {
    p.s = 1 + rng.uniform_below(Integer(1) << 16);
    p.k = 2 + rng.uniform_below(Integer(1) << 8);
    p.l = 1 + rng.uniform_below(Integer(1) << 16);
  }
  p.complement_width = cfg.complement_width;
  if (cfg.fixed_u) {
    p.u = *cfg.fixed_u;
  } else {
    Bytes coin = rng.take(1);
    p.u = coin[0] & 1;
  }
  opf::check_shared(p);
  return p;
}

opf::PointOPF point_opf_for(const Integer& b, const ProtocolConfig& cfg) {
  bitcore::BitString bits = bitcore::to_bits(b, cfg.d_bound);
  if (cfg.injected_maps) {
    return opf::construct_at_point_injected(bits, cfg.point_l, cfg.range_lo,
                                            cfg.range_hi, *cfg.injected_maps);
  }
  return opf::construct_at_point(bits, cfg.point_l, cfg.range_lo, cfg.range_hi,
                                 prg::derive(cfg.bob_seed, "point-opf"));
}

Run run_protocol_a(const Integer& a, const Integer& b,
                   const ProtocolConfig& cfg) {
  require_non_negative(a, b);
  if (cfg.width_w < 2) throw Error("word width must be >= 2");
  Integer limit = Integer(1) << (cfg.width_w - 1);
  if (a >= limit || b >= limit) {
    throw Error("inputs must be below 2^(w-1) = " + limit.get_str());
  }
  Run run;
  run.protocol = Protocol::A;
  run.parties = {PartyId::Alice, PartyId::Bob};
  simnet::Counters counters;
  auto scheme = he::make_scheme(cfg.he_backend, &counters);
  he::SchemeKeys keys =
      scheme->keygen(cfg.width_w, prg::derive(cfg.bob_seed, "he-keys"));
  AliceA alice(a, cfg.width_w, *scheme, keys.public_part, cfg.alice_seed);
  BobA bob(b, *scheme, keys, cfg.bob_seed);
  simnet::Party* parties[] = {&alice, &bob};
  run.transcript = simnet::run(parties);
  run.transcript.counters = counters;
  check_agreement(alice.relation(), bob.relation());
  run.outcome = {alice.relation()};
  return run;
}

namespace {

Run run_shared(Protocol protocol, const Integer& a, const Integer& b,
               const ProtocolConfig& cfg) {
  require_non_negative(a, b);
  opf::SharedParams params =
      shared_params_for(cfg, protocol == Protocol::BExt);
  Run run;
  run.protocol = protocol;
  run.parties = {PartyId::Alice, PartyId::Bob, PartyId::Ursula};
  shared_input(b, params);  // Bob's range check, reported before running
  AliceB alice(a, params);
  BobB bob(b);
  UrsulaB ursula;
  simnet::Party* parties[] = {&alice, &bob, &ursula};
  run.transcript = simnet::run(parties);
  check_agreement(alice.relation(), bob.relation());
  run.outcome = {alice.relation()};
  return run;
}

}  // namespace

Run run_protocol_b(const Integer& a, const Integer& b,
                   const ProtocolConfig& cfg) {
  return run_shared(Protocol::B, a, b, cfg);
}

Run run_protocol_b_ext(const Integer& a, const Integer& b,
                       const ProtocolConfig& cfg) {
  return run_shared(Protocol::BExt, a, b, cfg);
}

Run run_protocol_c(const Integer& a, const Integer& b,
                   const ProtocolConfig& cfg) {
  require_non_negative(a, b);
  if (cfg.d_bound < 1) throw Error("d must be >= 1");
  if (bit_length(a) > cfg.d_bound || bit_length(b) > cfg.d_bound) {
    throw Error("inputs must fit in d = " + std::to_string(cfg.d_bound) +
                " bits");
  }
  Run run;
  run.protocol = Protocol::C;
  run.parties = {PartyId::Alice, PartyId::Bob};
  simnet::Counters counters;
  AliceC alice(a, cfg, &counters);
  BobC bob(b, cfg, &counters);
  simnet::Party* parties[] = {&alice, &bob};
  run.transcript = simnet::run(parties);
  run.transcript.counters = counters;
  check_agreement(alice.relation(), bob.relation());
  run.outcome = {alice.relation()};
  return run;
}

Run run_protocol(Protocol p, const Integer& a, const Integer& b,
                 const ProtocolConfig& cfg) {
  switch (p) {
    case Protocol::A:
      return run_protocol_a(a, b, cfg);
    case Protocol::B:
      return run_protocol_b(a, b, cfg);
    case Protocol::BExt:
      return run_protocol_b_ext(a, b, cfg);
    case Protocol::C:
      return run_protocol_c(a, b, cfg);
  }
  throw Error("unknown protocol");
}

nlohmann::json run_to_json(const Run& run) {
  nlohmann::json doc = simnet::transcript_to_json(run.transcript);
  doc["protocol"] = protocol_name(run.protocol);
  nlohmann::json parties = nlohmann::json::array();
  for (auto p : run.parties) parties.push_back(simnet::party_name(p));
  doc["parties"] = std::move(parties);
  auto gt = run.outcome.predicate_gt();
  doc["outcome"] = {
      {"relation", relation_name(run.outcome.relation)},
      {"predicate_ge", run.outcome.predicate_ge()},
      {"predicate_gt", gt ? nlohmann::json(*gt) : nlohmann::json()}};
  return doc;
}

}  // namespace securecmp::protocols
