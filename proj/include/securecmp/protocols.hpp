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
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"  // IWYU pragma: keep
#include "securecmp/common.hpp"
#include "securecmp/opf.hpp"
#include "securecmp/ot.hpp"
#include "securecmp/prg.hpp"
#include "securecmp/simnet.hpp"

namespace securecmp::protocols {

// GtOrEq is what the homomorphic protocol can tell apart from Lt: it learns
// the sign of a - b, not whether the difference is zero.
enum class Relation { Lt, Eq, Gt, GtOrEq };

std::string_view relation_name(Relation r);
Relation reversed(Relation r);
std::uint8_t relation_code(Relation r);
Relation relation_from_code(std::uint8_t code);

struct Outcome {
  Relation relation = Relation::Eq;

  bool predicate_ge() const { return relation != Relation::Lt; }
  // Empty when the protocol cannot separate equal from greater.
  std::optional<bool> predicate_gt() const;

  friend bool operator==(const Outcome&, const Outcome&) = default;
};

Outcome oracle(const Integer& a, const Integer& b);

enum class Protocol { A, B, BExt, C };

Protocol parse_protocol(std::string_view name);
std::string_view protocol_name(Protocol p);

struct ProtocolConfig {
  // Homomorphic protocol.
  std::size_t width_w = 8;
  std::string he_backend = "transparent";

  // Third-party protocol. Without explicit params Alice draws them from her
  // seed; extension_bits sets n for the gap-hiding parameter choice.
  std::optional<opf::SharedParams> shared;
  std::optional<int> fixed_u;  // coin flip when empty
  std::size_t complement_width = 64;
  std::optional<std::size_t> extension_bits;

  // Anchor-point protocol.
  Integer point_l = 16;
  Integer range_lo = 0;
  Integer range_hi = 255;
  std::size_t d_bound = 8;
  std::optional<std::vector<opf::PerBitMap>> injected_maps;
  ot::Backend ot_backend = ot::Backend::Transparent;
  std::size_t ot_modulus_bits = 512;

  prg::Seed alice_seed = prg::Seed::from_index(1);
  prg::Seed bob_seed = prg::Seed::from_index(2);

  // One seed for both parties, split by role.
  void set_seed(const prg::Seed& seed);
};

struct Run {
  Protocol protocol = Protocol::A;
  Outcome outcome;
  simnet::Transcript transcript;
  std::vector<simnet::PartyId> parties;
};

Run run_protocol_a(const Integer& a, const Integer& b,
                   const ProtocolConfig& cfg);
Run run_protocol_b(const Integer& a, const Integer& b,
                   const ProtocolConfig& cfg);
// Protocol B with the gap-hiding parameter choice: k = Theta(n),
// k * l >= 2^n for n = extension_bits (defaults to complement_width).
Run run_protocol_b_ext(const Integer& a, const Integer& b,
                       const ProtocolConfig& cfg);
Run run_protocol_c(const Integer& a, const Integer& b,
                   const ProtocolConfig& cfg);

Run run_protocol(Protocol p, const Integer& a, const Integer& b,
                 const ProtocolConfig& cfg);

// The parameters Alice uses in protocol B for this config.
opf::SharedParams shared_params_for(const ProtocolConfig& cfg, bool extension);

// Anchor-point encoding Bob builds for b under this config.
opf::PointOPF point_opf_for(const Integer& b, const ProtocolConfig& cfg);

// OT word width of protocol C, a function of the public parameters (d, l,
// sampling range) only, so Alice knows it before any transfer.
std::size_t point_payload_bits(const ProtocolConfig& cfg);

// Byte encoding of the protocol B parameter message.
Bytes encode_shared_params(const opf::SharedParams& p);
opf::SharedParams decode_shared_params(const Bytes& bytes);

nlohmann::json run_to_json(const Run& run);

}  // namespace securecmp::protocols
