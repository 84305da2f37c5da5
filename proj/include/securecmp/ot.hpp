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
#include <span>
#include <string_view>

#include "securecmp/common.hpp"
#include "securecmp/prg.hpp"
#include "securecmp/simnet.hpp"

// 1-out-of-2 oblivious transfer of signed integers encoded as fixed-width
// two's complement words.
namespace securecmp::ot {

enum class Backend { Transparent, CommutativeRsa };

Backend parse_backend(std::string_view name);
std::string_view backend_name(Backend backend);

struct Config {
  Backend backend = Backend::Transparent;
  std::size_t modulus_bits = 512;  // commutative backend group size
  std::size_t payload_bits = 64;   // two's complement word width
};

struct SenderInput {
  Integer m0;
  Integer m1;
};

struct ReceiverInput {
  int choice = 0;
};

// Smallest two's complement width holding every value.
std::size_t payload_width_for(std::span<const Integer> values);

// Public prime modulus of the commutative exponentiation cipher for a given
// size. Deterministic and cached per size.
const Integer& group_prime(std::size_t bits);

// Sender side of one transfer. Backend flow:
//   transparent:     offer = (m0, m1); no further messages.
//   commutative-rsa: offer = (E_S(k0), E_S(k1), m0 ^ H(k0), m1 ^ H(k1));
//                    receiver returns (E_R(E_S(k_c)), E_R(E_S(k_1-c)));
//                    answer = D_S(first) = E_R(k_c).
// E_X(v) = v^e_X mod p over a shared prime, so encryptions commute.
class SenderSession {
 public:
  SenderSession(const Config& config, SenderInput input, const prg::Seed& seed,
                simnet::Counters* counters = nullptr);

  Bytes offer();
  Bytes answer(const Bytes& query);

 private:
  Config config_;
  SenderInput input_;
  prg::Keystream rng_;
  simnet::Counters* counters_;
  Integer exp_;
  Integer inv_exp_;
};

class ReceiverSession {
 public:
  ReceiverSession(const Config& config, ReceiverInput input,
                  const prg::Seed& seed, simnet::Counters* counters = nullptr);

  // Returns the query to send back, or nullopt if the transfer completed
  // with the offer alone.
  std::optional<Bytes> accept_offer(const Bytes& offer);
  void finish(const Bytes& answer);

  bool complete() const { return received_.has_value(); }
  const Integer& received() const;

 private:
  Config config_;
  ReceiverInput input_;
  prg::Keystream rng_;
  simnet::Counters* counters_;
  Integer inv_exp_;
  Bytes masked_choice_;
  std::optional<Integer> received_;
};

struct Result {
  Integer received;
  simnet::Transcript transcript;
};

// One standalone transfer with Bob as sender and Alice as receiver.
Result execute(const SenderInput& sender, const ReceiverInput& receiver,
               const Config& config, const prg::Seed& seed);

}  // namespace securecmp::ot
