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
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "nlohmann/json.hpp"  // IWYU pragma: keep
#include "securecmp/common.hpp"

namespace securecmp::simnet {

// Scheduling order is the enum order.
enum class PartyId : std::uint8_t { Alice = 0, Bob = 1, Ursula = 2 };

std::string_view party_name(PartyId id);
PartyId parse_party(std::string_view name);

struct Message {
  PartyId from = PartyId::Alice;
  PartyId to = PartyId::Bob;
  std::string label;
  Bytes payload;
  std::size_t round = 0;
};

// Operation tallies keyed by tag: enc, dec, hom_sub, hom_xor, ot_enc, ot_dec.
class Counters {
 public:
  void bump(std::string_view tag, std::uint64_t n = 1);
  std::uint64_t get(std::string_view tag) const;
  void merge(const Counters& other);
  const std::map<std::string, std::uint64_t, std::less<>>& all() const {
    return counts_;
  }

 private:
  std::map<std::string, std::uint64_t, std::less<>> counts_;
};

struct Transcript {
  std::vector<Message> messages;
  Counters counters;

  std::size_t bytes_total() const;
  std::size_t rounds() const;
};

// A protocol participant. The harness calls step() once per round with the
// messages delivered to this party in that round (possibly none) and
// stamps sender and round on whatever it returns.
class Party {
 public:
  virtual ~Party() = default;

  virtual PartyId id() const = 0;
  virtual std::vector<Message> step(std::span<const Message> inbox) = 0;
  virtual bool done() const = 0;
  virtual std::string state() const = 0;
};

class DeadlockError : public Error {
 public:
  using Error::Error;
};

// Runs the parties in synchronous rounds. Messages emitted in round r are
// delivered at the start of round r + 1; within a round parties step in
// PartyId order. Returns when every party is done and nothing is in
// flight. Throws DeadlockError if a round makes no progress while some
// party is still running.
Transcript run(std::span<Party* const> parties,
               std::optional<Message> initial = std::nullopt);

// Messages p sent or received, in transcript order.
std::vector<Message> view(const Transcript& t, PartyId p);

nlohmann::json message_to_json(const Message& m);

// {messages, counters, bytes_total, rounds}; callers add protocol, parties
// and outcome.
nlohmann::json transcript_to_json(const Transcript& t);

}  // namespace securecmp::simnet
