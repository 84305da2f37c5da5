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

#include "securecmp/simnet.hpp"

#include <algorithm>
#include <sstream>

namespace securecmp::simnet {

std::string_view party_name(PartyId id) {
  switch (id) {
    case PartyId::Alice:
      return "Alice";
    case PartyId::Bob:
      return "Bob";
    case PartyId::Ursula:
      return "Ursula";
  }
  return "?";
}

PartyId parse_party(std::string_view name) {
  if (name == "Alice") return PartyId::Alice;
  if (name == "Bob") return PartyId::Bob;
  if (name == "Ursula") return PartyId::Ursula;
  throw Error("unknown party: " + std::string(name));
}

void Counters::bump(std::string_view tag, std::uint64_t n) {
  auto it = counts_.find(tag);
  if (it == counts_.end()) {
    counts_.emplace(std::string(tag), n);
  } else {
    it->second += n;
  }
}

std::uint64_t Counters::get(std::string_view tag) const {
  auto it = counts_.find(tag);
  return it == counts_.end() ? 0 : it->second;
}

void Counters::merge(const Counters& other) {
  for (const auto& [tag, n] : other.counts_) bump(tag, n);
}

std::size_t Transcript::bytes_total() const {
  std::size_t total = 0;
  for (const auto& m : messages) total += m.payload.size();
  return total;
}

std::size_t Transcript::rounds() const {
  std::size_t r = 0;
  for (const auto& m : messages) r = std::max(r, m.round);
  return r;
}

Transcript run(std::span<Party* const> parties, std::optional<Message> initial) {
  std::vector<Party*> order(parties.begin(), parties.end());
  std::stable_sort(order.begin(), order.end(), [](Party* x, Party* y) {
    return x->id() < y->id();
  });
  for (std::size_t i = 1; i < order.size(); ++i) {
    if (order[i]->id() == order[i - 1]->id()) {
      throw Error("duplicate party " + std::string(party_name(order[i]->id())));
    }
  }
  auto participates = [&](PartyId id) {
    return std::any_of(order.begin(), order.end(),
                       [&](Party* p) { return p->id() == id; });
  };
  auto all_done = [&] {
    return std::all_of(order.begin(), order.end(),
                       [](Party* p) { return p->done(); });
  };

  Transcript transcript;
  std::vector<Message> in_flight;
  if (initial) {
    if (!participates(initial->to)) {
      throw Error("initial message addressed to a party not in the run");
    }
    initial->round = 0;
    transcript.messages.push_back(*initial);
    in_flight.push_back(*initial);
  }

  std::size_t round = 0;
  while (!(in_flight.empty() && all_done())) {
    ++round;
    std::vector<Message> delivered = std::move(in_flight);
    in_flight.clear();
    bool progressed = false;
    for (Party* party : order) {
      std::vector<Message> inbox;
      for (const auto& m : delivered) {
        if (m.to == party->id()) inbox.push_back(m);
      }
      if (party->done() && inbox.empty()) continue;
      std::vector<Message> out = party->step(inbox);
      for (auto& m : out) {
        m.from = party->id();
        m.round = round;
        if (m.payload.empty()) {
          throw Error("empty payload in message '" + m.label + "'");
        }
        if (!participates(m.to)) {
          throw Error("message '" + m.label + "' addressed to " +
                      std::string(party_name(m.to)) + ", not in the run");
        }
        transcript.messages.push_back(m);
        in_flight.push_back(std::move(m));
        progressed = true;
      }
    }
    if (!progressed && in_flight.empty() && !all_done()) {
      std::ostringstream states;
      states << "deadlock in round " << round << ":";
      for (Party* p : order) {
        states << ' ' << party_name(p->id()) << '=' << p->state()
               << (p->done() ? "(done)" : "");
      }
      throw DeadlockError(states.str());
    }
  }
  return transcript;
}

std::vector<Message> view(const Transcript& t, PartyId p) {
  std::vector<Message> out;
  for (const auto& m : t.messages) {
    if (m.from == p || m.to == p) out.push_back(m);
  }
  return out;
}

nlohmann::json message_to_json(const Message& m) {
  return {{"from", party_name(m.from)},
          {"to", party_name(m.to)},
          {"label", m.label},
          {"bytes", m.payload.size()},
          {"round", m.round},
          {"payload_hex", to_hex(m.payload)}};
}

nlohmann::json transcript_to_json(const Transcript& t) {
  nlohmann::json messages = nlohmann::json::array();
  for (const auto& m : t.messages) messages.push_back(message_to_json(m));
  nlohmann::json counters = nlohmann::json::object();
  for (const auto& [tag, n] : t.counters.all()) counters[tag] = n;
  return {{"messages", std::move(messages)},
          {"counters", std::move(counters)},
          {"bytes_total", t.bytes_total()},
          {"rounds", t.rounds()}};
}

}  // namespace securecmp::simnet
