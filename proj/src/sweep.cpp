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

#include <string>

#include "securecmp/bench.hpp"

namespace securecmp::bench {

using protocols::Protocol;
using protocols::ProtocolConfig;
using protocols::Relation;

namespace {

std::string ge_name(bool ge) { return ge ? "a>=b" : "a<b"; }

}  // namespace

SweepReport sweep(Protocol protocol, std::size_t max_bits, std::size_t seeds,
                  const ProtocolConfig& base) {
  if (max_bits < 1 || max_bits > 12) {
    throw Error("exhaustive sweeps support 1..12 bits, got " +
                std::to_string(max_bits));
  }
  SweepReport report;
  report.protocol = protocol;
  report.max_bits = max_bits;
  const unsigned long limit = 1ul << max_bits;
  report.pairs = limit * limit;

  auto each_pair = [&](const ProtocolConfig& cfg, const std::string& context,
                       auto&& check) {
    for (unsigned long a = 0; a < limit && report.passed(); ++a) {
      for (unsigned long b = 0; b < limit; ++b) {
        auto run = protocols::run_protocol(protocol, a, b, cfg);
        ++report.runs;
        if (auto mismatch = check(Integer(a), Integer(b), run.outcome)) {
          mismatch->context = context;
          report.first_mismatch = std::move(mismatch);
          return;
        }
      }
    }
  };

  auto relation_check = [](const Integer& a, const Integer& b,
                           const protocols::Outcome& got)
      -> std::optional<Mismatch> {
    auto expected = protocols::oracle(a, b);
    if (got == expected) return std::nullopt;
    return Mismatch{a, b, std::string(relation_name(got.relation)),
                    std::string(relation_name(expected.relation)), ""};
  };

  switch (protocol) {
    case Protocol::A: {
      ProtocolConfig cfg = base;
      cfg.width_w = max_bits + 1;
      report.note = "predicate_ge semantics: the sign of a-b separates a>=b "
                    "from a<b; equality is not distinguished from a>b";
      each_pair(cfg, "w=" + std::to_string(cfg.width_w),
                [](const Integer& a, const Integer& b,
                   const protocols::Outcome& got) -> std::optional<Mismatch> {
                  bool expected = a >= b;
                  if (got.predicate_ge() == expected) return std::nullopt;
                  return Mismatch{a, b, ge_name(got.predicate_ge()),
                                  ge_name(expected), ""};
                });
      break;
    }
    case Protocol::B:
    case Protocol::BExt: {
      for (int u : {1, 0}) {
        ProtocolConfig cfg = base;
        cfg.complement_width = max_bits;
        cfg.extension_bits = max_bits;
        cfg.fixed_u = u;
        if (protocol == Protocol::B && !cfg.shared) {
          cfg.shared = opf::SharedParams{3, 2, 5};
        }
        each_pair(cfg, "u=" + std::to_string(u), relation_check);
        if (!report.passed()) break;
      }
      report.note = "both coin values";
      break;
    }
    case Protocol::C: {
      for (std::size_t s = 0; s < seeds && report.passed(); ++s) {
        ProtocolConfig cfg = base;
        cfg.d_bound = max_bits;
        cfg.injected_maps.reset();
        cfg.set_seed(prg::Seed::from_index(s));
        each_pair(cfg,
                  "seed=" + std::to_string(s) + " backend=" +
                      std::string(ot::backend_name(cfg.ot_backend)),
                  relation_check);
      }
      report.note = std::to_string(seeds) + " seeds, " +
                    std::string(ot::backend_name(base.ot_backend)) + " OT";
      break;
    }
  }
  return report;
}

}  // namespace securecmp::bench
