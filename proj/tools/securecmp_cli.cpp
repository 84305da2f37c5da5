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

// securecmp command-line front end.
//
// Exit codes: 0 GT (or GE) / PASS, 1 LT / FAIL, 2 EQ, 3 usage or
// precondition error.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "nlohmann/json.hpp"
#include "securecmp/bench.hpp"
#include "securecmp/fixtures.hpp"
#include "securecmp/protocols.hpp"

namespace {

using namespace securecmp;
using nlohmann::json;
using protocols::Protocol;
using protocols::ProtocolConfig;
using protocols::Relation;

constexpr int kExitError = 3;

struct Flags {
  std::string protocol = "b";
  std::string a, b;
  std::size_t width = 8;
  std::optional<std::string> s, k, l;
  std::string u = "coin";
  std::size_t complement_width = 64;
  std::optional<std::size_t> extension_bits;
  std::optional<std::size_t> d;
  std::optional<std::string> l_point;
  std::optional<std::string> range;
  std::optional<std::string> seed;
  std::string he_backend = "transparent";
  std::string ot_backend = "transparent";
  std::size_t ot_modulus_bits = 512;
  std::optional<std::string> fixture;
  std::optional<std::string> json_path;
  std::size_t max_bits = 8;
  std::size_t seeds = 5;
  std::string sizes = "8,16,32,64";
};

void add_protocol_flags(CLI::App* cmd, Flags& f) {
  cmd->add_option("--protocol", f.protocol, "a | b | b-ext | c")
      ->check(CLI::IsMember({"a", "b", "b-ext", "c"}));
  cmd->add_option("--width", f.width, "protocol A word width w");
  cmd->add_option("--s", f.s, "shared parameter s");
  cmd->add_option("--k", f.k, "shared parameter k");
  cmd->add_option("--l", f.l, "shared parameter l");
  cmd->add_option("--u", f.u, "coin | fixed | 0 | 1");
  cmd->add_option("--complement-width", f.complement_width,
                  "complement width W for u = 0");
  cmd->add_option("--extension-bits", f.extension_bits,
                  "n for the gap-hiding parameters (b-ext)");
  cmd->add_option("--d", f.d, "protocol C bit-length bound");
  cmd->add_option("--l-point", f.l_point, "protocol C interval width l");
  cmd->add_option("--range", f.range, "protocol C sampling range lo:hi");
  cmd->add_option("--seed", f.seed, "hex seed");
  cmd->add_option("--he-backend", f.he_backend)
      ->check(CLI::IsMember({"transparent"}));
  cmd->add_option("--ot-backend", f.ot_backend)
      ->check(CLI::IsMember({"transparent", "commutative-rsa"}));
  cmd->add_option("--ot-modulus-bits", f.ot_modulus_bits);
  cmd->add_option("--fixture", f.fixture, "published instance for protocol C")
      ->check(CLI::IsMember({fixtures::kPointFixtureName}));
  cmd->add_option("--json", f.json_path, "write a JSON report to PATH");
}

Integer parse_integer(const std::string& text, const char* what) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw Error(std::string("invalid ") + what + ": '" + text + "'");
  }
  return v;
}

ProtocolConfig build_config(const Flags& f) {
  ProtocolConfig cfg;
  cfg.width_w = f.width;
  cfg.he_backend = f.he_backend;
  if (f.s || f.k || f.l) {
    if (!(f.s && f.k && f.l)) throw Error("--s, --k and --l go together");
    cfg.shared = opf::SharedParams{parse_integer(*f.s, "--s"),
                                   parse_integer(*f.k, "--k"),
                                   parse_integer(*f.l, "--l")};
  }
  if (f.u == "0") {
    cfg.fixed_u = 0;
  } else if (f.u == "1" || f.u == "fixed") {
    cfg.fixed_u = 1;
  } else if (f.u != "coin") {
    throw Error("--u must be coin, fixed, 0 or 1");
  }
  cfg.complement_width = f.complement_width;
  cfg.extension_bits = f.extension_bits;
  cfg.ot_backend = ot::parse_backend(f.ot_backend);
  cfg.ot_modulus_bits = f.ot_modulus_bits;
  if (f.seed) cfg.set_seed(prg::Seed::from_hex(*f.seed));

  if (f.fixture) {
    opf::PointOPF inst = fixtures::point_table_instance();
    cfg.injected_maps = inst.maps;
    cfg.point_l = inst.l;
    cfg.range_lo = inst.range_lo;
    cfg.range_hi = inst.range_hi;
    cfg.d_bound = inst.d();
  }
  if (f.d) cfg.d_bound = *f.d;
  if (f.l_point) cfg.point_l = parse_integer(*f.l_point, "--l-point");
  if (f.range) {
    auto colon = f.range->find(':');
    if (colon == std::string::npos) throw Error("--range must be lo:hi");
    cfg.range_lo = parse_integer(f.range->substr(0, colon), "range lo");
    cfg.range_hi = parse_integer(f.range->substr(colon + 1), "range hi");
  }
  return cfg;
}

void write_json(const std::optional<std::string>& path, const json& doc) {
  if (!path) return;
  std::ofstream out(*path);
  if (!out) throw Error("cannot write " + *path);
  out << doc.dump(2) << "\n";
}

int exit_code(Relation r) {
  switch (r) {
    case Relation::Gt:
    case Relation::GtOrEq:
      return 0;
    case Relation::Lt:
      return 1;
    case Relation::Eq:
      return 2;
  }
  return kExitError;
}

int cmd_run(const Flags& f) {
  if (f.a.empty() || f.b.empty()) throw Error("run needs --a and --b");
  Protocol p = protocols::parse_protocol(f.protocol);
  ProtocolConfig cfg = build_config(f);
  auto run = protocols::run_protocol(p, parse_integer(f.a, "--a"),
                                     parse_integer(f.b, "--b"), cfg);
  const auto& t = run.transcript;
  std::cout << protocols::relation_name(run.outcome.relation) << "\n";
  std::cout << "messages " << t.messages.size() << ", bytes "
            << t.bytes_total() << ", rounds " << t.rounds() << "\n";
  std::string counters;
  for (const auto& [tag, n] : t.counters.all()) {
    counters += (counters.empty() ? "" : " ") + tag + "=" + std::to_string(n);
  }
  if (!counters.empty()) std::cout << "counters " << counters << "\n";
  write_json(f.json_path, protocols::run_to_json(run));
  return exit_code(run.outcome.relation);
}

int cmd_sweep(const Flags& f) {
  Protocol p = protocols::parse_protocol(f.protocol);
  ProtocolConfig cfg = build_config(f);
  auto r = bench::sweep(p, f.max_bits, f.seeds, cfg);
  json doc = {{"protocol", protocols::protocol_name(p)},
              {"max_bits", r.max_bits},
              {"pairs", r.pairs},
              {"runs", r.runs},
              {"note", r.note},
              {"passed", r.passed()}};
  if (r.passed()) {
    std::cout << "PASS " << protocols::protocol_name(p) << ": " << r.pairs
              << " pairs, " << r.runs << " runs (" << r.note << ")\n";
  } else {
    const auto& m = *r.first_mismatch;
    std::cout << "FAIL " << protocols::protocol_name(p) << ": a=" << m.a
              << " b=" << m.b << " got " << m.got << " expected "
              << m.expected << " (" << m.context << ")\n";
    doc["first_mismatch"] = {{"a", m.a.get_str()}, {"b", m.b.get_str()},
                             {"got", m.got},       {"expected", m.expected},
                             {"context", m.context}};
  }
  write_json(f.json_path, doc);
  return r.passed() ? 0 : 1;
}

int cmd_tables(const Flags& f) {
  auto r = fixtures::reproduce_tables();
  for (const auto& line : r.lines) std::cout << line << "\n";
  json diffs = json::array();
  for (const auto& d : r.diffs) {
    std::cout << "MISMATCH " << d.table << " " << d.cell << ": expected "
              << d.expected << ", got " << d.actual << "\n";
    diffs.push_back({{"table", d.table}, {"cell", d.cell},
                     {"expected", d.expected}, {"actual", d.actual}});
  }
  std::cout << (r.diffs.empty() ? "all tables match" : "tables differ") << "\n";
  write_json(f.json_path, {{"lines", r.lines}, {"diffs", diffs}});
  return r.diffs.empty() ? 0 : 1;
}

std::vector<std::size_t> parse_sizes(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, ',')) {
    std::size_t n = parse_integer(item, "--sizes").get_ui();
    if (!out.empty() && n <= out.back()) throw Error("--sizes must ascend");
    out.push_back(n);
  }
  if (out.size() < 2) throw Error("--sizes needs at least two values");
  return out;
}

int cmd_bench(const Flags& f) {
  Protocol p = protocols::parse_protocol(f.protocol);
  ProtocolConfig cfg = build_config(f);
  auto sizes = parse_sizes(f.sizes);
  auto r = bench::growth_report(p, sizes, cfg);
  std::printf("%6s %10s %9s %7s %9s %10s\n", "n", "bytes", "messages",
              "rounds", "payload", "residual");
  json points = json::array();
  for (std::size_t i = 0; i < r.points.size(); ++i) {
    const auto& pt = r.points[i];
    std::printf("%6zu %10zu %9zu %7zu %9zu %10.2f\n", pt.n, pt.bytes_total,
                pt.messages, pt.rounds, pt.payload_bits, r.residuals[i]);
    points.push_back({{"n", pt.n},
                      {"bytes_total", pt.bytes_total},
                      {"messages", pt.messages},
                      {"rounds", pt.rounds},
                      {"payload_bits", pt.payload_bits},
                      {"residual", r.residuals[i]}});
  }
  std::printf("fit bytes = %.4f * (%s) + %.2f, R2 = %.5f\n", r.fit.slope,
              r.model.c_str(), r.fit.intercept, r.fit.r2);
  write_json(f.json_path,
             {{"protocol", protocols::protocol_name(p)},
              {"model", r.model},
              {"fit",
               {{"slope", r.fit.slope},
                {"intercept", r.fit.intercept},
                {"r2", r.fit.r2}}},
              {"points", points}});
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Secure comparison protocols over a simulated network"};
  app.require_subcommand(1, 1);
  Flags f;

  auto* run = app.add_subcommand("run", "run one comparison");
  add_protocol_flags(run, f);
  run->add_option("--a", f.a, "Alice's input (decimal)");
  run->add_option("--b", f.b, "Bob's input (decimal)");

  auto* sweep = app.add_subcommand("sweep", "exhaustive check against the oracle");
  add_protocol_flags(sweep, f);
  sweep->add_option("--max-bits", f.max_bits, "inputs in [0, 2^max_bits)");
  sweep->add_option("--seeds", f.seeds, "protocol C seeds");

  auto* tables = app.add_subcommand("tables", "reproduce the published tables");
  tables->add_option("--json", f.json_path, "write a JSON report to PATH");

  auto* bench = app.add_subcommand("bench", "communication growth");
  add_protocol_flags(bench, f);
  bench->add_option("--sizes", f.sizes, "comma-separated ascending sizes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (*run) return cmd_run(f);
    if (*sweep) return cmd_sweep(f);
    if (*tables) return cmd_tables(f);
    return cmd_bench(f);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
}
