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

// Python bindings. Structured results cross the boundary as JSON text and
// are decoded by the package wrapper; integers travel as decimal strings so
// arbitrary sizes survive.

#include <string>
#include <vector>

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "nlohmann/json.hpp"
#include "securecmp/bench.hpp"
#include "securecmp/fixtures.hpp"
#include "securecmp/opf.hpp"
#include "securecmp/protocols.hpp"

namespace py = pybind11;
using nlohmann::json;

namespace securecmp {
namespace {

Integer integer_of(const json& v) {
  return v.is_string() ? Integer(v.get<std::string>())
                       : Integer(v.get<long>());
}

protocols::ProtocolConfig config_from_json(const std::string& text) {
  json j = json::parse(text);
  protocols::ProtocolConfig cfg;
  if (j.contains("seed")) cfg.set_seed(prg::Seed::from_hex(j["seed"].get<std::string>()));
  if (j.contains("width")) cfg.width_w = j["width"];
  if (j.contains("he_backend")) cfg.he_backend = j["he_backend"];
  if (j.contains("shared")) {
    const auto& s = j["shared"];
    cfg.shared = opf::SharedParams{integer_of(s[0]), integer_of(s[1]),
                                   integer_of(s[2])};
  }
  if (j.contains("u")) cfg.fixed_u = j["u"].get<int>();
  if (j.contains("complement_width")) cfg.complement_width = j["complement_width"];
  if (j.contains("extension_bits")) cfg.extension_bits = j["extension_bits"].get<std::size_t>();
  if (j.contains("d")) cfg.d_bound = j["d"];
  if (j.contains("l_point")) cfg.point_l = integer_of(j["l_point"]);
  if (j.contains("range")) {
    cfg.range_lo = integer_of(j["range"][0]);
    cfg.range_hi = integer_of(j["range"][1]);
  }
  if (j.contains("ot_backend")) {
    cfg.ot_backend = ot::parse_backend(j["ot_backend"].get<std::string>());
  }
  if (j.contains("ot_modulus_bits")) cfg.ot_modulus_bits = j["ot_modulus_bits"];
  if (j.value("fixture", false)) {
    opf::PointOPF inst = fixtures::point_table_instance();
    cfg.injected_maps = inst.maps;
    cfg.point_l = inst.l;
    cfg.range_lo = inst.range_lo;
    cfg.range_hi = inst.range_hi;
    if (!j.contains("d")) cfg.d_bound = inst.d();
  }
  return cfg;
}

std::string run(const std::string& protocol, const std::string& a,
                const std::string& b, const std::string& config) {
  auto r = protocols::run_protocol(protocols::parse_protocol(protocol),
                                   Integer(a), Integer(b),
                                   config_from_json(config));
  return protocols::run_to_json(r).dump();
}

std::string sweep(const std::string& protocol, std::size_t max_bits,
                  std::size_t seeds, const std::string& config) {
  auto r = bench::sweep(protocols::parse_protocol(protocol), max_bits, seeds,
                        config_from_json(config));
  json doc = {{"pairs", r.pairs}, {"runs", r.runs}, {"note", r.note},
              {"passed", r.passed()}};
  if (r.first_mismatch) {
    doc["first_mismatch"] = {{"a", r.first_mismatch->a.get_str()},
                             {"b", r.first_mismatch->b.get_str()},
                             {"got", r.first_mismatch->got},
                             {"expected", r.first_mismatch->expected}};
  }
  return doc.dump();
}

std::string growth(const std::string& protocol,
                   const std::vector<std::size_t>& sizes,
                   const std::string& config) {
  auto r = bench::growth_report(protocols::parse_protocol(protocol), sizes,
                                config_from_json(config));
  json points = json::array();
  for (const auto& p : r.points) {
    points.push_back({{"n", p.n},
                      {"bytes_total", p.bytes_total},
                      {"messages", p.messages},
                      {"rounds", p.rounds},
                      {"payload_bits", p.payload_bits}});
  }
  return json{{"model", r.model},
              {"slope", r.fit.slope},
              {"intercept", r.fit.intercept},
              {"r2", r.fit.r2},
              {"residuals", r.residuals},
              {"points", points}}
      .dump();
}

std::string tables() {
  auto r = fixtures::reproduce_tables();
  json diffs = json::array();
  for (const auto& d : r.diffs) {
    diffs.push_back({{"table", d.table}, {"cell", d.cell},
                     {"expected", d.expected}, {"actual", d.actual}});
  }
  return json{{"lines", r.lines}, {"diffs", diffs}}.dump();
}

std::string shared_eval(const std::string& s, const std::string& k,
                        const std::string& l, const std::string& x_bits) {
  return opf::shared_eval(opf::SharedParams{Integer(s), Integer(k), Integer(l)},
                          bitcore::BitString::parse(x_bits))
      .get_str();
}

std::string construct_at_point(const std::string& b_bits, const std::string& l,
                               const std::string& lo, const std::string& hi,
                               const std::string& seed_hex) {
  return opf::to_json(opf::construct_at_point(
                          bitcore::BitString::parse(b_bits), Integer(l),
                          Integer(lo), Integer(hi),
                          prg::Seed::from_hex(seed_hex)))
      .dump();
}

opf::PointOPF point_from_json(const std::string& text) {
  json j = json::parse(text);
  std::vector<opf::PerBitMap> maps;
  for (const auto& m : j["maps"]) maps.push_back({integer_of(m[0]), integer_of(m[1])});
  return opf::construct_at_point_injected(
      bitcore::BitString::parse(j["b"].get<std::string>()), integer_of(j["l"]),
      integer_of(j["range"][0]), integer_of(j["range"][1]), std::move(maps));
}

std::string eval_point(const std::string& point_json, const std::string& x_bits) {
  return opf::eval_point(point_from_json(point_json),
                         bitcore::BitString::parse(x_bits))
      .get_str();
}

py::tuple validate_general(const std::vector<std::pair<std::string, std::string>>& maps) {
  opf::GeneralOPF f;
  for (const auto& [z, o] : maps) f.maps.push_back({Integer(z), Integer(o)});
  auto v = opf::validate_general(f);
  return py::make_tuple(v.valid, v.first_violation ? py::cast(*v.first_violation)
                                                   : py::none());
}

}  // namespace
}  // namespace securecmp

PYBIND11_MODULE(_core, m) {
  m.doc() = "securecmp native core";
  py::register_exception<securecmp::Error>(m, "Error", PyExc_ValueError);
  m.def("run", &securecmp::run);
  m.def("sweep", &securecmp::sweep);
  m.def("growth", &securecmp::growth);
  m.def("tables", &securecmp::tables);
  m.def("shared_eval", &securecmp::shared_eval);
  m.def("construct_at_point", &securecmp::construct_at_point);
  m.def("eval_point", &securecmp::eval_point);
  m.def("validate_general", &securecmp::validate_general);
}
