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

#include <cmath>
#include <numeric>

#include "securecmp/bench.hpp"

namespace securecmp::bench {

using protocols::Protocol;
using protocols::ProtocolConfig;

namespace {

// n-bit value with its top bit set, from a fixed stream per size.
Integer sample_input(std::size_t n, std::string_view who) {
  Bytes key(who.begin(), who.end());
  for (int i = 0; i < 8; ++i) key.push_back((n >> (8 * i)) & 0xff);
  prg::Keystream stream(std::move(key));
  Integer v = stream.uniform_below(Integer(1) << n);
  mpz_setbit(v.get_mpz_t(), n - 1);
  return v;
}

// 1010...10 over d bits: ones at the even positions.
Integer alternating_anchor(std::size_t d) {
  Integer v;
  for (std::size_t i = 1; i < d; i += 2) mpz_setbit(v.get_mpz_t(), i);
  return v;
}

}  // namespace

std::vector<GrowthPoint> measure_growth(Protocol protocol,
                                        std::span<const std::size_t> sizes,
                                        const ProtocolConfig& base) {
  std::vector<GrowthPoint> points;
  std::size_t previous = 0;
  for (std::size_t n : sizes) {
    if (n < 2 || n <= previous) {
      throw Error("bench sizes must be ascending and >= 2");
    }
    previous = n;
    ProtocolConfig cfg = base;
    Integer a;
    Integer b;
    GrowthPoint point;
    point.n = n;
    switch (protocol) {
      case Protocol::A:
        cfg.width_w = n + 1;
        a = sample_input(n, "bench-a");
        b = sample_input(n, "bench-b");
        break;
      case Protocol::B:
      case Protocol::BExt:
        cfg.complement_width = n;
        cfg.extension_bits = n;
        if (!cfg.fixed_u) cfg.fixed_u = 1;
        a = sample_input(n, "bench-a");
        b = sample_input(n, "bench-b");
        break;
      case Protocol::C:
        cfg.d_bound = n;
        cfg.injected_maps.reset();
        a = sample_input(n, "bench-a");
        b = alternating_anchor(n);
        point.payload_bits = protocols::point_payload_bits(cfg);
        break;
    }
    auto run = protocols::run_protocol(protocol, a, b, cfg);
    point.bytes_total = run.transcript.bytes_total();
    point.messages = run.transcript.messages.size();
    point.rounds = run.transcript.rounds();
    points.push_back(point);
  }
  return points;
}

LinearFit fit_line(std::span<const double> x, std::span<const double> y) {
  if (x.size() != y.size() || x.size() < 2) {
    throw Error("fit needs at least two paired points");
  }
  const double n = static_cast<double>(x.size());
  const double mx = std::accumulate(x.begin(), x.end(), 0.0) / n;
  const double my = std::accumulate(y.begin(), y.end(), 0.0) / n;
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    sxx += (x[i] - mx) * (x[i] - mx);
    sxy += (x[i] - mx) * (y[i] - my);
    syy += (y[i] - my) * (y[i] - my);
  }
  if (sxx == 0) throw Error("fit needs distinct x values");
  LinearFit fit;
  fit.slope = sxy / sxx;
  fit.intercept = my - fit.slope * mx;
  double ss_res = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    double r = y[i] - (fit.slope * x[i] + fit.intercept);
    ss_res += r * r;
  }
  fit.r2 = syy == 0 ? 1.0 : 1.0 - ss_res / syy;
  return fit;
}

GrowthReport growth_report(Protocol protocol,
                           std::span<const std::size_t> sizes,
                           const ProtocolConfig& cfg) {
  GrowthReport report;
  report.points = measure_growth(protocol, sizes, cfg);
  std::vector<double> x;
  std::vector<double> y;
  for (const auto& p : report.points) {
    double n = static_cast<double>(p.n);
    switch (protocol) {
      case Protocol::A:
      case Protocol::B:
        report.model = "n";
        x.push_back(n);
        break;
      case Protocol::BExt:
        report.model = "n log n";
        x.push_back(n * std::log2(n));
        break;
      case Protocol::C:
        report.model = "n^2";
        x.push_back(n * n);
        break;
    }
    y.push_back(static_cast<double>(p.bytes_total));
  }
  report.fit = fit_line(x, y);
  for (std::size_t i = 0; i < x.size(); ++i) {
    report.residuals.push_back(y[i] -
                               (report.fit.slope * x[i] + report.fit.intercept));
  }
  return report;
}

}  // namespace securecmp::bench
