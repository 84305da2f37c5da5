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
#include <string>
#include <vector>

#include "securecmp/common.hpp"
#include "securecmp/protocols.hpp"

// Exhaustive verification sweeps and communication-growth measurement.
namespace securecmp::bench {

struct Mismatch {
  Integer a;
  Integer b;
  std::string got;
  std::string expected;
  std::string context;  // seed / coin / backend
};

struct SweepReport {
  protocols::Protocol protocol = protocols::Protocol::A;
  std::size_t max_bits = 0;
  std::size_t pairs = 0;  // distinct (a, b)
  std::size_t runs = 0;   // protocol executions
  std::optional<Mismatch> first_mismatch;
  std::string note;

  bool passed() const { return !first_mismatch.has_value(); }
};

// Runs every pair in [0, 2^max_bits)^2 against the plaintext oracle.
//   A: word width max_bits + 1, checks predicate_ge only.
//   B / b-ext: both coin values, complement width max_bits.
//   C: d = max_bits, seeds 0 .. seeds-1, backend from cfg.
SweepReport sweep(protocols::Protocol protocol, std::size_t max_bits,
                  std::size_t seeds, const protocols::ProtocolConfig& cfg);

struct GrowthPoint {
  std::size_t n = 0;
  std::size_t bytes_total = 0;
  std::size_t messages = 0;
  std::size_t rounds = 0;
  std::size_t payload_bits = 0;  // C only: OT word width
};

// Runs the protocol once per size on deterministic n-bit inputs (C uses the
// alternating 1010...10 anchor, the largest-output case).
std::vector<GrowthPoint> measure_growth(protocols::Protocol protocol,
                                        std::span<const std::size_t> sizes,
                                        const protocols::ProtocolConfig& cfg);

struct LinearFit {
  double slope = 0;
  double intercept = 0;
  double r2 = 0;
};

// Least squares y = slope * x + intercept.
LinearFit fit_line(std::span<const double> x, std::span<const double> y);

struct GrowthReport {
  std::vector<GrowthPoint> points;
  std::string model;  // "n", "n log n" or "n^2"
  LinearFit fit;      // bytes against the model term
  std::vector<double> residuals;
};

GrowthReport growth_report(protocols::Protocol protocol,
                           std::span<const std::size_t> sizes,
                           const protocols::ProtocolConfig& cfg);

}  // namespace securecmp::bench
