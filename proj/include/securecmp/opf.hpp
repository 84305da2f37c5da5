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
#include <utility>
#include <vector>

#include "nlohmann/json.hpp"  // IWYU pragma: keep
#include "securecmp/bitcore.hpp"
#include "securecmp/common.hpp"
#include "securecmp/prg.hpp"

// Order-preserving encodings built from one integer mapping per bit
// position: F(x) = sum_i f_i(x_i), positions numbered from 1 at the LSB.
namespace securecmp::opf {

struct PerBitMap {
  Integer zero_val;  // f_i(0)
  Integer one_val;   // f_i(1)

  const Integer& at(int bit) const { return bit ? one_val : zero_val; }
  Integer gap() const { return one_val - zero_val; }

  friend bool operator==(const PerBitMap&, const PerBitMap&) = default;
};

// Fully order-preserving encoding. Valid when every gap is positive and
// exceeds the sum of all lower gaps.
struct GeneralOPF {
  std::vector<PerBitMap> maps;  // maps[0] is position 1
};

struct Validation {
  enum class Violation { None, NonPositiveGap, GapNotDominant };

  bool valid = true;
  std::optional<std::size_t> first_violation;  // 1-based position
  Violation kind = Violation::None;
};

Validation validate_general(const GeneralOPF& f);

Integer eval(const GeneralOPF& f, const bitcore::BitString& x);

// f_i(0) = s and f_i(1) = s + k^i * l at every position. u selects whether
// inputs are used as-is (1) or complemented within complement_width (0).
struct SharedParams {
  Integer s;
  Integer k;
  Integer l;
  int u = 1;
  std::size_t complement_width = 64;
};

void check_shared(const SharedParams& p);

// The first n positions of the shared family as explicit maps.
GeneralOPF induce(const SharedParams& p, std::size_t n);

// Evaluates every bit of x. Callers pass minimal-form inputs (or inputs of a
// common fixed width) for cross-input comparisons to be meaningful.
Integer shared_eval(const SharedParams& p, const bitcore::BitString& x);

// Bit-length of n*s + (k^(n+1) - k) * l / (k - 1), the largest encoding of
// an n-bit input.
std::size_t shared_output_bits(const SharedParams& p, std::size_t n);

// Encoding that preserves order relative to one anchor value b only.
// Positions where b has a 0 are rises, positions where b has a 1 are falls;
// each gap exceeds the running sum of earlier gaps of the opposite kind by
// less than l.
struct PointOPF {
  bitcore::BitString b;
  std::vector<PerBitMap> maps;  // maps[0] is position 1, size == b.width()
  Integer l;
  Integer range_lo;
  Integer range_hi;
  std::optional<prg::Seed> seed;  // empty for injected instances

  std::size_t d() const { return maps.size(); }
};

struct RiseFall {
  std::size_t position;  // 1-based
  bool rise;             // b has a 0 here
  Integer amount;        // f_i(1) - f_i(0)
};

// Draws f_i(b_i) from [range_lo, range_hi] and the other mapping from its
// open interval, LSB to MSB, using expand(seed, d): subseed 2(i-1) for
// f_i(b_i) and 2(i-1)+1 for the other value.
PointOPF construct_at_point(const bitcore::BitString& b, const Integer& l,
                            const Integer& range_lo, const Integer& range_hi,
                            const prg::Seed& seed);

// Same constraints, but with caller-chosen mappings. Throws naming the first
// position whose values fall outside the allowed intervals.
PointOPF construct_at_point_injected(const bitcore::BitString& b,
                                     const Integer& l, const Integer& range_lo,
                                     const Integer& range_hi,
                                     std::vector<PerBitMap> maps);

std::vector<RiseFall> rise_fall(const PointOPF& f);

Integer eval_point(const PointOPF& f, const bitcore::BitString& x);

// (sum of per-position minima, sum of per-position maxima).
std::pair<Integer, Integer> output_bounds(const PointOPF& f);

nlohmann::json to_json(const GeneralOPF& f);
nlohmann::json to_json(const PointOPF& f);

// JSON scalar for an integer: a number when it fits in 64 bits, otherwise a
// decimal string.
nlohmann::json integer_json(const Integer& v);

}  // namespace securecmp::opf
