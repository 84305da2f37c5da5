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

#include "securecmp/opf.hpp"

#include <algorithm>
#include <string>

namespace securecmp::opf {

Validation validate_general(const GeneralOPF& f) {
  Integer lower_gaps = 0;
  for (std::size_t i = 0; i < f.maps.size(); ++i) {
    Integer gap = f.maps[i].gap();
    if (sgn(gap) <= 0) {
      return {false, i + 1, Validation::Violation::NonPositiveGap};
    }
    if (gap <= lower_gaps) {
      return {false, i + 1, Validation::Violation::GapNotDominant};
    }
    lower_gaps += gap;
  }
  return {};
}

Integer eval(const GeneralOPF& f, const bitcore::BitString& x) {
  if (x.width() > f.maps.size()) {
    throw Error("input of " + std::to_string(x.width()) +
                " bits is wider than the encoding (" +
                std::to_string(f.maps.size()) + " positions)");
  }
  Integer total = 0;
  for (std::size_t i = 0; i < f.maps.size(); ++i) {
    int bit = i < x.width() ? x.lsb_first()[i] : 0;
    total += f.maps[i].at(bit);
  }
  return total;
}

void check_shared(const SharedParams& p) {
  if (p.k <= 1) throw Error("shared parameter k must be > 1");
  if (p.s < 1) throw Error("shared parameter s must be positive");
  if (p.l < 1) throw Error("shared parameter l must be positive");
  if (p.u != 0 && p.u != 1) throw Error("coin u must be 0 or 1");
  if (p.complement_width < 1) throw Error("complement width must be positive");
}

GeneralOPF induce(const SharedParams& p, std::size_t n) {
  check_shared(p);
  GeneralOPF f;
  f.maps.reserve(n);
  Integer power = p.k;
  for (std::size_t i = 1; i <= n; ++i) {
    f.maps.push_back({p.s, p.s + power * p.l});
    power *= p.k;
  }
  return f;
}

Integer shared_eval(const SharedParams& p, const bitcore::BitString& x) {
  check_shared(p);
  Integer total = 0;
  Integer power = p.k;
  for (std::uint8_t bit : x.lsb_first()) {
    total += p.s;
    if (bit) total += power * p.l;
    power *= p.k;
  }
  return total;
}

std::size_t shared_output_bits(const SharedParams& p, std::size_t n) {
  check_shared(p);
  if (n == 0) throw Error("input length must be >= 1");
  Integer k_pow;
  mpz_pow_ui(k_pow.get_mpz_t(), p.k.get_mpz_t(), n + 1);
  Integer max_value = Integer(n) * p.s + (k_pow - p.k) * p.l / (p.k - 1);
  return bit_length(max_value);
}

namespace {

void check_point_args(const bitcore::BitString& b, const Integer& l,
                      const Integer& range_lo, const Integer& range_hi) {
  (void)b;
  if (l < 2) throw Error("slack l must be >= 2");
  if (range_hi <= range_lo) {
    throw Error("sampling range [" + range_lo.get_str() + ", " +
                range_hi.get_str() + "] must have range_hi > range_lo");
  }
}

// Open interval for the mapping not fixed by b at one position.
struct Interval {
  Integer lo;
  Integer hi;
};

Interval free_interval(int b_bit, const Integer& fixed, const Integer& rises,
                       const Integer& falls, const Integer& l) {
  if (b_bit == 1) {
    // f(0) in (f(1) - v - l, f(1) - v), v = earlier rises.
    return {fixed - rises - l, fixed - rises};
  }
  // f(1) in (f(0) + u, f(0) + u + l), u = earlier falls.
  return {fixed + falls, fixed + falls + l};
}

std::string describe(const Interval& iv) {
  return "(" + iv.lo.get_str() + ", " + iv.hi.get_str() + ")";
}

}  // namespace

PointOPF construct_at_point(const bitcore::BitString& b, const Integer& l,
                            const Integer& range_lo, const Integer& range_hi,
                            const prg::Seed& seed) {
  check_point_args(b, l, range_lo, range_hi);
  const std::size_t d = b.width();
  prg::SubseedSchedule schedule = prg::expand(seed, d);

  PointOPF f{b, {}, l, range_lo, range_hi, seed};
  f.maps.reserve(d);
  Integer rises = 0;
  Integer falls = 0;
  for (std::size_t i = 0; i < d; ++i) {
    int bit = b.lsb_first()[i];
    Integer fixed =
        prg::int_in_range(schedule.subseeds[2 * i], range_lo, range_hi, false);
    Interval iv = free_interval(bit, fixed, rises, falls, l);
    Integer other;
    try {
      other = prg::int_in_range(schedule.subseeds[2 * i + 1], iv.lo, iv.hi, true);
    } catch (const Error&) {
      throw Error("position " + std::to_string(i + 1) +
                  ": empty sampling interval " + describe(iv));
    }
    PerBitMap map = bit ? PerBitMap{other, fixed} : PerBitMap{fixed, other};
    (bit ? falls : rises) += map.gap();
    f.maps.push_back(std::move(map));
  }
  return f;
}

PointOPF construct_at_point_injected(const bitcore::BitString& b,
                                     const Integer& l, const Integer& range_lo,
                                     const Integer& range_hi,
                                     std::vector<PerBitMap> maps) {
  check_point_args(b, l, range_lo, range_hi);
  if (maps.size() != b.width()) {
    throw Error("expected " + std::to_string(b.width()) + " mappings, got " +
                std::to_string(maps.size()));
  }
  Integer rises = 0;
  Integer falls = 0;
  for (std::size_t i = 0; i < maps.size(); ++i) {
    int bit = b.lsb_first()[i];
    const Integer& fixed = maps[i].at(bit);
    const Integer& other = maps[i].at(1 - bit);
    std::string where = "position " + std::to_string(i + 1) + ": ";
    if (fixed < range_lo || fixed > range_hi) {
      throw Error(where + "f(" + std::to_string(bit) + ") = " +
                  fixed.get_str() + " outside [" + range_lo.get_str() + ", " +
                  range_hi.get_str() + "]");
    }
    Interval iv = free_interval(bit, fixed, rises, falls, l);
    if (other <= iv.lo || other >= iv.hi) {
      throw Error(where + "f(" + std::to_string(1 - bit) + ") = " +
                  other.get_str() + " outside " + describe(iv));
    }
    (bit ? falls : rises) += maps[i].gap();
  }
  return PointOPF{b, std::move(maps), l, range_lo, range_hi, std::nullopt};
}

std::vector<RiseFall> rise_fall(const PointOPF& f) {
  std::vector<RiseFall> out;
  out.reserve(f.d());
  for (std::size_t i = 0; i < f.d(); ++i) {
    out.push_back({i + 1, f.b.lsb_first()[i] == 0, f.maps[i].gap()});
  }
  return out;
}

Integer eval_point(const PointOPF& f, const bitcore::BitString& x) {
  if (x.width() > f.d()) {
    throw Error("input of " + std::to_string(x.width()) +
                " bits is wider than d = " + std::to_string(f.d()));
  }
  Integer total = 0;
  for (std::size_t i = 0; i < f.d(); ++i) {
    int bit = i < x.width() ? x.lsb_first()[i] : 0;
    total += f.maps[i].at(bit);
  }
  return total;
}

std::pair<Integer, Integer> output_bounds(const PointOPF& f) {
  Integer lo = 0;
  Integer hi = 0;
  for (const auto& m : f.maps) {
    lo += std::min(m.zero_val, m.one_val);
    hi += std::max(m.zero_val, m.one_val);
  }
  return {lo, hi};
}

nlohmann::json integer_json(const Integer& v) {
  if (mpz_fits_slong_p(v.get_mpz_t())) {
    return static_cast<std::int64_t>(v.get_si());
  }
  return v.get_str();
}

namespace {

nlohmann::json maps_json(const std::vector<PerBitMap>& maps) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& m : maps) {
    out.push_back({integer_json(m.zero_val), integer_json(m.one_val)});
  }
  return out;
}

}  // namespace

nlohmann::json to_json(const GeneralOPF& f) {
  return {{"maps", maps_json(f.maps)}};
}

nlohmann::json to_json(const PointOPF& f) {
  return {{"maps", maps_json(f.maps)},
          {"b", f.b.to_string()},
          {"l", integer_json(f.l)},
          {"range", {integer_json(f.range_lo), integer_json(f.range_hi)}},
          {"seed_hex", f.seed ? nlohmann::json(f.seed->hex()) : nlohmann::json()}};
}

}  // namespace securecmp::opf
