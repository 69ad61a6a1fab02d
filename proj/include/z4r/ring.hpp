// Copyright 2026 The z4r Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
// http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <array>
#include <compare>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "z4r/lanes.hpp"

namespace z4r {

/// An element of Z4 stored in {0,1,2,3}.
using Z4 = std::uint8_t;

inline constexpr int kSlots = 8;
inline constexpr std::uint32_t kRingOrder = 65536;
inline constexpr int kMaxSymbolLee = 16;

constexpr int lee_weight_z4(Z4 x) { return x == 2 ? 2 : (x & 1); }

/// Coefficients (a,b,c,d,e,f,g,h) of 1,u,v,w,uv,uw,vw,uvw.
struct StandardCoeffs {
  std::array<Z4, 8> c{};

  friend bool operator==(const StandardCoeffs&, const StandardCoeffs&) = default;
};

/// An element of R = Z4[u,v,w]/(u^2-u, v^2-v, w^2-w), held by its CRT
/// coordinates (r_1..r_8) with respect to the idempotents eta_1..eta_8.
/// Coordinate t sits in bits (2t, 2t+1) of a 16-bit word, so ring
/// arithmetic is lanewise Z4 arithmetic on that word.
class RingElement {
 public:
  constexpr RingElement() = default;

  static constexpr RingElement from_bits(std::uint16_t bits) {
    RingElement r;
    r.bits_ = bits;
    return r;
  }

  static constexpr RingElement from_crt(const std::array<Z4, 8>& coords) {
    std::uint16_t b = 0;
    for (int t = 0; t < kSlots; ++t) b |= static_cast<std::uint16_t>((coords[t] & 3u) << (2 * t));
    return from_bits(b);
  }

  /// k * 1
  static constexpr RingElement constant(Z4 k) {
    std::uint16_t b = 0;
    for (int t = 0; t < kSlots; ++t) b |= static_cast<std::uint16_t>((k & 3u) << (2 * t));
    return from_bits(b);
  }

  static constexpr RingElement zero() { return {}; }
  static constexpr RingElement one() { return constant(1); }

  /// eta_{t+1}, for t in [0, 8).
  static constexpr RingElement idempotent(int t) {
    return from_bits(static_cast<std::uint16_t>(1u << (2 * t)));
  }

  constexpr std::uint16_t bits() const { return bits_; }
  constexpr Z4 coord(int t) const { return static_cast<Z4>((bits_ >> (2 * t)) & 3u); }
  constexpr bool is_zero() const { return bits_ == 0; }

  std::array<Z4, 8> crt() const {
    std::array<Z4, 8> r{};
    for (int t = 0; t < kSlots; ++t) r[t] = coord(t);
    return r;
  }

  friend constexpr RingElement operator+(RingElement x, RingElement y) {
    return from_bits(lanes::add<std::uint16_t>(x.bits_, y.bits_));
  }
  friend constexpr RingElement operator-(RingElement x, RingElement y) {
    return from_bits(lanes::sub<std::uint16_t>(x.bits_, y.bits_));
  }
  friend constexpr RingElement operator-(RingElement x) {
    return from_bits(lanes::neg<std::uint16_t>(x.bits_));
  }
  friend constexpr RingElement operator*(RingElement x, RingElement y) {
    return from_bits(lanes::mul<std::uint16_t>(x.bits_, y.bits_));
  }
  RingElement& operator+=(RingElement y) { return *this = *this + y; }
  RingElement& operator-=(RingElement y) { return *this = *this - y; }
  RingElement& operator*=(RingElement y) { return *this = *this * y; }

  friend constexpr bool operator==(RingElement, RingElement) = default;
  friend constexpr auto operator<=>(RingElement, RingElement) = default;

 private:
  std::uint16_t bits_ = 0;
};

using RVector = std::vector<RingElement>;

RingElement crt_decompose(const StandardCoeffs& s);
StandardCoeffs crt_compose(RingElement r);

constexpr RingElement add(RingElement x, RingElement y) { return x + y; }
constexpr RingElement sub(RingElement x, RingElement y) { return x - y; }
constexpr RingElement neg(RingElement x) { return -x; }
constexpr RingElement mul(RingElement x, RingElement y) { return x * y; }

/// Units are exactly the elements whose CRT coordinates are all odd.
constexpr bool is_unit(RingElement r) {
  return (r.bits() & lanes::kLow<std::uint16_t>) == lanes::kLow<std::uint16_t>;
}

/// Sign of r_t in h = -r1 + r2 + r3 + r4 - r5 - r6 - r7 + r8, the uvw
/// coefficient written in CRT coordinates.
inline constexpr std::array<int, 8> kChiSigns{-1, 1, 1, 1, -1, -1, -1, 1};

/// Exponent e with chi(r) = i^e, where chi reads the uvw coefficient.
constexpr int chi(RingElement r) {
  int h = 0;
  for (int t = 0; t < kSlots; ++t) h += kChiSigns[t] * r.coord(t);
  return ((h % 4) + 4) % 4;
}

constexpr int lee_weight(RingElement r) { return lanes::lee_weight<std::uint16_t>(r.bits()); }

int lee_weight(const RVector& x);
int hamming_weight(const RVector& x);

/// Partition of R by Lee weight: D_k = { x : w_L(x) = k }, k = 0..16.
struct LeeClassTable {
  std::vector<std::uint8_t> class_of;  // indexed by RingElement::bits()
  std::array<std::vector<RingElement>, 17> members;
  std::array<std::uint32_t, 17> sizes{};
};

/// Built on first use from an exhaustive sweep; read-only afterwards.
const LeeClassTable& lee_class_table();

LeeClassTable build_lee_class_table();

/// Accepts "a+bu+cv+dw+euv+fuw+gvw+huvw" (any subset of terms, digit
/// coefficients 0..3, letters in any order) or "[r1,...,r8]".
RingElement parse_element(std::string_view text);

/// Canonical standard-basis text, e.g. "1+3u+2uvw"; zero prints as "0".
std::string to_standard_string(RingElement r);
std::string to_crt_string(RingElement r);

}  // namespace z4r
