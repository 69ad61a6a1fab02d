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

// Branch-free arithmetic on words that pack Z4 values in 2-bit lanes.
// Lane k of a word holds bits (2k, 2k+1); bit 2k is the low bit.

#include <bit>
#include <concepts>
#include <cstdint>

namespace z4r::lanes {

template <std::unsigned_integral W>
inline constexpr W kLow = static_cast<W>(static_cast<W>(~W{0}) / 3);  // 0b...0101

template <std::unsigned_integral W>
constexpr W add(W a, W b) {
  return static_cast<W>((a ^ b) ^ ((a & b & kLow<W>) << 1));
}

template <std::unsigned_integral W>
constexpr W neg(W a) {
  return static_cast<W>(a ^ ((a & kLow<W>) << 1));
}

template <std::unsigned_integral W>
constexpr W sub(W a, W b) {
  return add(a, neg(b));
}

/// Lanewise product mod 4: low = a0 b0, high = a1 b0 ^ a0 b1.
template <std::unsigned_integral W>
constexpr W mul(W a, W b) {
  const W a0 = a & kLow<W>;
  const W b0 = b & kLow<W>;
  const W a1 = (a >> 1) & kLow<W>;
  const W b1 = (b >> 1) & kLow<W>;
  return static_cast<W>((a0 & b0) | (((a1 & b0) ^ (a0 & b1)) << 1));
}

/// Doubling clears the high bit and moves the low bit up.
template <std::unsigned_integral W>
constexpr W twice(W a) {
  return static_cast<W>((a & kLow<W>) << 1);
}

/// Sum of Z4 Lee weights (0,1,2,1) over all lanes.
template <std::unsigned_integral W>
constexpr int lee_weight(W a) {
  const W low = a & kLow<W>;
  const W two = (a >> 1) & ~a & kLow<W>;
  return std::popcount(low) + 2 * std::popcount(two);
}

/// Number of nonzero lanes.
template <std::unsigned_integral W>
constexpr int nonzero_lanes(W a) {
  return std::popcount(static_cast<W>((a | (a >> 1)) & kLow<W>));
}

/// Nonzero 16-bit groups, i.e. nonzero ring symbols in a word of four.
constexpr int nonzero_symbols(std::uint64_t a) {
  int n = 0;
  for (int k = 0; k < 4; ++k) n += ((a >> (16 * k)) & 0xFFFFu) != 0;
  return n;
}

}  // namespace z4r::lanes
