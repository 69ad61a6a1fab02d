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

// Exhaustive sweeps over codes, each with a serial reference and an OpenMP
// variant. Codewords are packed 32 Z4 lanes per word; the caller chooses the
// lane layout when building the basis (position order for Z4 codes,
// 8*position+slot for codes over R, so one ring symbol is one 16-bit group).

#include <array>
#include <cstddef>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

#include "z4r/ring.hpp"

namespace z4r {
class Z4Code;
class RCode;
}  // namespace z4r

namespace z4r::kernels {

/// Rows of a standard-form generator, packed. Every codeword is
/// sum_i d_i row_i with 0 <= d_i < radix_i, each exactly once.
struct PackedBasis {
  std::size_t lanes = 0;
  std::size_t words = 0;
  std::vector<std::uint64_t> rows;  // rows.size() == radix.size() * words
  std::vector<std::uint8_t> radix;  // 4 or 2
  std::uint64_t count = 1;

  const std::uint64_t* row(std::size_t i) const { return rows.data() + i * words; }
};

/// Throw BudgetExceeded unless |C| <= budget.
PackedBasis packed_basis(const Z4Code& c, std::uint64_t budget);
/// Lane 8*j + t holds slot t of symbol j.
PackedBasis packed_basis(const RCode& c, std::uint64_t budget);
/// No size check; count is left at 0, so only sampling may use it.
PackedBasis sampling_basis(const Z4Code& c);

Z4 lane(const std::uint64_t* w, std::size_t k);
void set_lane(std::uint64_t* w, std::size_t k, Z4 value);

/// Calls fn(const uint64_t* word) for codewords with index in [begin, end).
/// Index order is the mixed-radix odometer with row 0 fastest.
template <class Fn>
void visit_range(const PackedBasis& b, std::uint64_t begin, std::uint64_t end, Fn&& fn) {
  if (begin >= end) return;
  const std::size_t k = b.radix.size();
  std::vector<std::uint64_t> cur(b.words, 0);
  std::vector<std::uint8_t> digit(k, 0);
  std::uint64_t rest = begin;
  for (std::size_t i = 0; i < k; ++i) {
    digit[i] = static_cast<std::uint8_t>(rest % b.radix[i]);
    rest /= b.radix[i];
    for (std::uint8_t m = 0; m < digit[i]; ++m) {
      const std::uint64_t* r = b.row(i);
      for (std::size_t w = 0; w < b.words; ++w) cur[w] = lanes::add(cur[w], r[w]);
    }
  }
  for (std::uint64_t idx = begin;;) {
    fn(static_cast<const std::uint64_t*>(cur.data()));
    if (++idx == end) break;
    // Adding row i radix_i times is the identity, so a wrap needs no undo.
    for (std::size_t i = 0; i < k; ++i) {
      const std::uint64_t* r = b.row(i);
      for (std::size_t w = 0; w < b.words; ++w) cur[w] = lanes::add(cur[w], r[w]);
      if (++digit[i] < b.radix[i]) break;
      digit[i] = 0;
    }
  }
}

template <class Fn>
void visit_all(const PackedBasis& b, Fn&& fn) {
  visit_range(b, 0, b.count, std::forward<Fn>(fn));
}

struct WeightTally {
  std::vector<std::uint64_t> lee;      // index = Lee weight, 0..2*lanes
  std::vector<std::uint64_t> hamming;  // index = nonzero lanes
};

WeightTally weight_tally_serial(const PackedBasis& b);
WeightTally weight_tally_parallel(const PackedBasis& b);

using SlweKey = std::array<std::uint16_t, 17>;

/// Per-codeword statistics of a code over R in the 8*position+slot layout.
struct RTally {
  std::map<SlweKey, std::uint64_t> slwe;
  std::vector<std::uint64_t> lee;      // 0..16n
  std::vector<std::uint64_t> hamming;  // 0..n, nonzero ring symbols
};

RTally r_tally_serial(const PackedBasis& b);
RTally r_tally_parallel(const PackedBasis& b);

/// Multiset of ring symbols (sorted 16-bit encodings) -> number of codewords.
using CompositionTally = std::map<std::vector<std::uint16_t>, std::uint64_t>;

CompositionTally composition_tally_serial(const PackedBasis& b);
CompositionTally composition_tally_parallel(const PackedBasis& b);

struct GaussianSum {
  std::int64_t re = 0;
  std::int64_t im = 0;
  friend bool operator==(const GaussianSum&, const GaussianSum&) = default;
};

/// For one ring element r: entry j is sum over s of Lee weight j of i^chi(r s).
std::array<GaussianSum, 17> character_row_serial(RingElement r);
std::array<GaussianSum, 17> character_row_parallel(RingElement r);

using CharacterTable = std::array<std::array<GaussianSum, 17>, 17>;

/// Rows evaluated at the first member of each Lee class.
CharacterTable character_table_serial();
CharacterTable character_table_parallel();

/// Smallest Lee weight among `samples` random nonzero codewords, or -1 if
/// none was drawn. Half of the draws use sparse coefficient vectors (a few
/// nonzero digits), which find low weights far more often than uniform draws.
/// The stream depends only on `seed`, not on the thread count.
int sampled_min_lee_serial(const PackedBasis& b, std::uint64_t samples, std::uint64_t seed);
int sampled_min_lee_parallel(const PackedBasis& b, std::uint64_t samples, std::uint64_t seed);

}  // namespace z4r::kernels
