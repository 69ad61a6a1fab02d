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

#include "z4r/kernels.hpp"

#include <omp.h>

#include <algorithm>
#include <cmath>
#include <random>
#include <unordered_map>

#include "z4r/errors.hpp"
#include "z4r/rcode.hpp"
#include "z4r/z4_linalg.hpp"

namespace z4r::kernels {

namespace {

constexpr std::uint64_t kParallelThreshold = 1u << 12;

std::uint64_t checked_count(std::size_t log2_size, std::uint64_t budget) {
  if (log2_size >= 63 || (std::uint64_t{1} << log2_size) > budget)
    throw BudgetExceeded("codeword enumeration", std::ldexp(1.0, static_cast<int>(log2_size)), budget);
  return std::uint64_t{1} << log2_size;
}

void append_rows(PackedBasis& b, const StandardForm& sf, std::size_t stride, std::size_t offset) {
  const Z4Matrix g = sf.generator();
  for (std::size_t r = 0; r < g.rows(); ++r) {
    const std::size_t at = b.rows.size();
    b.rows.resize(at + b.words, 0);
    for (std::size_t j = 0; j < g.cols(); ++j) set_lane(b.rows.data() + at, stride * j + offset, g(r, j));
    b.radix.push_back(r < sf.k1 ? 4 : 2);
  }
}

// [begin, end) of part `i` out of `parts`.
std::pair<std::uint64_t, std::uint64_t> slice(std::uint64_t total, int i, int parts) {
  const auto lo = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * i) / parts);
  const auto hi = static_cast<std::uint64_t>((static_cast<unsigned __int128>(total) * (i + 1)) / parts);
  return {lo, hi};
}

void tally_weights(const PackedBasis& b, std::uint64_t lo, std::uint64_t hi, WeightTally& t) {
  visit_range(b, lo, hi, [&](const std::uint64_t* w) {
    int lee = 0, ham = 0;
    for (std::size_t i = 0; i < b.words; ++i) {
      lee += lanes::lee_weight(w[i]);
      ham += lanes::nonzero_lanes(w[i]);
    }
    ++t.lee[static_cast<std::size_t>(lee)];
    ++t.hamming[static_cast<std::size_t>(ham)];
  });
}

WeightTally empty_weight_tally(const PackedBasis& b) {
  return {std::vector<std::uint64_t>(2 * b.lanes + 1, 0), std::vector<std::uint64_t>(b.lanes + 1, 0)};
}

struct KeyHash {
  std::size_t operator()(const SlweKey& k) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : k) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

struct LocalRTally {
  std::unordered_map<SlweKey, std::uint64_t, KeyHash> slwe;
  std::vector<std::uint64_t> lee;
  std::vector<std::uint64_t> hamming;
};

void tally_r(const PackedBasis& b, std::uint64_t lo, std::uint64_t hi, LocalRTally& t) {
  const std::size_t n = b.lanes / 8;
  visit_range(b, lo, hi, [&](const std::uint64_t* w) {
    SlweKey key{};
    int lee = 0, ham = 0;
    for (std::size_t j = 0; j < n; ++j) {
      const auto sym = static_cast<std::uint16_t>(w[j / 4] >> (16 * (j % 4)));
      const int k = lanes::lee_weight(sym);
      ++key[static_cast<std::size_t>(k)];
      lee += k;
      ham += sym != 0;
    }
    ++t.slwe[key];
    ++t.lee[static_cast<std::size_t>(lee)];
    ++t.hamming[static_cast<std::size_t>(ham)];
  });
}

LocalRTally empty_local(const PackedBasis& b) {
  const std::size_t n = b.lanes / 8;
  return {{}, std::vector<std::uint64_t>(16 * n + 1, 0), std::vector<std::uint64_t>(n + 1, 0)};
}

void merge_into(RTally& out, const LocalRTally& t) {
  for (const auto& [k, v] : t.slwe) out.slwe[k] += v;
  for (std::size_t i = 0; i < t.lee.size(); ++i) out.lee[i] += t.lee[i];
  for (std::size_t i = 0; i < t.hamming.size(); ++i) out.hamming[i] += t.hamming[i];
}

void tally_compositions(const PackedBasis& b, std::uint64_t lo, std::uint64_t hi, CompositionTally& t) {
  const std::size_t n = b.lanes / 8;
  std::vector<std::uint16_t> key(n);
  visit_range(b, lo, hi, [&](const std::uint64_t* w) {
    for (std::size_t j = 0; j < n; ++j) key[j] = static_cast<std::uint16_t>(w[j / 4] >> (16 * (j % 4)));
    std::sort(key.begin(), key.end());
    ++t[key];
  });
}

void accumulate(GaussianSum& g, int e) {
  switch (e) {
    case 0: ++g.re; break;
    case 1: ++g.im; break;
    case 2: --g.re; break;
    default: --g.im; break;
  }
}

void add_scaled(std::vector<std::uint64_t>& cur, const std::uint64_t* row, unsigned d) {
  for (std::size_t w = 0; w < cur.size(); ++w) {
    const std::uint64_t r = d == 1 ? row[w] : d == 2 ? lanes::twice(row[w]) : lanes::neg(row[w]);
    cur[w] = lanes::add(cur[w], r);
  }
}

constexpr int kSampleChunks = 64;

int sample_chunk(const PackedBasis& b, std::uint64_t draws, std::uint64_t seed, int chunk) {
  std::mt19937_64 rng(seed ^ (0x9E3779B97F4A7C15ull * static_cast<std::uint64_t>(chunk + 1)));
  const std::size_t k = b.radix.size();
  std::vector<std::uint64_t> cur(b.words);
  int best = -1;
  for (std::uint64_t s = 0; s < draws; ++s) {
    std::fill(cur.begin(), cur.end(), 0);
    if (s % 2 == 0) {
      for (std::size_t i = 0; i < k; ++i) {
        const auto d = static_cast<unsigned>(rng() % b.radix[i]);
        if (d != 0) add_scaled(cur, b.row(i), b.radix[i] == 2 ? 1 : d);
      }
    } else {
      const std::uint64_t terms = 1 + rng() % 3;
      for (std::uint64_t m = 0; m < terms; ++m) {
        const std::size_t i = static_cast<std::size_t>(rng() % k);
        const auto d = b.radix[i] == 2 ? 1u : static_cast<unsigned>(1 + rng() % 3);
        add_scaled(cur, b.row(i), d);
      }
    }
    int lee = 0;
    for (auto w : cur) lee += lanes::lee_weight(w);
    if (lee != 0 && (best < 0 || lee < best)) best = lee;
  }
  return best;
}

int merge_min(int a, int b) {
  if (a < 0) return b;
  if (b < 0) return a;
  return std::min(a, b);
}

}  // namespace

Z4 lane(const std::uint64_t* w, std::size_t k) { return static_cast<Z4>((w[k / 32] >> (2 * (k % 32))) & 3u); }

void set_lane(std::uint64_t* w, std::size_t k, Z4 value) {
  const unsigned shift = 2 * (k % 32);
  w[k / 32] = (w[k / 32] & ~(std::uint64_t{3} << shift)) | (std::uint64_t{value & 3u} << shift);
}

PackedBasis packed_basis(const Z4Code& c, std::uint64_t budget) {
  PackedBasis b;
  b.count = checked_count(c.log2_size(), budget);
  b.lanes = c.length();
  b.words = std::max<std::size_t>(1, (b.lanes + 31) / 32);
  append_rows(b, c.standard(), 1, 0);
  return b;
}

PackedBasis packed_basis(const RCode& c, std::uint64_t budget) {
  PackedBasis b;
  b.count = checked_count(c.log2_size(), budget);
  b.lanes = 8 * c.length();
  b.words = std::max<std::size_t>(1, (b.lanes + 31) / 32);
  for (int t = 0; t < kSlots; ++t) append_rows(b, c.component(t).standard(), 8, static_cast<std::size_t>(t));
  return b;
}

PackedBasis sampling_basis(const Z4Code& c) {
  PackedBasis b;
  b.count = 0;
  b.lanes = c.length();
  b.words = std::max<std::size_t>(1, (b.lanes + 31) / 32);
  append_rows(b, c.standard(), 1, 0);
  return b;
}

WeightTally weight_tally_serial(const PackedBasis& b) {
  WeightTally t = empty_weight_tally(b);
  tally_weights(b, 0, b.count, t);
  return t;
}

WeightTally weight_tally_parallel(const PackedBasis& b) {
  WeightTally total = empty_weight_tally(b);
#pragma omp parallel if (b.count >= kParallelThreshold)
  {
    WeightTally local = empty_weight_tally(b);
    const auto [lo, hi] = slice(b.count, omp_get_thread_num(), omp_get_num_threads());
    tally_weights(b, lo, hi, local);
#pragma omp critical
    {
      for (std::size_t i = 0; i < local.lee.size(); ++i) total.lee[i] += local.lee[i];
      for (std::size_t i = 0; i < local.hamming.size(); ++i) total.hamming[i] += local.hamming[i];
    }
  }
  return total;
}

RTally r_tally_serial(const PackedBasis& b) {
  LocalRTally local = empty_local(b);
  tally_r(b, 0, b.count, local);
  RTally out{{}, std::vector<std::uint64_t>(local.lee.size(), 0), std::vector<std::uint64_t>(local.hamming.size(), 0)};
  merge_into(out, local);
  return out;
}

RTally r_tally_parallel(const PackedBasis& b) {
  const std::size_t n = b.lanes / 8;
  RTally out{{}, std::vector<std::uint64_t>(16 * n + 1, 0), std::vector<std::uint64_t>(n + 1, 0)};
#pragma omp parallel if (b.count >= kParallelThreshold)
  {
    LocalRTally local = empty_local(b);
    const auto [lo, hi] = slice(b.count, omp_get_thread_num(), omp_get_num_threads());
    tally_r(b, lo, hi, local);
#pragma omp critical
    merge_into(out, local);
  }
  return out;
}

CompositionTally composition_tally_serial(const PackedBasis& b) {
  CompositionTally t;
  tally_compositions(b, 0, b.count, t);
  return t;
}

CompositionTally composition_tally_parallel(const PackedBasis& b) {
  CompositionTally out;
#pragma omp parallel if (b.count >= kParallelThreshold)
  {
    CompositionTally local;
    const auto [lo, hi] = slice(b.count, omp_get_thread_num(), omp_get_num_threads());
    tally_compositions(b, lo, hi, local);
#pragma omp critical
    {
      if (out.empty())
        out.swap(local);
      else
        for (const auto& [k, v] : local) out[k] += v;
    }
  }
  return out;
}

std::array<GaussianSum, 17> character_row_serial(RingElement r) {
  std::array<GaussianSum, 17> row{};
  for (std::uint32_t s = 0; s < kRingOrder; ++s) {
    const auto x = RingElement::from_bits(static_cast<std::uint16_t>(s));
    accumulate(row[static_cast<std::size_t>(lee_weight(x))], chi(r * x));
  }
  return row;
}

std::array<GaussianSum, 17> character_row_parallel(RingElement r) {
  std::array<GaussianSum, 17> row{};
#pragma omp parallel
  {
    std::array<GaussianSum, 17> local{};
#pragma omp for schedule(static)
    for (std::int64_t s = 0; s < static_cast<std::int64_t>(kRingOrder); ++s) {
      const auto x = RingElement::from_bits(static_cast<std::uint16_t>(s));
      accumulate(local[static_cast<std::size_t>(lee_weight(x))], chi(r * x));
    }
#pragma omp critical
    for (std::size_t j = 0; j < 17; ++j) {
      row[j].re += local[j].re;
      row[j].im += local[j].im;
    }
  }
  return row;
}

CharacterTable character_table_serial() {
  const LeeClassTable& cls = lee_class_table();
  CharacterTable t{};
  for (std::size_t k = 0; k < 17; ++k) t[k] = character_row_serial(cls.members[k].front());
  return t;
}

CharacterTable character_table_parallel() {
  const LeeClassTable& cls = lee_class_table();
  CharacterTable t{};
  for (std::size_t k = 0; k < 17; ++k) t[k] = character_row_parallel(cls.members[k].front());
  return t;
}

int sampled_min_lee_serial(const PackedBasis& b, std::uint64_t samples, std::uint64_t seed) {
  if (b.radix.empty()) return -1;
  int best = -1;
  for (int c = 0; c < kSampleChunks; ++c) {
    const auto [lo, hi] = slice(samples, c, kSampleChunks);
    best = merge_min(best, sample_chunk(b, hi - lo, seed, c));
  }
  return best;
}

int sampled_min_lee_parallel(const PackedBasis& b, std::uint64_t samples, std::uint64_t seed) {
  if (b.radix.empty()) return -1;
  std::array<int, kSampleChunks> best{};
#pragma omp parallel for schedule(dynamic)
  for (int c = 0; c < kSampleChunks; ++c) {
    const auto [lo, hi] = slice(samples, c, kSampleChunks);
    best[static_cast<std::size_t>(c)] = sample_chunk(b, hi - lo, seed, c);
  }
  int out = -1;
  for (int v : best) out = merge_min(out, v);
  return out;
}

}  // namespace z4r::kernels
