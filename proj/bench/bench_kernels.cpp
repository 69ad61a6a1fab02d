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

// Serial references against their OpenMP variants on the same inputs.

#include <benchmark/benchmark.h>

#include <random>

#include "z4r/catalog.hpp"
#include "z4r/cyclic.hpp"
#include "z4r/kernels.hpp"
#include "z4r/rcode.hpp"

using namespace z4r;

namespace {

// <f + 2> at n = 15 with deg f = 10: 4^5 2^10 = 2^20 words.
const Z4Code& z4_code() {
  static const Z4Code c = [] {
    const auto& f = example(15).lifted_factors;
    return cyclic_code(CyclicSpec::single(15, f[1] * f[2] * f[3], Z4Poly{1}));
  }();
  return c;
}

// Length 4 over R, 2^20 words.

const RCode& r_code() {
  static const RCode c = [] {
    std::mt19937_64 rng(9);
    std::array<Z4Code, 8> comps;
    for (int t = 0; t < 8; ++t) {
      Z4Vector a(4), b(4);
      for (auto& x : a) x = static_cast<Z4>(rng() % 4);
      for (auto& x : b) x = static_cast<Z4>(2 * (rng() % 2));
      a[0] = 1;
      b[0] = 0;
      b[1] = 2;
      comps[static_cast<std::size_t>(t)] =
          t % 2 ? Z4Code::from_rows({a, b}, 4) : Z4Code::from_rows({a}, 4);
    }
    return RCode(comps);
  }();
  return c;
}

template <class F>
void run(benchmark::State& state, F&& f) {
  for (auto _ : state) benchmark::DoNotOptimize(f());
}

void BM_WeightTallySerial(benchmark::State& s) {
  const auto b = kernels::packed_basis(z4_code(), kDefaultBudget);
  run(s, [&] { return kernels::weight_tally_serial(b); });
  s.counters["words"] = static_cast<double>(b.count);
}
void BM_WeightTallyParallel(benchmark::State& s) {
  const auto b = kernels::packed_basis(z4_code(), kDefaultBudget);
  run(s, [&] { return kernels::weight_tally_parallel(b); });
  s.counters["words"] = static_cast<double>(b.count);
}

void BM_RTallySerial(benchmark::State& s) {
  const auto b = kernels::packed_basis(r_code(), kDefaultBudget);
  run(s, [&] { return kernels::r_tally_serial(b); });
  s.counters["words"] = static_cast<double>(b.count);
}
void BM_RTallyParallel(benchmark::State& s) {
  const auto b = kernels::packed_basis(r_code(), kDefaultBudget);
  run(s, [&] { return kernels::r_tally_parallel(b); });
  s.counters["words"] = static_cast<double>(b.count);
}

void BM_CompositionTallySerial(benchmark::State& s) {
  const auto b = kernels::packed_basis(r_code(), kDefaultBudget);
  run(s, [&] { return kernels::composition_tally_serial(b); });
}
void BM_CompositionTallyParallel(benchmark::State& s) {
  const auto b = kernels::packed_basis(r_code(), kDefaultBudget);
  run(s, [&] { return kernels::composition_tally_parallel(b); });
}

void BM_CharacterTableSerial(benchmark::State& s) { run(s, [] { return kernels::character_table_serial(); }); }
void BM_CharacterTableParallel(benchmark::State& s) { run(s, [] { return kernels::character_table_parallel(); }); }

void BM_SampledMinLeeSerial(benchmark::State& s) {
  const auto& e = example(31);
  const auto b = kernels::sampling_basis(cyclic_code(e.component_spec(e.variant(1).components[0])));
  run(s, [&] { return kernels::sampled_min_lee_serial(b, 100'000, 1); });
}
void BM_SampledMinLeeParallel(benchmark::State& s) {
  const auto& e = example(31);
  const auto b = kernels::sampling_basis(cyclic_code(e.component_spec(e.variant(1).components[0])));
  run(s, [&] { return kernels::sampled_min_lee_parallel(b, 100'000, 1); });
}

}  // namespace

BENCHMARK(BM_WeightTallySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_WeightTallyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_RTallySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_RTallyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CompositionTallySerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CompositionTallyParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_CharacterTableSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_CharacterTableParallel)->Unit(benchmark::kMillisecond)->UseRealTime();
BENCHMARK(BM_SampledMinLeeSerial)->Unit(benchmark::kMillisecond);
BENCHMARK(BM_SampledMinLeeParallel)->Unit(benchmark::kMillisecond)->UseRealTime();

BENCHMARK_MAIN();
