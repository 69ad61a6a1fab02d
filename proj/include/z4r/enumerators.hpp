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
#include <cstddef>
#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "z4r/bigint.hpp"
#include "z4r/errors.hpp"
#include "z4r/kernels.hpp"
#include "z4r/rcode.hpp"
#include "z4r/ring.hpp"

namespace z4r {

/// (symbol encoding, multiplicity), sorted by symbol, multiplicities > 0.
using Composition = std::vector<std::pair<std::uint16_t, std::uint32_t>>;

Composition composition_of(const RVector& x);

/// Complete weight enumerator: composition -> number of codewords.
struct CWE {
  std::size_t length = 0;
  std::map<Composition, BigInt> terms;

  BigInt total() const;
  friend bool operator==(const CWE&, const CWE&) = default;
};

/// Symmetrized Lee weight enumerator: (n_0, ..., n_16) -> count, where n_k
/// is the number of symbols of Lee weight k.
struct SLWE {
  std::size_t length = 0;
  std::map<kernels::SlweKey, BigInt> terms;

  BigInt total() const;
  friend bool operator==(const SLWE&, const SLWE&) = default;
};

/// coeffs[i] multiplies X^{D-i} Y^i; D = n (Hamming) or 16n (Lee).
struct BivariateEnum {
  std::vector<BigInt> coeffs;

  std::size_t degree() const { return coeffs.empty() ? 0 : coeffs.size() - 1; }
  BigInt total() const;
  friend bool operator==(const BivariateEnum&, const BivariateEnum&) = default;
};

/// K[k][j] = sum over s of Lee weight j of chi(r s), any r of Lee weight k.
using SLWEKernel = std::array<std::array<std::int64_t, 17>, 17>;

CWE cwe(const RCode& c, std::uint64_t budget = kDefaultBudget);
CWE cwe(const std::vector<RVector>& words, std::size_t n);

SLWE slwe(const RCode& c, std::uint64_t budget = kDefaultBudget);
SLWE slwe(const std::vector<RVector>& words, std::size_t n);
SLWE slwe_from_cwe(const CWE& w);

BivariateEnum ham(const RCode& c, std::uint64_t budget = kDefaultBudget);
BivariateEnum ham(const std::vector<RVector>& words, std::size_t n);
BivariateEnum ham_from_slwe(const SLWE& w);

BivariateEnum lee(const RCode& c, std::uint64_t budget = kDefaultBudget);
BivariateEnum lee(const std::vector<RVector>& words, std::size_t n);
BivariateEnum lee_from_slwe(const SLWE& w);

/// Built once from character sums; throws std::logic_error if any sum has a
/// nonzero imaginary part.
const SLWEKernel& slwe_kernel();
SLWEKernel build_slwe_kernel(const kernels::CharacterTable& sums);

/// Substitutes X_k <- sum_j K[k][j] X_j and divides by |C|. Throws
/// InexactDivision if any coefficient is not divisible.
SLWE slwe_macwilliams(const SLWE& w, const BigInt& size_c);

inline constexpr std::uint64_t kHammingMultiplier = 65535;

/// (1/|C|) Ham_C(X + m Y, X - Y). The identity holds for m = |R| - 1.
BivariateEnum ham_macwilliams(const BivariateEnum& h, const BigInt& size_c, std::size_t n,
                              std::uint64_t multiplier = kHammingMultiplier);

/// (1/|C|) Lee_C(X + Y, X - Y).
BivariateEnum lee_macwilliams(const BivariateEnum& l, const BigInt& size_c);

/// Complete-enumerator transform. The kernel is evaluated as a Fourier
/// transform over the Z4-span H of the Gray images of one word per
/// composition, then summed over each annihilator coset. Throws
/// BudgetExceeded when |H| or (nonzero frequencies) * |H^perp| exceed the
/// budget.
CWE cwe_macwilliams(const CWE& w, const BigInt& size_c, std::uint64_t budget = kDefaultBudget);

/// The first differing coefficient, as a printable description; empty when
/// equal.
std::string first_difference(const SLWE& a, const SLWE& b);
std::string first_difference(const BivariateEnum& a, const BivariateEnum& b);
std::string first_difference(const CWE& a, const CWE& b);

}  // namespace z4r
