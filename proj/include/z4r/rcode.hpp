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
#include <boost/rational.hpp>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "z4r/bigint.hpp"
#include "z4r/errors.hpp"
#include "z4r/ring.hpp"
#include "z4r/z4_linalg.hpp"

namespace z4r {

/// A linear code over R of length n, stored as its eight CRT components:
/// x is a codeword iff the slot-t coordinate vector of x lies in C_t.
class RCode {
 public:
  /// Throws LengthMismatch unless all components have the same length.
  explicit RCode(std::array<Z4Code, 8> components);

  static RCode zero(std::size_t n);
  static RCode full(std::size_t n);
  /// The same Z4 code in every slot.
  static RCode uniform(const Z4Code& c);

  std::size_t length() const { return components_[0].length(); }
  const Z4Code& component(int t) const { return components_[static_cast<std::size_t>(t)]; }
  const std::array<Z4Code, 8>& components() const { return components_; }

  /// |C| = 4^exp4 * 2^exp2.
  std::size_t exp4() const;
  std::size_t exp2() const;
  std::size_t log2_size() const { return 2 * exp4() + exp2(); }
  BigInt size() const;
  bool is_zero() const;

  /// Throws LengthMismatch for a vector of the wrong length.
  bool contains(const RVector& x) const;

  friend bool operator==(const RCode&, const RCode&) = default;

 private:
  std::array<Z4Code, 8> components_;
};

inline RCode build(std::array<Z4Code, 8> components) { return RCode(std::move(components)); }

/// Componentwise dual.
RCode dual(const RCode& c);

/// Slot-t coordinate vector (x_{0,t}, ..., x_{n-1,t}).
Z4Vector slot_vector(const RVector& x, int t);

/// Component-major image: block t holds the slot-t coordinate vector.
Z4Vector gray_map(const RVector& x);
/// Throws LengthMismatch when the length is not a multiple of 8.
RVector gray_inverse(std::span<const Z4> g);

/// eta_t * (row of G_t) for every nonzero generator row of every component,
/// slot 1 first.
std::vector<RVector> generator_matrix(const RCode& c);

/// Gray images of the generator_matrix rows, width 8n.
Z4Matrix gray_image_generator(const RCode& c);
/// The code spanned by gray_image_generator.
Z4Code gray_image(const RCode& c);

/// R-linear span of the rows, split into components.
RCode r_span(const std::vector<RVector>& rows, std::size_t n);

/// Per-component minimum distance, minimized over components. std::nullopt
/// is the infinite distance of the zero code.
std::optional<int> min_distance(const RCode& c, Metric metric, std::uint64_t budget = kDefaultBudget);

struct RCodeParameters {
  std::size_t gray_length = 0;  // 8n
  std::size_t exp4 = 0;
  std::size_t exp2 = 0;
  std::optional<int> lee_distance;
  std::optional<int> hamming_distance;
};

RCodeParameters parameters(const RCode& c, std::uint64_t budget = kDefaultBudget);

using Rational = boost::rational<long long>;

/// (n - (1/8) sum_t log4|C_t| + 1) - d_H(C). Throws PreconditionViolated for
/// the zero code, whose distance is infinite.
Rational singleton_defect(const RCode& c, std::uint64_t budget = kDefaultBudget);
bool is_mds(const RCode& c, std::uint64_t budget = kDefaultBudget);

/// Same bound for a single Z4 code: n - log4|C| + 1 - d_H.
Rational singleton_defect(const Z4Code& c, std::uint64_t budget = kDefaultBudget);

enum class MdsClass { FullSpace, Repetition, DualRepetition, NotMDS };

const char* to_string(MdsClass m);

/// The only MDS codes over Z4 are Z4^n, <1> and <1>^perp; classification is
/// by canonical-form comparison. The zero code is NotMDS.
MdsClass mds_classify(const Z4Code& z);

}  // namespace z4r
