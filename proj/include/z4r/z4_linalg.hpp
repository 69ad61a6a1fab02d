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

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "z4r/bigint.hpp"
#include "z4r/errors.hpp"
#include "z4r/ring.hpp"

namespace z4r {

using Z4Vector = std::vector<Z4>;

/// Dense row-major matrix over Z4.
class Z4Matrix {
 public:
  Z4Matrix() = default;
  Z4Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}

  /// Entries are reduced mod 4. `cols` fixes the width when `rows` is empty.
  static Z4Matrix from_rows(const std::vector<Z4Vector>& rows, std::size_t cols);
  static Z4Matrix identity(std::size_t n);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool empty() const { return rows_ == 0; }

  Z4& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  Z4 operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Z4> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Z4> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  void append_row(std::span<const Z4> v);
  std::vector<Z4Vector> to_rows() const;
  Z4Matrix transpose() const;

  friend bool operator==(const Z4Matrix&, const Z4Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Z4> data_;
};

int lee_weight(std::span<const Z4> v);
int hamming_weight(std::span<const Z4> v);
/// Euclidean product mod 4.
Z4 dot(std::span<const Z4> a, std::span<const Z4> b);

/// Canonical Howell form of the row span: echelon, pivots in {1,2}, entries
/// above a pivot reduced below it, zero rows dropped, and closed under the
/// Howell property (every span vector with leading zeros up to a pivot
/// column lies in the span of the rows below it). Equal spans give equal
/// output.
Z4Matrix howell_form(const Z4Matrix& m);

/// Membership test against a matrix already in Howell form.
bool howell_contains(const Z4Matrix& howell, std::span<const Z4> v);

/// Generator (I_k1 A B ; 0 2I_k2 2C) of a permutation-equivalent code.
/// Column j of the block matrix is column `permutation[j]` of the code.
struct StandardForm {
  std::size_t length = 0;
  std::size_t k1 = 0;
  std::size_t k2 = 0;
  Z4Matrix a;  // k1 x k2, entries in {0,1}
  Z4Matrix b;  // k1 x (n-k1-k2)
  Z4Matrix c;  // k2 x (n-k1-k2), entries in {0,1}; the block itself is 2C
  std::vector<std::size_t> permutation;

  /// The block matrix, in permuted coordinates.
  Z4Matrix block_generator() const;
  /// The block matrix with the permutation undone.
  Z4Matrix generator() const;
};

/// Deterministic standard form of the span of `m`, computed from its Howell
/// form: unit pivots are taken at the leftmost column holding an odd entry,
/// then 2-pivots left to right. Remaining columns keep their order.
StandardForm standard_form_of(const Z4Matrix& m);

/// A linear code over Z4 of length n, |C| = 4^k1 2^k2.
class Z4Code {
 public:
  Z4Code() : Z4Code(Z4Matrix(0, 0)) {}
  explicit Z4Code(Z4Matrix generator);

  static Z4Code zero(std::size_t n) { return Z4Code(Z4Matrix(0, n)); }
  static Z4Code full(std::size_t n) { return Z4Code(Z4Matrix::identity(n)); }
  static Z4Code from_rows(const std::vector<Z4Vector>& rows, std::size_t n) {
    return Z4Code(Z4Matrix::from_rows(rows, n));
  }

  std::size_t length() const { return generator_.cols(); }
  const Z4Matrix& generator() const { return generator_; }
  const Z4Matrix& canonical() const { return canonical_; }
  const StandardForm& standard() const { return standard_; }
  std::size_t k1() const { return standard_.k1; }
  std::size_t k2() const { return standard_.k2; }

  /// log2 |C| = 2 k1 + k2.
  std::size_t log2_size() const { return 2 * k1() + k2(); }
  BigInt size() const { return type_size(static_cast<unsigned>(k1()), static_cast<unsigned>(k2())); }
  bool is_zero() const { return canonical_.empty(); }

  bool contains(std::span<const Z4> v) const;

  /// Same length and same span.
  friend bool operator==(const Z4Code& x, const Z4Code& y) {
    return x.length() == y.length() && x.canonical_ == y.canonical_;
  }

 private:
  Z4Matrix generator_;
  Z4Matrix canonical_;
  StandardForm standard_;
};

inline const StandardForm& standard_form(const Z4Code& c) { return c.standard(); }

/// Dual under the Euclidean product, built from the standard-form blocks:
/// (-B^T - C^T A^T  C^T  I ; 2A^T  2I  0), permutation undone.
Z4Code dual_code(const Z4Code& c);

/// Every codeword exactly once, as coefficient sweeps over the standard-form
/// rows. Throws BudgetExceeded when |C| > budget.
std::vector<Z4Vector> codewords(const Z4Code& c, std::uint64_t budget = kDefaultBudget);

enum class Metric { Lee, Hamming };

/// Minimum weight of a nonzero codeword (= minimum distance by linearity);
/// std::nullopt stands for the infinite distance of the zero code.
std::optional<int> min_weight(const Z4Code& c, Metric metric, std::uint64_t budget = kDefaultBudget);

/// Number of codewords of each Lee weight (index 0..2n) and each Hamming
/// weight (index 0..n).
struct WeightDistribution {
  std::vector<std::uint64_t> lee;
  std::vector<std::uint64_t> hamming;
};

WeightDistribution weight_distribution(const Z4Code& c, std::uint64_t budget = kDefaultBudget);

/// Right cyclic shift (c_{n-1}, c_0, ..., c_{n-2}).
Z4Vector cyclic_shift(std::span<const Z4> v);

}  // namespace z4r
