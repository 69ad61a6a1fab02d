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
#include <initializer_list>
#include <limits>
#include <string>
#include <vector>

#include "z4r/errors.hpp"
#include "z4r/ring.hpp"

namespace z4r {

/// Polynomial over Z4, coefficients low to high with no trailing zeros.
class Z4Poly {
 public:
  static constexpr int kZeroDegree = std::numeric_limits<int>::min();

  Z4Poly() = default;
  Z4Poly(std::initializer_list<int> coeffs);
  explicit Z4Poly(const std::vector<int>& coeffs);

  static Z4Poly monomial(std::size_t k, int c = 1);
  /// x^n - 1, i.e. x^n + 3.
  static Z4Poly cyclotomic_modulus(std::size_t n);

  /// kZeroDegree for the zero polynomial.
  int degree() const { return coeffs_.empty() ? kZeroDegree : static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  Z4 operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Z4{0}; }
  const std::vector<Z4>& coeffs() const { return coeffs_; }

  /// Coefficient vector of length n after reduction mod x^n - 1.
  std::vector<Z4> as_vector(std::size_t n) const;

  friend Z4Poly operator+(const Z4Poly& a, const Z4Poly& b);
  friend Z4Poly operator-(const Z4Poly& a, const Z4Poly& b);
  friend Z4Poly operator*(const Z4Poly& a, const Z4Poly& b);
  friend Z4Poly operator*(int k, const Z4Poly& a);
  friend bool operator==(const Z4Poly&, const Z4Poly&) = default;

  /// Mod 2 image, with coefficients in {0,1}.
  Z4Poly mod2() const;

  /// e.g. "x^3+2x+3"
  std::string to_string() const;

 private:
  void trim();
  std::vector<Z4> coeffs_;
};

/// a * b mod (x^n - 1).
Z4Poly poly_mul_mod(const Z4Poly& a, const Z4Poly& b, std::size_t n);
Z4Poly poly_mod(const Z4Poly& a, std::size_t n);

struct PolyDivision {
  Z4Poly quotient;
  Z4Poly remainder;
};

/// Division by a polynomial whose leading coefficient is a unit. Throws
/// NotDivisible if the divisor is zero or its leading coefficient is 2.
PolyDivision poly_divmod(const Z4Poly& a, const Z4Poly& b);
/// Throws NotDivisible when the remainder is nonzero.
Z4Poly poly_divexact(const Z4Poly& a, const Z4Poly& b);
bool poly_divides(const Z4Poly& d, const Z4Poly& a);

/// x^{deg f} f(1/x): the coefficient window up to deg f reversed. Degree
/// drops when f(0) = 0.
Z4Poly reciprocal(const Z4Poly& f);
/// (x^n - 1) / f; throws NotDivisible.
Z4Poly hat(const Z4Poly& f, std::size_t n);

/// Product of the factors equals x^n - 1 over Z4.
bool validate_factorization(std::size_t n, const std::vector<Z4Poly>& factors);
/// Same test over Z2.
bool validate_factorization_mod2(std::size_t n, const std::vector<Z4Poly>& factors);

Z4Poly product(const std::vector<Z4Poly>& factors);

}  // namespace z4r
