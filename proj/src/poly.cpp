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

#include "z4r/poly.hpp"

#include <algorithm>

namespace z4r {

namespace {

Z4 m4(int x) { return static_cast<Z4>(((x % 4) + 4) % 4); }

}  // namespace

Z4Poly::Z4Poly(std::initializer_list<int> coeffs) : Z4Poly(std::vector<int>(coeffs)) {}

Z4Poly::Z4Poly(const std::vector<int>& coeffs) {
  coeffs_.reserve(coeffs.size());
  for (int c : coeffs) coeffs_.push_back(m4(c));
  trim();
}

void Z4Poly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Z4Poly Z4Poly::monomial(std::size_t k, int c) {
  std::vector<int> v(k + 1, 0);
  v[k] = c;
  return Z4Poly(v);
}

Z4Poly Z4Poly::cyclotomic_modulus(std::size_t n) { return monomial(n) - Z4Poly{1}; }

std::vector<Z4> Z4Poly::as_vector(std::size_t n) const {
  std::vector<Z4> v(n, 0);
  if (n == 0) return v;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i % n] = m4(v[i % n] + coeffs_[i]);
  return v;
}

Z4Poly operator+(const Z4Poly& a, const Z4Poly& b) {
  Z4Poly r;
  r.coeffs_.assign(std::max(a.coeffs_.size(), b.coeffs_.size()), 0);
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = m4(a[i] + b[i]);
  r.trim();
  return r;
}

Z4Poly operator-(const Z4Poly& a, const Z4Poly& b) { return a + 3 * b; }

Z4Poly operator*(const Z4Poly& a, const Z4Poly& b) {
  Z4Poly r;
  if (a.is_zero() || b.is_zero()) return r;
  r.coeffs_.assign(a.coeffs_.size() + b.coeffs_.size() - 1, 0);
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j)
      r.coeffs_[i + j] = m4(r.coeffs_[i + j] + a.coeffs_[i] * b.coeffs_[j]);
  r.trim();
  return r;
}

Z4Poly operator*(int k, const Z4Poly& a) {
  Z4Poly r = a;
  for (auto& c : r.coeffs_) c = m4(k * c);
  r.trim();
  return r;
}

Z4Poly Z4Poly::mod2() const {
  Z4Poly r = *this;
  for (auto& c : r.coeffs_) c &= 1;
  r.trim();
  return r;
}

std::string Z4Poly::to_string() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    const int c = coeffs_[i];
    if (c == 0) continue;
    if (!out.empty()) out += '+';
    if (c != 1 || i == 0) out += static_cast<char>('0' + c);
    if (i >= 1) out += 'x';
    if (i >= 2) out += '^' + std::to_string(i);
  }
  return out;
}

Z4Poly poly_mod(const Z4Poly& a, std::size_t n) {
  const auto v = a.as_vector(n);
  return Z4Poly(std::vector<int>(v.begin(), v.end()));
}

Z4Poly poly_mul_mod(const Z4Poly& a, const Z4Poly& b, std::size_t n) { return poly_mod(a * b, n); }

PolyDivision poly_divmod(const Z4Poly& a, const Z4Poly& b) {
  if (b.is_zero()) throw NotDivisible("division by the zero polynomial");
  const int lead = b.coeffs().back();
  if (lead % 2 == 0) throw NotDivisible("divisor " + b.to_string() + " has a non-unit leading coefficient");
  const int inv = lead;  // 1*1 = 3*3 = 1 mod 4
  std::vector<int> rem(a.coeffs().begin(), a.coeffs().end());
  const int db = b.degree();
  std::vector<int> quo(rem.size() >= static_cast<std::size_t>(db) + 1 ? rem.size() - static_cast<std::size_t>(db) : 0, 0);
  for (int i = static_cast<int>(rem.size()) - 1; i >= db; --i) {
    const int c = (rem[static_cast<std::size_t>(i)] * inv) % 4;
    if (c == 0) continue;
    quo[static_cast<std::size_t>(i - db)] = c;
    for (int j = 0; j <= db; ++j) {
      auto& r = rem[static_cast<std::size_t>(i - db + j)];
      r = ((r - c * b[static_cast<std::size_t>(j)]) % 4 + 4) % 4;
    }
  }
  return {Z4Poly(quo), Z4Poly(rem)};
}

Z4Poly poly_divexact(const Z4Poly& a, const Z4Poly& b) {
  PolyDivision d = poly_divmod(a, b);
  if (!d.remainder.is_zero())
    throw NotDivisible(b.to_string() + " does not divide " + a.to_string() + " (remainder " +
                       d.remainder.to_string() + ")");
  return d.quotient;
}

bool poly_divides(const Z4Poly& d, const Z4Poly& a) {
  try {
    return poly_divmod(a, d).remainder.is_zero();
  } catch (const NotDivisible&) {
    return false;
  }
}

Z4Poly reciprocal(const Z4Poly& f) {
  std::vector<int> v(f.coeffs().rbegin(), f.coeffs().rend());
  return Z4Poly(v);
}

Z4Poly hat(const Z4Poly& f, std::size_t n) { return poly_divexact(Z4Poly::cyclotomic_modulus(n), f); }

Z4Poly product(const std::vector<Z4Poly>& factors) {
  Z4Poly p{1};
  for (const auto& f : factors) p = p * f;
  return p;
}

bool validate_factorization(std::size_t n, const std::vector<Z4Poly>& factors) {
  return product(factors) == Z4Poly::cyclotomic_modulus(n);
}

bool validate_factorization_mod2(std::size_t n, const std::vector<Z4Poly>& factors) {
  Z4Poly p{1};
  for (const auto& f : factors) p = (p * f.mod2()).mod2();
  return p == Z4Poly::cyclotomic_modulus(n).mod2();
}

}  // namespace z4r
