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

#include "z4r/rcode.hpp"

#include <algorithm>

namespace z4r {

RCode::RCode(std::array<Z4Code, 8> components) : components_(std::move(components)) {
  for (const auto& c : components_)
    if (c.length() != components_[0].length())
      throw LengthMismatch("components have lengths " + std::to_string(components_[0].length()) + " and " +
                           std::to_string(c.length()));
}

RCode RCode::zero(std::size_t n) { return uniform(Z4Code::zero(n)); }

RCode RCode::full(std::size_t n) { return uniform(Z4Code::full(n)); }

RCode RCode::uniform(const Z4Code& c) {
  std::array<Z4Code, 8> comps;
  comps.fill(c);
  return RCode(std::move(comps));
}

std::size_t RCode::exp4() const {
  std::size_t s = 0;
  for (const auto& c : components_) s += c.k1();
  return s;
}

std::size_t RCode::exp2() const {
  std::size_t s = 0;
  for (const auto& c : components_) s += c.k2();
  return s;
}

BigInt RCode::size() const { return type_size(static_cast<unsigned>(exp4()), static_cast<unsigned>(exp2())); }

bool RCode::is_zero() const {
  return std::all_of(components_.begin(), components_.end(), [](const Z4Code& c) { return c.is_zero(); });
}

bool RCode::contains(const RVector& x) const {
  if (x.size() != length()) throw LengthMismatch("vector length differs from code length");
  for (int t = 0; t < kSlots; ++t)
    if (!component(t).contains(slot_vector(x, t))) return false;
  return true;
}

RCode dual(const RCode& c) {
  std::array<Z4Code, 8> comps;
  for (int t = 0; t < kSlots; ++t) comps[static_cast<std::size_t>(t)] = dual_code(c.component(t));
  return RCode(std::move(comps));
}

Z4Vector slot_vector(const RVector& x, int t) {
  Z4Vector v(x.size());
  for (std::size_t j = 0; j < x.size(); ++j) v[j] = x[j].coord(t);
  return v;
}

Z4Vector gray_map(const RVector& x) {
  const std::size_t n = x.size();
  Z4Vector g(8 * n);
  for (int t = 0; t < kSlots; ++t)
    for (std::size_t j = 0; j < n; ++j) g[static_cast<std::size_t>(t) * n + j] = x[j].coord(t);
  return g;
}

RVector gray_inverse(std::span<const Z4> g) {
  if (g.size() % 8 != 0) throw LengthMismatch("Gray vector length " + std::to_string(g.size()) + " is not a multiple of 8");
  const std::size_t n = g.size() / 8;
  RVector x(n);
  for (std::size_t j = 0; j < n; ++j) {
    std::array<Z4, 8> crt{};
    for (int t = 0; t < kSlots; ++t) crt[static_cast<std::size_t>(t)] = g[static_cast<std::size_t>(t) * n + j];
    x[j] = RingElement::from_crt(crt);
  }
  return x;
}

std::vector<RVector> generator_matrix(const RCode& c) {
  std::vector<RVector> rows;
  const std::size_t n = c.length();
  for (int t = 0; t < kSlots; ++t) {
    const Z4Matrix& g = c.component(t).generator();
    for (std::size_t r = 0; r < g.rows(); ++r) {
      if (hamming_weight(g.row(r)) == 0) continue;
      RVector v(n);
      for (std::size_t j = 0; j < n; ++j) v[j] = RingElement::idempotent(t) * RingElement::constant(g(r, j));
      rows.push_back(std::move(v));
    }
  }
  return rows;
}

Z4Matrix gray_image_generator(const RCode& c) {
  Z4Matrix m(0, 8 * c.length());
  for (const auto& row : generator_matrix(c)) m.append_row(gray_map(row));
  return m;
}

Z4Code gray_image(const RCode& c) { return Z4Code(gray_image_generator(c)); }

RCode r_span(const std::vector<RVector>& rows, std::size_t n) {
  std::array<Z4Code, 8> comps;
  for (int t = 0; t < kSlots; ++t) {
    Z4Matrix m(0, n);
    for (const auto& r : rows) {
      if (r.size() != n) throw LengthMismatch("generator row of the wrong length");
      m.append_row(slot_vector(r, t));
    }
    comps[static_cast<std::size_t>(t)] = Z4Code(std::move(m));
  }
  return RCode(std::move(comps));
}

std::optional<int> min_distance(const RCode& c, Metric metric, std::uint64_t budget) {
  std::optional<int> best;
  for (const auto& comp : c.components()) {
    const auto d = min_weight(comp, metric, budget);
    if (d && (!best || *d < *best)) best = d;
  }
  return best;
}

RCodeParameters parameters(const RCode& c, std::uint64_t budget) {
  RCodeParameters p;
  p.gray_length = 8 * c.length();
  p.exp4 = c.exp4();
  p.exp2 = c.exp2();
  p.lee_distance = min_distance(c, Metric::Lee, budget);
  p.hamming_distance = min_distance(c, Metric::Hamming, budget);
  return p;
}

Rational singleton_defect(const RCode& c, std::uint64_t budget) {
  const auto d = min_distance(c, Metric::Hamming, budget);
  if (!d) throw PreconditionViolated("Singleton defect of the zero code is undefined");
  const auto n = static_cast<long long>(c.length());
  // (1/8) sum_t log4|C_t| = log2|C| / 16
  return Rational(n + 1) - Rational(static_cast<long long>(c.log2_size()), 16) - Rational(*d);
}

bool is_mds(const RCode& c, std::uint64_t budget) {
  if (c.is_zero()) return false;
  return singleton_defect(c, budget) == Rational(0);
}

Rational singleton_defect(const Z4Code& c, std::uint64_t budget) {
  const auto d = min_weight(c, Metric::Hamming, budget);
  if (!d) throw PreconditionViolated("Singleton defect of the zero code is undefined");
  const auto n = static_cast<long long>(c.length());
  return Rational(n + 1) - Rational(static_cast<long long>(c.log2_size()), 2) - Rational(*d);
}

const char* to_string(MdsClass m) {
  switch (m) {
    case MdsClass::FullSpace: return "full-space";
    case MdsClass::Repetition: return "repetition";
    case MdsClass::DualRepetition: return "dual-repetition";
    case MdsClass::NotMDS: break;
  }
  return "not-mds";
}

MdsClass mds_classify(const Z4Code& z) {
  const std::size_t n = z.length();
  if (z.is_zero() || n == 0) return MdsClass::NotMDS;
  if (z == Z4Code::full(n)) return MdsClass::FullSpace;
  const Z4Code rep = Z4Code::from_rows({Z4Vector(n, 1)}, n);
  if (z == rep) return MdsClass::Repetition;
  if (z == dual_code(rep)) return MdsClass::DualRepetition;
  return MdsClass::NotMDS;
}

}  // namespace z4r
