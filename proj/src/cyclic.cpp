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

#include "z4r/cyclic.hpp"

namespace z4r {

namespace {

Z4Vector rotate_right(const Z4Vector& v) { return cyclic_shift(v); }

std::vector<Z4Vector> shifts(Z4Vector v) {
  std::vector<Z4Vector> out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    out.push_back(v);
    v = rotate_right(v);
  }
  return out;
}

RVector rotate_right(const RVector& v) {
  RVector out(v.size());
  for (std::size_t j = 0; j < v.size(); ++j) out[(j + 1) % v.size()] = v[j];
  return out;
}

RPoly embed(const Z4Poly& p, std::size_t n, int slot) {
  RPoly out(n);
  const auto v = p.as_vector(n);
  for (std::size_t j = 0; j < n; ++j)
    out[j] = RingElement::idempotent(slot) * RingElement::constant(v[j]);
  return out;
}

void add_into(RPoly& acc, const RPoly& x) {
  for (std::size_t j = 0; j < acc.size(); ++j) acc[j] += x[j];
}

}  // namespace

Z4Code cyclic_code(const CyclicSpec& spec) {
  const std::size_t n = spec.n;
  Z4Matrix m(0, n);
  for (const auto& row : shifts((spec.f + 2 * spec.p).as_vector(n))) m.append_row(row);
  for (const auto& row : shifts((2 * spec.g).as_vector(n))) m.append_row(row);
  return Z4Code(std::move(m));
}

TypeExponents cardinality_exponents(const Z4Poly& f1, const Z4Poly& f2, std::size_t n) {
  if (n % 2 == 0) throw PreconditionViolated("cardinality formula needs odd n, got " + std::to_string(n));
  if (!f1.is_monic() || !f2.is_monic()) throw PreconditionViolated("f1 and f2 must be monic");
  if (!poly_divides(f1, Z4Poly::cyclotomic_modulus(n)))
    throw PreconditionViolated(f1.to_string() + " does not divide x^" + std::to_string(n) + "-1");
  if (!poly_divides(f2, f1)) throw PreconditionViolated(f2.to_string() + " does not divide " + f1.to_string());
  const auto d1 = static_cast<std::size_t>(f1.degree());
  const auto d2 = static_cast<std::size_t>(f2.degree());
  return {n - d1, d1 - d2};
}

BigInt cardinality_formula(const Z4Poly& f1, const Z4Poly& f2, std::size_t n) {
  const TypeExponents t = cardinality_exponents(f1, f2, n);
  return type_size(static_cast<unsigned>(t.exp4), static_cast<unsigned>(t.exp2));
}

bool is_cyclic(const Z4Code& c) {
  const Z4Matrix& h = c.canonical();
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (!c.contains(cyclic_shift(h.row(r)))) return false;
  return true;
}

bool is_cyclic_r(const RCode& c) {
  for (const auto& comp : c.components())
    if (!is_cyclic(comp)) return false;
  return true;
}

RCode r_shift_span(const std::vector<RPoly>& generators, std::size_t n) {
  std::vector<RVector> rows;
  for (RPoly g : generators) {
    if (g.size() != n) throw LengthMismatch("generator polynomial of the wrong length");
    for (std::size_t i = 0; i < n; ++i) {
      rows.push_back(g);
      g = rotate_right(g);
    }
  }
  return r_span(rows, n);
}

RCyclicCode r_cyclic(const RCyclicSpec& spec) {
  const std::size_t n = spec.n;
  std::array<Z4Code, 8> comps;
  RPoly gen(n), tor(n), single(n);
  bool single_ok = n % 2 == 1;
  for (int t = 0; t < kSlots; ++t) {
    const CyclicSpec& cs = spec.components[static_cast<std::size_t>(t)];
    if (cs.n != n)
      throw LengthMismatch("component " + std::to_string(t + 1) + " has length " + std::to_string(cs.n) +
                           ", expected " + std::to_string(n));
    comps[static_cast<std::size_t>(t)] = cyclic_code(cs);
    add_into(gen, embed(cs.f + 2 * cs.p, n, t));
    add_into(tor, embed(2 * cs.g, n, t));
    if (!cs.p.is_zero() && !cs.g.is_zero()) single_ok = false;
    const Z4Poly h = cs.p.is_zero() ? cs.g : cs.p;
    add_into(single, embed(cs.f + 2 * h, n, t));
  }
  RCyclicCode out{RCode(std::move(comps)), std::move(gen), std::move(tor), std::nullopt};
  if (single_ok) out.single_generator = std::move(single);
  return out;
}

DualCyclic dual_cyclic(const CyclicSpec& spec) {
  const std::size_t n = spec.n;
  DualCyclic out{dual_code(cyclic_code(spec)), std::nullopt, {}, std::nullopt};
  if (!spec.p.is_zero()) {
    out.note = "p is nonzero: the general dual generator needs a polynomial the construction leaves undefined";
    return out;
  }
  const Z4Poly modulus = Z4Poly::cyclotomic_modulus(n);
  const Z4Poly g = spec.g.is_zero() ? spec.f : spec.g;
  if (spec.f.is_zero() || !poly_divides(spec.f, modulus) || !poly_divides(g, modulus) || !poly_divides(g, spec.f)) {
    out.note = "candidate needs g | f | x^n-1 over Z4";
    return out;
  }
  CyclicSpec cand{n, reciprocal(hat(g, n)), {}, reciprocal(hat(spec.f, n))};
  out.candidate_matches = cyclic_code(cand) == out.dual;
  out.candidate = std::move(cand);
  return out;
}

Z4Vector quasi_shift(std::span<const Z4> v, std::size_t s) {
  if (s == 0 || v.size() % s != 0)
    throw LengthMismatch("length " + std::to_string(v.size()) + " is not a multiple of " + std::to_string(s));
  const std::size_t n = v.size() / s;
  Z4Vector out(v.size());
  for (std::size_t b = 0; b < s; ++b)
    for (std::size_t j = 0; j < n; ++j) out[b * n + (j + 1) % n] = v[b * n + j];
  return out;
}

bool is_quasi_cyclic(const Z4Code& c, std::size_t s) {
  const Z4Matrix& h = c.canonical();
  if (s == 0 || c.length() % s != 0)
    throw LengthMismatch("length " + std::to_string(c.length()) + " is not a multiple of " + std::to_string(s));
  for (std::size_t r = 0; r < h.rows(); ++r)
    if (!c.contains(quasi_shift(h.row(r), s))) return false;
  return true;
}

}  // namespace z4r
