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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "z4r/bigint.hpp"
#include "z4r/poly.hpp"
#include "z4r/rcode.hpp"
#include "z4r/z4_linalg.hpp"

namespace z4r {

/// The ideal <f + 2p, 2g> of Z4[x]/(x^n - 1).
struct CyclicSpec {
  std::size_t n = 0;
  Z4Poly f;
  Z4Poly p;
  Z4Poly g;

  /// The single-generator form <f1 + 2 f2>.
  static CyclicSpec single(std::size_t n, Z4Poly f1, Z4Poly f2) { return {n, std::move(f1), std::move(f2), {}}; }
};

/// Span of all n cyclic shifts of f + 2p and of 2g.
Z4Code cyclic_code(const CyclicSpec& spec);

struct TypeExponents {
  std::size_t exp4 = 0;
  std::size_t exp2 = 0;
  friend bool operator==(const TypeExponents&, const TypeExponents&) = default;
};

/// |<f1 + 2 f2>| = 4^{n - deg f1} 2^{deg f1 - deg f2} for odd n and monic
/// f2 | f1 | x^n - 1. Throws PreconditionViolated otherwise.
TypeExponents cardinality_exponents(const Z4Poly& f1, const Z4Poly& f2, std::size_t n);
BigInt cardinality_formula(const Z4Poly& f1, const Z4Poly& f2, std::size_t n);

/// The shift of every canonical generator row stays in the code.
bool is_cyclic(const Z4Code& c);
bool is_cyclic_r(const RCode& c);

struct RCyclicSpec {
  std::size_t n = 0;
  std::array<CyclicSpec, 8> components;
};

/// A polynomial over R of degree < n, stored as its coefficient vector.
using RPoly = RVector;

struct RCyclicCode {
  RCode code;
  RPoly generator;  // sum_t eta_t (f_t + 2 p_t)
  RPoly torsion;    // 2 sum_t eta_t g_t
  /// For odd n: sum_t eta_t (f_t + 2 h_t), with h_t = g_t when p_t = 0 and
  /// h_t = p_t when g_t = 0. Absent when a component has both p and g.
  std::optional<RPoly> single_generator;
};

/// Throws LengthMismatch unless every component has length n.
RCyclicCode r_cyclic(const RCyclicSpec& spec);

/// R-span of the shifts of the given polynomials.
RCode r_shift_span(const std::vector<RPoly>& generators, std::size_t n);

struct DualCyclic {
  Z4Code dual;                         // matrix dual, the ground truth
  std::optional<CyclicSpec> candidate;  // <g^*, 2 f^*> when p = 0
  std::string note;                     // why the candidate is absent
  std::optional<bool> candidate_matches;
};

/// The candidate is built only when p = 0 and g | f | x^n - 1 over Z4,
/// with g = 0 read as g = f (<f> = <f, 2f>).
DualCyclic dual_cyclic(const CyclicSpec& spec);

/// Per-block right cyclic shift of s blocks of equal length. Throws
/// LengthMismatch when s does not divide the length.
Z4Vector quasi_shift(std::span<const Z4> v, std::size_t s);
bool is_quasi_cyclic(const Z4Code& c, std::size_t s);

}  // namespace z4r
