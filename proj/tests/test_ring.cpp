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

#include <random>

#include "doctest.h"
#include "oracles.hpp"
#include "z4r/errors.hpp"
#include "z4r/ring.hpp"

using namespace z4r;

namespace {

StandardCoeffs coeffs(std::initializer_list<int> v) {
  StandardCoeffs s;
  int i = 0;
  for (int x : v) s.c[static_cast<std::size_t>(i++)] = static_cast<Z4>(x);
  return s;
}

oracle::Coeffs as_oracle(const StandardCoeffs& s) {
  oracle::Coeffs o{};
  for (std::size_t i = 0; i < 8; ++i) o[i] = s.c[i];
  return o;
}

StandardCoeffs from_oracle(const oracle::Coeffs& o) {
  StandardCoeffs s;
  for (std::size_t i = 0; i < 8; ++i) s.c[i] = static_cast<Z4>(o[i]);
  return s;
}

StandardCoeffs random_coeffs(std::mt19937_64& rng) {
  StandardCoeffs s;
  for (auto& x : s.c) x = static_cast<Z4>(rng() % 4);
  return s;
}

}  // namespace

TEST_SUITE("ring") {
  TEST_CASE("decompose examples") {
    CHECK(crt_decompose(coeffs({1, 0, 0, 0, 0, 0, 0, 0})) == RingElement::one());
    CHECK(crt_decompose(coeffs({})).is_zero());
    CHECK(crt_decompose(coeffs({0, 1})) == RingElement::from_crt({0, 1, 0, 0, 1, 1, 0, 1}));
    // u = eta_2 + eta_5 + eta_6 + eta_8
    const RingElement u = RingElement::idempotent(1) + RingElement::idempotent(4) + RingElement::idempotent(5) +
                          RingElement::idempotent(7);
    CHECK(crt_decompose(coeffs({0, 1})) == u);
  }

  TEST_CASE("compose examples") {
    CHECK(crt_compose(RingElement::one()) == coeffs({1}));
    CHECK(crt_compose(RingElement::from_crt({0, 1, 0, 0, 1, 1, 0, 1})) == coeffs({0, 1}));
    CHECK(crt_compose(RingElement::idempotent(0)) == coeffs({1, 3, 3, 3, 1, 1, 1, 3}));
  }

  TEST_CASE("round trip over all elements") {
    for (std::uint32_t b = 0; b < kRingOrder; ++b) {
      const auto r = RingElement::from_bits(static_cast<std::uint16_t>(b));
      REQUIRE(crt_decompose(crt_compose(r)) == r);
    }
  }

  TEST_CASE("decompose agrees with evaluation at the points of {0,1}^3") {
    std::mt19937_64 rng(11);
    for (int i = 0; i < 2000; ++i) {
      const StandardCoeffs s = random_coeffs(rng);
      const auto pts = oracle::evaluate_all(as_oracle(s));
      const RingElement r = crt_decompose(s);
      for (int t = 0; t < 8; ++t) REQUIRE(r.coord(t) == pts[static_cast<std::size_t>(t)]);
    }
  }

  TEST_CASE("homomorphism against symbolic multiplication") {
    std::mt19937_64 rng(5);
    for (int i = 0; i < 20000; ++i) {
      const StandardCoeffs x = random_coeffs(rng), y = random_coeffs(rng);
      const auto prod = from_oracle(oracle::multiply(as_oracle(x), as_oracle(y)));
      const auto sum = from_oracle(oracle::add(as_oracle(x), as_oracle(y)));
      REQUIRE(crt_decompose(prod) == crt_decompose(x) * crt_decompose(y));
      REQUIRE(crt_decompose(sum) == crt_decompose(x) + crt_decompose(y));
    }
  }

  TEST_CASE("idempotents") {
    RingElement total;
    for (int i = 0; i < 8; ++i) {
      const auto ei = RingElement::idempotent(i);
      total += ei;
      for (int j = 0; j < 8; ++j) {
        const auto prod = ei * RingElement::idempotent(j);
        CHECK(prod == (i == j ? ei : RingElement::zero()));
      }
    }
    CHECK(total == RingElement::one());
  }

  TEST_CASE("negation and subtraction") {
    std::mt19937_64 rng(3);
    for (int i = 0; i < 1000; ++i) {
      const auto x = RingElement::from_bits(static_cast<std::uint16_t>(rng()));
      const auto y = RingElement::from_bits(static_cast<std::uint16_t>(rng()));
      CHECK((x - y) + y == x);
      CHECK(x + (-x) == RingElement::zero());
    }
  }

  TEST_CASE("units") {
    CHECK(is_unit(RingElement::one()));
    CHECK_FALSE(is_unit(RingElement::idempotent(0)));
    CHECK(is_unit(RingElement::constant(3)));
    CHECK_FALSE(is_unit(RingElement::constant(2)));
    int units = 0;
    for (std::uint32_t b = 0; b < kRingOrder; ++b) units += is_unit(RingElement::from_bits(static_cast<std::uint16_t>(b)));
    CHECK(units == 256);
  }

  TEST_CASE("character") {
    CHECK(chi(RingElement::zero()) == 0);
    CHECK(chi(parse_element("uvw")) == 1);
    CHECK(chi(parse_element("2uvw")) == 2);
    CHECK(chi(parse_element("1+3u+2uv")) == 0);
    long long re = 0, im = 0;
    for (std::uint32_t b = 0; b < kRingOrder; ++b) {
      const int e = chi(RingElement::from_bits(static_cast<std::uint16_t>(b)));
      re += e == 0 ? 1 : e == 2 ? -1 : 0;
      im += e == 1 ? 1 : e == 3 ? -1 : 0;
    }
    CHECK(re == 0);
    CHECK(im == 0);
    std::mt19937_64 rng(9);
    for (int i = 0; i < 5000; ++i) {
      const auto x = RingElement::from_bits(static_cast<std::uint16_t>(rng()));
      const auto y = RingElement::from_bits(static_cast<std::uint16_t>(rng()));
      REQUIRE(chi(x + y) == (chi(x) + chi(y)) % 4);
      REQUIRE(chi(x) == crt_compose(x).c[7]);
    }
  }

  TEST_CASE("lee weight") {
    CHECK(lee_weight(RingElement::zero()) == 0);
    CHECK(lee_weight(RingElement::one()) == 8);
    CHECK(lee_weight(RingElement::constant(2)) == 16);
    CHECK(lee_weight(RingElement::constant(3)) == 8);
    CHECK(lee_weight(RVector{RingElement::one(), RingElement::idempotent(2)}) == 9);
    CHECK(hamming_weight(RVector{RingElement::one(), RingElement::zero()}) == 1);
  }

  TEST_CASE("class table") {
    const LeeClassTable& t = lee_class_table();
    const std::array<std::uint32_t, 9> printed{1, 16, 120, 560, 1820, 4368, 8008, 11440, 12870};
    std::uint32_t total = 0;
    for (int k = 0; k <= 16; ++k) {
      CHECK(t.sizes[static_cast<std::size_t>(k)] == oracle::binom(16, k));
      CHECK(t.sizes[static_cast<std::size_t>(k)] == printed[static_cast<std::size_t>(k <= 8 ? k : 16 - k)]);
      total += t.sizes[static_cast<std::size_t>(k)];
      for (auto r : t.members[static_cast<std::size_t>(k)]) REQUIRE(t.class_of[r.bits()] == k);
    }
    CHECK(total == kRingOrder);
  }

  TEST_CASE("parsing and printing") {
    CHECK(parse_element("1") == RingElement::one());
    CHECK(parse_element("0") == RingElement::zero());
    CHECK(parse_element("u") == crt_decompose(coeffs({0, 1})));
    CHECK(parse_element("wu") == parse_element("uw"));
    CHECK(parse_element("[1,0,0,0,0,0,0,0]") == RingElement::idempotent(0));
    CHECK(parse_element(" 1 + 3u + 2 vw ") == crt_decompose(coeffs({1, 3, 0, 0, 0, 0, 2})));
    CHECK(to_standard_string(RingElement::idempotent(0)) == "1+3u+3v+3w+uv+uw+vw+3uvw");
    CHECK(to_standard_string(RingElement::zero()) == "0");
    CHECK(to_crt_string(RingElement::one()) == "[1,1,1,1,1,1,1,1]");
    for (std::uint32_t b = 0; b < kRingOrder; b += 97) {
      const auto r = RingElement::from_bits(static_cast<std::uint16_t>(b));
      REQUIRE(parse_element(to_standard_string(r)) == r);
      REQUIRE(parse_element(to_crt_string(r)) == r);
    }
    CHECK_THROWS_AS(parse_element("4u"), ParseError);
    CHECK_THROWS_AS(parse_element("uu"), ParseError);
    CHECK_THROWS_AS(parse_element("x"), ParseError);
    CHECK_THROWS_AS(parse_element("1+"), ParseError);
    CHECK_THROWS_AS(parse_element("[1,2,3]"), ParseError);
    CHECK_THROWS_AS(parse_element(""), ParseError);
  }
}
