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
#include <set>

#include "doctest.h"
#include "oracles.hpp"
#include "z4r/errors.hpp"
#include "z4r/rcode.hpp"

using namespace z4r;

namespace {

const std::vector<Z4Vector> kBlockExample{{1, 1, 1, 3}, {0, 2, 0, 2}, {0, 0, 2, 2}};

RVector random_rvector(std::mt19937_64& rng, std::size_t n) {
  RVector x(n);
  for (auto& r : x) r = RingElement::from_bits(static_cast<std::uint16_t>(rng()));
  return x;
}

RCode random_rcode(std::mt19937_64& rng, std::size_t n, std::size_t max_rows) {
  std::array<Z4Code, 8> comps;
  for (auto& c : comps) c = oracle::random_code(rng, n, rng() % (max_rows + 1));
  return RCode(comps);
}

// Every codeword of C as sums of eta_t c_t.
std::vector<RVector> all_codewords(const RCode& c) {
  std::vector<RVector> words{RVector(c.length())};
  for (int t = 0; t < 8; ++t) {
    std::vector<RVector> next;
    for (const auto& z : codewords(c.component(t)))
      for (const auto& w : words) {
        RVector v = w;
        for (std::size_t j = 0; j < v.size(); ++j) v[j] += RingElement::idempotent(t) * RingElement::constant(z[j]);
        next.push_back(std::move(v));
      }
    words = std::move(next);
  }
  return words;
}

}  // namespace

TEST_SUITE("codes_r") {
  TEST_CASE("gray map examples") {
    CHECK(gray_map(RVector(3)) == Z4Vector(24, 0));
    CHECK(gray_map(RVector{RingElement::one()}) == Z4Vector(8, 1));
    Z4Vector expect(16, 0);
    expect[0] = 1;
    CHECK(gray_map(RVector{RingElement::idempotent(0), RingElement::zero()}) == expect);
    CHECK_THROWS_AS(gray_inverse(Z4Vector(7, 0)), LengthMismatch);
  }

  TEST_CASE("gray isometry and linearity") {
    std::mt19937_64 rng(31);
    for (int i = 0; i < 20000; ++i) {
      const std::size_t n = 1 + rng() % 8;
      const RVector x = random_rvector(rng, n), y = random_rvector(rng, n);
      RVector s(n), d(n);
      for (std::size_t j = 0; j < n; ++j) {
        s[j] = x[j] + y[j];
        d[j] = x[j] - y[j];
      }
      const Z4Vector gx = gray_map(x), gy = gray_map(y);
      REQUIRE(gray_inverse(gx) == x);
      REQUIRE(lee_weight(gx) == lee_weight(x));
      Z4Vector gs(gx.size()), gd(gx.size());
      for (std::size_t k = 0; k < gx.size(); ++k) {
        gs[k] = static_cast<Z4>((gx[k] + gy[k]) % 4);
        gd[k] = static_cast<Z4>((gx[k] + 4 - gy[k]) % 4);
      }
      REQUIRE(gray_map(s) == gs);
      REQUIRE(lee_weight(gd) == lee_weight(d));
    }
  }

  TEST_CASE("build and size") {
    CHECK(RCode::zero(2).size() == 1);
    CHECK(RCode::full(2).size() == BigInt(65536) * 65536);
    const RCode ex = RCode::uniform(Z4Code::from_rows(kBlockExample, 4));
    CHECK(ex.size() == pow_big(16, 8));
    CHECK(ex.size() == pow_big(4, 16));
    std::array<Z4Code, 8> bad;
    bad.fill(Z4Code::zero(2));
    bad[3] = Z4Code::zero(3);
    CHECK_THROWS_AS(RCode{bad}, LengthMismatch);
  }

  TEST_CASE("membership law") {
    std::mt19937_64 rng(32);
    for (int iter = 0; iter < 40; ++iter) {
      const std::size_t n = 1 + rng() % 3;
      const RCode c = random_rcode(rng, n, 2);
      for (const auto& w : all_codewords(c)) REQUIRE(c.contains(w));
      for (int i = 0; i < 50; ++i) {
        const RVector x = random_rvector(rng, n);
        bool in = true;
        for (int t = 0; t < 8; ++t) in = in && c.component(t).contains(slot_vector(x, t));
        REQUIRE(c.contains(x) == in);
      }
    }
  }

  TEST_CASE("dual") {
    CHECK(dual(RCode::full(2)) == RCode::zero(2));
    CHECK(dual(RCode::zero(2)) == RCode::full(2));
    const RCode twos = RCode::uniform(Z4Code::from_rows({{2}}, 1));
    CHECK(dual(twos) == twos);
    CHECK(twos.size() == 256);
    std::mt19937_64 rng(33);
    for (int iter = 0; iter < 30; ++iter) {
      const std::size_t n = 1 + rng() % 4;
      const RCode c = random_rcode(rng, n, 3);
      const RCode d = dual(c);
      REQUIRE(c.size() * d.size() == pow_big(4, static_cast<unsigned>(8 * n)));
      // Gray image of the dual is the Z4 dual of the Gray image.
      REQUIRE(gray_image(d) == dual_code(gray_image(c)));
    }
  }

  TEST_CASE("generator matrix") {
    CHECK(generator_matrix(RCode::zero(3)).empty());
    const RCode ex = RCode::uniform(Z4Code::from_rows(kBlockExample, 4));
    const auto g = generator_matrix(ex);
    CHECK(g.size() == 24);
    CHECK(r_span(g, 4) == ex);
    std::array<Z4Code, 8> one;
    one.fill(Z4Code::zero(1));
    one[0] = Z4Code::full(1);
    const auto g1 = generator_matrix(RCode(one));
    REQUIRE(g1.size() == 1);
    CHECK(g1[0] == RVector{RingElement::idempotent(0)});
  }

  TEST_CASE("gray image generator") {
    CHECK(gray_image_generator(RCode::zero(2)).rows() == 0);
    std::array<Z4Code, 8> comps;
    comps.fill(Z4Code::zero(2));
    comps[2] = Z4Code::from_rows({{1, 1}}, 2);
    const Z4Matrix g = gray_image_generator(RCode(comps));
    REQUIRE(g.rows() == 1);
    Z4Vector expect(16, 0);
    expect[4] = expect[5] = 1;
    CHECK(Z4Vector(g.row(0).begin(), g.row(0).end()) == expect);
  }

  TEST_CASE("published block example generator up to interleaving") {
    // Columns in the printed 24x32 matrix are position-major (8j + slot).
    const char* printed[] = {
      "10000000100000001000000030000000",
      "00000000200000000000000020000000",
      "00000000000000002000000020000000",
      "01000000010000000100000003000000",
      "00000000020000000000000002000000",
      "00000000000000000200000002000000",
      "00100000001000000010000000300000",
      "00000000002000000000000000200000",
      "00000000000000000020000000200000",
      "00010000000100000001000000030000",
      "00000000000200000000000000020000",
      "00000000000000000002000000020000",
      "00001000000010000000100000003000",
      "00000000000020000000000000002000",
      "00000000000000000000200000002000",
      "00000100000001000000010000000300",
      "00000000000002000000000000000200",
      "00000000000000000000020000000200",
      "00000010000000100000001000000030",
      "00000000000000200000000000000020",
      "00000000000000000000002000000020",
      "00000001000000010000000100000003",
      "00000000000000020000000000000002",
      "00000000000000000000000200000002",
    };
    std::array<Z4Code, 8> comps;
    comps.fill(Z4Code::from_rows(kBlockExample, 4));
    const Z4Matrix ours = gray_image_generator(RCode(comps));
    REQUIRE(ours.rows() == 24);
    std::vector<Z4Vector> permuted;
    for (const char* row : printed) {
      Z4Vector v(32);
      for (std::size_t j = 0; j < 4; ++j)
        for (std::size_t t = 0; t < 8; ++t) v[t * 4 + j] = static_cast<Z4>(row[8 * j + t] - '0');
      permuted.push_back(v);
    }
    CHECK(permuted == ours.to_rows());
    CHECK(Z4Code::from_rows(permuted, 32) == gray_image(RCode(comps)));
  }

  TEST_CASE("gray image is the product of the components") {
    std::mt19937_64 rng(34);
    for (int iter = 0; iter < 10; ++iter) {
      const std::size_t n = 1 + rng() % 3;
      std::array<Z4Code, 8> comps;
      for (auto& c : comps) {
        do c = oracle::random_code(rng, n, rng() % 3);
        while (c.log2_size() > 3);
      }
      const RCode c(comps);
      std::set<Z4Vector> direct;
      for (const auto& w : all_codewords(c)) direct.insert(gray_map(w));
      const auto image = codewords(gray_image(c), 1u << 24);
      REQUIRE(std::set<Z4Vector>(image.begin(), image.end()) == direct);
      REQUIRE(direct.size() == c.size());
    }
  }

  TEST_CASE("distance factorizes over components") {
    std::mt19937_64 rng(35);
    for (int iter = 0; iter < 25; ++iter) {
      const std::size_t n = 1 + rng() % 2;
      std::array<Z4Code, 8> comps;
      for (auto& c : comps) {
        do c = oracle::random_code(rng, n, rng() % 2);
        while (c.log2_size() > 2);
      }
      const RCode c(comps);
      int lee = 1 << 30, ham = 1 << 30;
      for (const auto& w : all_codewords(c)) {
        if (hamming_weight(w) == 0) continue;
        lee = std::min(lee, lee_weight(w));
        ham = std::min(ham, hamming_weight(w));
      }
      if (c.is_zero()) {
        CHECK_FALSE(min_distance(c, Metric::Lee).has_value());
        continue;
      }
      REQUIRE(min_distance(c, Metric::Lee) == lee);
      REQUIRE(min_distance(c, Metric::Hamming) == ham);
    }
  }

  TEST_CASE("parameters") {
    const RCode full = RCode::full(3);
    CHECK(min_distance(full, Metric::Hamming) == 1);
    const RCode rep = RCode::uniform(Z4Code::from_rows({Z4Vector(5, 1)}, 5));
    CHECK(min_distance(rep, Metric::Hamming) == 5);
    const RCodeParameters p = parameters(RCode::uniform(Z4Code::from_rows(kBlockExample, 4)));
    CHECK(p.gray_length == 32);
    CHECK(p.exp4 == 8);
    CHECK(p.exp2 == 16);
    const RCodeParameters z = parameters(RCode::zero(2));
    CHECK(z.exp4 == 0);
    CHECK(z.exp2 == 0);
    CHECK_FALSE(z.lee_distance.has_value());
  }

  TEST_CASE("singleton defect and MDS") {
    for (std::size_t n = 1; n <= 6; ++n) {
      const Z4Code full = Z4Code::full(n);
      const Z4Code rep = Z4Code::from_rows({Z4Vector(n, 1)}, n);
      const Z4Code dual_rep = dual_code(rep);
      CHECK(singleton_defect(RCode::uniform(full)) == Rational(0));
      CHECK(singleton_defect(RCode::uniform(rep)) == Rational(0));
      CHECK(min_distance(RCode::uniform(rep), Metric::Hamming) == static_cast<int>(n));
      CHECK(is_mds(RCode::uniform(full)));
      CHECK(is_mds(RCode::uniform(rep)));
      CHECK(mds_classify(full) == MdsClass::FullSpace);
      if (n >= 2) {
        CHECK(mds_classify(rep) == MdsClass::Repetition);
        CHECK(singleton_defect(RCode::uniform(dual_rep)) == Rational(0));
        CHECK(min_distance(RCode::uniform(dual_rep), Metric::Hamming) == 2);
        CHECK(mds_classify(dual_rep) == MdsClass::DualRepetition);
      }
    }
    CHECK(mds_classify(Z4Code::from_rows(kBlockExample, 4)) == MdsClass::NotMDS);
    CHECK(singleton_defect(Z4Code::from_rows(kBlockExample, 4)) > Rational(0));
    CHECK(mds_classify(Z4Code::zero(3)) == MdsClass::NotMDS);
    CHECK_THROWS_AS(singleton_defect(RCode::zero(3)), PreconditionViolated);
    CHECK_FALSE(is_mds(RCode::zero(3)));
    // Mixed MDS components with different parameters: not MDS over R.
    std::array<Z4Code, 8> mixed;
    mixed.fill(Z4Code::full(3));
    mixed[5] = Z4Code::from_rows({{1, 1, 1}}, 3);
    CHECK(singleton_defect(RCode(mixed)) > Rational(0));
    CHECK_FALSE(is_mds(RCode(mixed)));
  }
}
