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

#include "z4r/catalog.hpp"

#include "z4r/errors.hpp"

namespace z4r {

namespace {

using P = Z4Poly;

constexpr const char* kLiftNote = "printed factors hold mod 2 only; codes use their Z4 lifts";

std::array<ComponentRecipe, 8> uniform(ComponentRecipe r) {
  std::array<ComponentRecipe, 8> out;
  out.fill(r);
  return out;
}

std::array<ComponentRecipe, 8> split(std::size_t first, ComponentRecipe a, ComponentRecipe b) {
  std::array<ComponentRecipe, 8> out;
  for (std::size_t t = 0; t < 8; ++t) out[t] = t < first ? a : b;
  return out;
}

std::vector<CatalogExample> build() {
  std::vector<CatalogExample> ex;

  ex.push_back({1, 3, "x^3-1=(x-1)(x^2+x+1)", {P{1, 1}, P{1, 1, 1}}, {P{3, 1}, P{1, 1, 1}}, "", {}});
  ex.back().variants = {{1, uniform({{1}, {}}), {24, 8, 16, 2}}};

  ex.push_back({2, 5, "x^5-1=(x-1)(x^4+x^3+x^2+x+1)", {P{1, 1}, P{1, 1, 1, 1, 1}}, {P{3, 1}, P{1, 1, 1, 1, 1}}, "", {}});
  ex.back().variants = {{1, uniform({{1}, {}}), {40, 8, 32, 2}}};

  ex.push_back({3, 7, "x^7-1=(x+1)(x^3+x+1)(x^3+x^2+1)", {P{1, 1}, P{1, 1, 0, 1}, P{1, 0, 1, 1}},
                {P{3, 1}, P{3, 1, 2, 1}, P{3, 2, 3, 1}}, kLiftNote, {}});
  ex.back().variants = {
      {1, split(3, {{1}, {}}, {{2}, {}}), {56, 32, 24, 2}},
      {2, uniform({{1, 2}, {}}), {56, 8, 48, 6}},
      {3, split(3, {{0, 1, 2}, {1}}, {{2}, {}}), {56, 23, 27, 2}},
  };

  ex.push_back({4, 9, "x^9-1=(x+1)(x^2+x+1)(x^6+x^3+1)", {P{1, 1}, P{1, 1, 1}, P{1, 0, 0, 1, 0, 0, 1}},
                {P{3, 1}, P{1, 1, 1}, P{1, 0, 0, 1, 0, 0, 1}}, kLiftNote, {}});
  ex.back().variants = {
      {1, uniform({{1, 2}, {2}}), {72, 8, 16, 6}},
      {2, uniform({{1, 2}, {1}}), {72, 8, 32, 3}},
  };

  // The last printed quartic has 0 and 1 as roots; x^4+x^3+x^2+x+1 is meant.
  ex.push_back({5, 15, "x^15-1=(x+1)(x^2+x+1)(x^4+x+1)(x^4+x^3+1)(x^4+x^3+x^2+1)",
                {P{1, 1}, P{1, 1, 1}, P{1, 1, 0, 0, 1}, P{1, 0, 0, 1, 1}, P{1, 1, 1, 1, 1}},
                {P{3, 1}, P{1, 1, 1}, P{1, 3, 2, 0, 1}, P{1, 0, 2, 3, 1}, P{1, 1, 1, 1, 1}},
                std::string(kLiftNote) + "; the printed x^4+x^3+x^2+1 is reducible, x^4+x^3+x^2+x+1 is used",
                {}});
  ex.back().variants = {
      {1, split(4, {{2, 3, 4}, {2, 3}}, {{2, 3, 4}, {3, 4}}), {120, 24, 32, 10}},
      {2, split(4, {{1, 2, 3}, {2, 3}}, {{1, 3, 4}, {3, 4}}), {120, 40, 16, 8}},
  };

  ex.push_back({6, 31,
                "x^31-1=F1F2F3F4F5F6F7, F1=x+1, F2=x^5+x^2+1, F3=x^5+x^3+1, F4=x^5+x^3+x^2+x+1, "
                "F5=x^5+x^4+x^2+x+1, F6=x^5+x^4+x^3+x+1, F7=x^5+x^4+x^3+x^2+1",
                {P{1, 1}, P{1, 0, 1, 0, 0, 1}, P{1, 0, 0, 1, 0, 1}, P{1, 1, 1, 1, 0, 1}, P{1, 1, 1, 0, 1, 1},
                 P{1, 1, 0, 1, 1, 1}, P{1, 0, 1, 1, 1, 1}},
                {P{3, 1}, P{3, 2, 3, 0, 0, 1}, P{3, 0, 0, 1, 2, 1}, P{3, 3, 1, 3, 2, 1}, P{3, 3, 1, 0, 3, 1},
                 P{3, 1, 0, 3, 1, 1}, P{3, 2, 1, 3, 1, 1}},
                kLiftNote, {}});
  std::array<ComponentRecipe, 8> v1{{{{0, 1, 2}, {0, 1}},
                                     {{0, 1, 2}, {0, 1}},
                                     {{0, 2, 3}, {0, 2}},
                                     {{0, 3, 4}, {0, 3}},
                                     {{0, 4, 5}, {0, 4}},
                                     {{0, 5, 6}, {0, 5}},
                                     {{0, 1, 6}, {0, 6}},
                                     {{0, 1, 6}, {0, 6}}}};
  std::array<ComponentRecipe, 8> v2;
  for (std::size_t t = 0; t < 8; ++t)
    v2[t] = t < 3 ? ComponentRecipe{{0, 1, 2, 3, 4}, {0, 1, 2}}
            : t < 6 ? ComponentRecipe{{0, 2, 3, 4, 5}, {0, 2, 3}}
                    : ComponentRecipe{{0, 3, 4, 5, 6}, {0, 3, 4}};
  ex.back().variants = {
      {1, v1, {248, 160, 40, 8}},
      {2, v2, {248, 80, 80, 12}},
      {3, split(4, {{1, 2, 3, 4, 5}, {2, 3, 4, 5}}, {{2, 3, 4, 5, 6}, {3, 4, 5, 6}}), {248, 48, 32, 22}},
  };
  return ex;
}

}  // namespace

const ExampleVariant& CatalogExample::variant(int i) const {
  if (i < 1 || static_cast<std::size_t>(i) > variants.size())
    throw PreconditionViolated("example " + std::to_string(number) + " has no variant " + std::to_string(i));
  return variants[static_cast<std::size_t>(i - 1)];
}

CyclicSpec CatalogExample::component_spec(const ComponentRecipe& r) const {
  auto pick = [&](const std::vector<int>& idx) {
    std::vector<Z4Poly> fs;
    for (int i : idx) fs.push_back(lifted_factors.at(static_cast<std::size_t>(i)));
    return product(fs);
  };
  return CyclicSpec::single(n, pick(r.f1), pick(r.f2));
}

RCyclicSpec CatalogExample::spec(const ExampleVariant& v) const {
  RCyclicSpec s{n, {}};
  for (std::size_t t = 0; t < 8; ++t) s.components[t] = component_spec(v.components[t]);
  return s;
}

const std::vector<CatalogExample>& paper_examples() {
  static const std::vector<CatalogExample> examples = [] {
    auto ex = build();
    for (const auto& e : ex)
      if (!validate_factorization(e.n, e.lifted_factors) || !validate_factorization_mod2(e.n, e.mod2_factors))
        throw std::logic_error("bundled factorization for n=" + std::to_string(e.n) + " is wrong");
    return ex;
  }();
  return examples;
}

const CatalogExample& example(std::size_t n) {
  for (const auto& e : paper_examples())
    if (e.n == n) return e;
  throw PreconditionViolated("no bundled example of length " + std::to_string(n));
}

const CatalogExample& example_number(int number) {
  for (const auto& e : paper_examples())
    if (e.number == number) return e;
  throw PreconditionViolated("no example number " + std::to_string(number));
}

}  // namespace z4r
