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
#include <string>
#include <vector>

#include "z4r/cyclic.hpp"
#include "z4r/poly.hpp"

namespace z4r {

/// Claimed Gray-image parameters [length, 4^exp4 2^exp2, distance].
struct ClaimedParameters {
  std::size_t length = 0;
  std::size_t exp4 = 0;
  std::size_t exp2 = 0;
  int distance = 0;
};

/// One component <f1 + 2 f2>, each polynomial a product of lifted factors
/// given by index. An empty index list is the constant 1.
struct ComponentRecipe {
  std::vector<int> f1;
  std::vector<int> f2;
};

struct ExampleVariant {
  int number = 0;
  std::array<ComponentRecipe, 8> components;
  ClaimedParameters claimed;
};

struct CatalogExample {
  int number = 0;
  std::size_t n = 0;
  std::string printed;                 // factor list as published
  std::vector<Z4Poly> mod2_factors;    // the same list reduced mod 2, typos fixed
  std::vector<Z4Poly> lifted_factors;  // monic factorization of x^n - 1 over Z4
  std::string note;
  std::vector<ExampleVariant> variants;

  /// 1-based.
  const ExampleVariant& variant(int i) const;
  CyclicSpec component_spec(const ComponentRecipe& r) const;
  RCyclicSpec spec(const ExampleVariant& v) const;
};

const std::vector<CatalogExample>& paper_examples();

/// Looks up by length n; throws PreconditionViolated for unknown n.
const CatalogExample& example(std::size_t n);
/// Looks up by number 1..6.
const CatalogExample& example_number(int number);

}  // namespace z4r
