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

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace z4r {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow_big(unsigned base, unsigned exp) {
  return boost::multiprecision::pow(BigInt(base), exp);
}

/// 4^a * 2^b
inline BigInt type_size(unsigned exp4, unsigned exp2) {
  return BigInt(1) << (2 * exp4 + exp2);
}

inline BigInt binomial(unsigned n, unsigned k) {
  if (k > n) return 0;
  BigInt r = 1;
  for (unsigned i = 1; i <= k; ++i) {
    r *= n - k + i;
    r /= i;
  }
  return r;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace z4r
