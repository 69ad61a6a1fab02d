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

#include "z4r/enumerators.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

#include "z4r/lanes.hpp"
#include "z4r/z4_linalg.hpp"

namespace z4r {

namespace {

Composition from_sorted(const std::vector<std::uint16_t>& symbols) {
  Composition c;
  for (auto s : symbols) {
    if (!c.empty() && c.back().first == s)
      ++c.back().second;
    else
      c.emplace_back(s, 1);
  }
  return c;
}

RVector expand(const Composition& c) {
  RVector x;
  for (const auto& [s, m] : c) x.insert(x.end(), m, RingElement::from_bits(s));
  return x;
}

kernels::SlweKey slwe_key(const Composition& c) {
  kernels::SlweKey k{};
  for (const auto& [s, m] : c) k[static_cast<std::size_t>(lee_weight(RingElement::from_bits(s)))] += m;
  return k;
}

BigInt exact_quotient(const BigInt& num, const BigInt& den, const char* what) {
  BigInt q, r;
  boost::multiprecision::divide_qr(num, den, q, r);
  if (r != 0) throw InexactDivision(std::string(what) + ": coefficient " + num.str() + " not divisible by " + den.str());
  return q;
}

std::vector<BigInt> to_big(const std::vector<std::uint64_t>& v) { return {v.begin(), v.end()}; }

using Poly17 = std::map<kernels::SlweKey, BigInt>;

Poly17 multiply(const Poly17& p, const Poly17& q) {
  Poly17 out;
  for (const auto& [ka, va] : p)
    for (const auto& [kb, vb] : q) {
      kernels::SlweKey k;
      for (std::size_t i = 0; i < 17; ++i) k[i] = static_cast<std::uint16_t>(ka[i] + kb[i]);
      out[k] += va * vb;
    }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

// coefficients of (X + a Y)^p (X - Y)^q, lowest Y power first
std::vector<BigInt> binomial_product(std::size_t p, std::size_t q, const BigInt& a) {
  std::vector<BigInt> out(p + q + 1);
  std::vector<BigInt> left(p + 1), right(q + 1);
  BigInt apow = 1;
  for (std::size_t i = 0; i <= p; ++i) {
    left[i] = binomial(static_cast<unsigned>(p), static_cast<unsigned>(i)) * apow;
    apow *= a;
  }
  for (std::size_t i = 0; i <= q; ++i) {
    right[i] = binomial(static_cast<unsigned>(q), static_cast<unsigned>(i));
    if (i % 2) right[i] = -right[i];
  }
  for (std::size_t i = 0; i <= p; ++i)
    for (std::size_t j = 0; j <= q; ++j) out[i + j] += left[i] * right[j];
  return out;
}

BivariateEnum bivariate_transform(const BivariateEnum& e, const BigInt& size_c, const BigInt& a, const char* what) {
  const std::size_t d = e.degree();
  std::vector<BigInt> acc(d + 1);
  for (std::size_t i = 0; i <= d && !e.coeffs.empty(); ++i) {
    if (e.coeffs[i] == 0) continue;
    const auto term = binomial_product(d - i, i, a);
    for (std::size_t j = 0; j <= d; ++j) acc[j] += e.coeffs[i] * term[j];
  }
  for (auto& x : acc) x = exact_quotient(x, size_c, what);
  return {std::move(acc)};
}

struct Gauss {
  std::int64_t re = 0;
  std::int64_t im = 0;
};

Gauss operator+(Gauss a, Gauss b) { return {a.re + b.re, a.im + b.im}; }
Gauss operator-(Gauss a, Gauss b) { return {a.re - b.re, a.im - b.im}; }
Gauss times_i(Gauss a) { return {-a.im, a.re}; }

// In-place transform over Z4^k1 x Z2^k2, axis i of radix 4 has stride 4^i.
void fourier(std::vector<Gauss>& v, std::size_t k1, std::size_t k2) {
  std::size_t stride = 1;
  for (std::size_t axis = 0; axis < k1 + k2; ++axis) {
    const std::size_t radix = axis < k1 ? 4 : 2;
    const std::size_t block = stride * radix;
    for (std::size_t base = 0; base < v.size(); base += block)
      for (std::size_t off = 0; off < stride; ++off) {
        const std::size_t i0 = base + off;
        if (radix == 2) {
          const Gauss a = v[i0], b = v[i0 + stride];
          v[i0] = a + b;
          v[i0 + stride] = a - b;
        } else {
          const Gauss a = v[i0], b = v[i0 + stride], c = v[i0 + 2 * stride], d = v[i0 + 3 * stride];
          const Gauss ib = times_i(b), id = times_i(d);
          v[i0] = a + b + c + d;
          v[i0 + stride] = a + ib - c - id;
          v[i0 + 2 * stride] = a - b + c - d;
          v[i0 + 3 * stride] = a - ib - c + id;
        }
      }
    stride = block;
  }
}

struct VecHash {
  std::size_t operator()(const std::vector<std::uint16_t>& v) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto x : v) h = (h ^ x) * 1099511628211ull;
    return static_cast<std::size_t>(h);
  }
};

void require_budget(double need, std::uint64_t budget, const char* what) {
  if (need > static_cast<double>(budget)) throw BudgetExceeded(what, need, budget);
}

}  // namespace

Composition composition_of(const RVector& x) {
  std::vector<std::uint16_t> s;
  s.reserve(x.size());
  for (auto r : x) s.push_back(r.bits());
  std::sort(s.begin(), s.end());
  return from_sorted(s);
}

BigInt CWE::total() const {
  BigInt s = 0;
  for (const auto& [k, v] : terms) s += v;
  return s;
}

BigInt SLWE::total() const {
  BigInt s = 0;
  for (const auto& [k, v] : terms) s += v;
  return s;
}

BigInt BivariateEnum::total() const {
  BigInt s = 0;
  for (const auto& v : coeffs) s += v;
  return s;
}

CWE cwe(const RCode& c, std::uint64_t budget) {
  CWE out;
  out.length = c.length();
  for (const auto& [k, v] : kernels::composition_tally_parallel(kernels::packed_basis(c, budget)))
    out.terms[from_sorted(k)] += v;
  return out;
}

CWE cwe(const std::vector<RVector>& words, std::size_t n) {
  CWE out;
  out.length = n;
  for (const auto& w : words) {
    if (w.size() != n) throw LengthMismatch("codeword of the wrong length");
    out.terms[composition_of(w)] += 1;
  }
  return out;
}

SLWE slwe(const RCode& c, std::uint64_t budget) {
  SLWE out;
  out.length = c.length();
  for (const auto& [k, v] : kernels::r_tally_parallel(kernels::packed_basis(c, budget)).slwe) out.terms[k] = v;
  return out;
}

SLWE slwe(const std::vector<RVector>& words, std::size_t n) { return slwe_from_cwe(cwe(words, n)); }

SLWE slwe_from_cwe(const CWE& w) {
  SLWE out;
  out.length = w.length;
  for (const auto& [comp, count] : w.terms) out.terms[slwe_key(comp)] += count;
  return out;
}

BivariateEnum ham(const RCode& c, std::uint64_t budget) {
  return {to_big(kernels::r_tally_parallel(kernels::packed_basis(c, budget)).hamming)};
}

BivariateEnum ham(const std::vector<RVector>& words, std::size_t n) {
  std::vector<BigInt> a(n + 1);
  for (const auto& w : words) a[static_cast<std::size_t>(hamming_weight(w))] += 1;
  return {std::move(a)};
}

BivariateEnum ham_from_slwe(const SLWE& w) {
  std::vector<BigInt> a(w.length + 1);
  for (const auto& [k, v] : w.terms) a[w.length - k[0]] += v;
  return {std::move(a)};
}

BivariateEnum lee(const RCode& c, std::uint64_t budget) {
  return {to_big(kernels::r_tally_parallel(kernels::packed_basis(c, budget)).lee)};
}

BivariateEnum lee(const std::vector<RVector>& words, std::size_t n) {
  std::vector<BigInt> a(16 * n + 1);
  for (const auto& w : words) a[static_cast<std::size_t>(lee_weight(w))] += 1;
  return {std::move(a)};
}

BivariateEnum lee_from_slwe(const SLWE& w) {
  std::vector<BigInt> a(16 * w.length + 1);
  for (const auto& [k, v] : w.terms) {
    std::size_t i = 0;
    for (std::size_t j = 0; j < 17; ++j) i += j * k[j];
    a[i] += v;
  }
  return {std::move(a)};
}

SLWEKernel build_slwe_kernel(const kernels::CharacterTable& sums) {
  SLWEKernel k{};
  for (std::size_t r = 0; r < 17; ++r)
    for (std::size_t j = 0; j < 17; ++j) {
      if (sums[r][j].im != 0)
        throw std::logic_error("character sum K[" + std::to_string(r) + "][" + std::to_string(j) +
                               "] has imaginary part " + std::to_string(sums[r][j].im));
      k[r][j] = sums[r][j].re;
    }
  return k;
}

const SLWEKernel& slwe_kernel() {
  static const SLWEKernel k = build_slwe_kernel(kernels::character_table_parallel());
  return k;
}

SLWE slwe_macwilliams(const SLWE& w, const BigInt& size_c) {
  const SLWEKernel& kern = slwe_kernel();
  std::array<std::vector<Poly17>, 17> powers;  // powers[k][m] = (row k)^m
  auto power = [&](std::size_t k, std::size_t m) -> const Poly17& {
    auto& cache = powers[k];
    if (cache.empty()) cache.push_back({{kernels::SlweKey{}, BigInt(1)}});
    while (cache.size() <= m) {
      Poly17 row;
      for (std::size_t j = 0; j < 17; ++j) {
        if (kern[k][j] == 0) continue;
        kernels::SlweKey key{};
        key[j] = 1;
        row[key] = kern[k][j];
      }
      cache.push_back(multiply(cache.back(), row));
    }
    return cache[m];
  };

  Poly17 acc;
  for (const auto& [key, count] : w.terms) {
    Poly17 term{{kernels::SlweKey{}, count}};
    for (std::size_t k = 0; k < 17; ++k)
      if (key[k] != 0) term = multiply(term, power(k, key[k]));
    for (const auto& [mk, mv] : term) acc[mk] += mv;
  }
  SLWE out;
  out.length = w.length;
  for (const auto& [k, v] : acc)
    if (v != 0) out.terms[k] = exact_quotient(v, size_c, "SLWE transform");
  return out;
}

BivariateEnum ham_macwilliams(const BivariateEnum& h, const BigInt& size_c, std::size_t n, std::uint64_t multiplier) {
  if (h.degree() != n) throw LengthMismatch("Hamming enumerator degree differs from the code length");
  return bivariate_transform(h, size_c, BigInt(multiplier), "Hamming transform");
}

BivariateEnum lee_macwilliams(const BivariateEnum& l, const BigInt& size_c) {
  return bivariate_transform(l, size_c, BigInt(1), "Lee transform");
}

CWE cwe_macwilliams(const CWE& w, const BigInt& size_c, std::uint64_t budget) {
  const std::size_t n = w.length;
  const std::size_t width = 8 * n;

  std::vector<Z4Vector> reps;
  std::vector<std::int64_t> counts;
  for (const auto& [comp, count] : w.terms) {
    if (count > BigInt(std::numeric_limits<std::int64_t>::max() / 4))
      throw BudgetExceeded("CWE transform coefficient size", count.convert_to<double>(), budget);
    reps.push_back(gray_map(expand(comp)));
    counts.push_back(count.convert_to<std::int64_t>());
  }

  const Z4Code span = Z4Code::from_rows(reps, width);
  const StandardForm& sf = span.standard();
  const std::size_t k1 = sf.k1, k2 = sf.k2;
  const std::size_t log2_span = span.log2_size();
  require_budget(std::ldexp(1.0, static_cast<int>(log2_span)), budget, "CWE transform frequency grid");

  std::vector<Gauss> grid(std::size_t{1} << log2_span);
  for (std::size_t r = 0; r < reps.size(); ++r) {
    const Z4Vector& h = reps[r];
    std::size_t index = 0, stride = 1;
    std::vector<int> alpha(k1);
    for (std::size_t i = 0; i < k1; ++i) {
      alpha[i] = h[sf.permutation[i]];
      index += static_cast<std::size_t>(alpha[i]) * stride;
      stride *= 4;
    }
    for (std::size_t j = 0; j < k2; ++j) {
      int v = h[sf.permutation[k1 + j]];
      for (std::size_t i = 0; i < k1; ++i) v -= alpha[i] * sf.a(i, j);
      const int beta = (((v % 4) + 4) % 4) / 2;
      index += static_cast<std::size_t>(beta) * stride;
      stride *= 2;
    }
    grid[index].re += counts[r];
  }
  fourier(grid, k1, k2);

  const std::size_t nonzero =
      static_cast<std::size_t>(std::count_if(grid.begin(), grid.end(), [](Gauss g) { return g.re != 0 || g.im != 0; }));
  const double fiber = std::ldexp(1.0, static_cast<int>(2 * width - log2_span));
  require_budget(static_cast<double>(nonzero) * fiber, budget, "CWE transform coset expansion");

  const Z4Code annihilator = dual_code(span);
  const kernels::PackedBasis basis = kernels::packed_basis(annihilator, std::numeric_limits<std::uint64_t>::max());

  struct Acc {
    __int128 re = 0;
    __int128 im = 0;
  };
  std::unordered_map<std::vector<std::uint16_t>, Acc, VecHash> acc;
  std::vector<std::uint64_t> offset(basis.words);
  std::vector<std::uint16_t> symbols(n);

  for (std::size_t index = 0; index < grid.size(); ++index) {
    const Gauss x = grid[index];
    if (x.re == 0 && x.im == 0) continue;
    // A point z with <row_i, z> equal to this frequency, supported on the
    // pivot columns of the standard form.
    Z4Vector zp(width, 0);
    std::size_t rest = index;
    std::vector<int> e(k1 + k2);
    for (std::size_t i = 0; i < k1; ++i, rest /= 4) e[i] = static_cast<int>(rest % 4);
    for (std::size_t j = 0; j < k2; ++j, rest /= 2) e[k1 + j] = static_cast<int>(rest % 2);
    for (std::size_t j = 0; j < k2; ++j) zp[k1 + j] = static_cast<Z4>(e[k1 + j]);
    for (std::size_t i = 0; i < k1; ++i) {
      int v = e[i];
      for (std::size_t j = 0; j < k2; ++j) v -= sf.a(i, j) * e[k1 + j];
      zp[i] = static_cast<Z4>(((v % 4) + 4) % 4);
    }
    std::fill(offset.begin(), offset.end(), 0);
    for (std::size_t p = 0; p < width; ++p) kernels::set_lane(offset.data(), sf.permutation[p], zp[p]);

    kernels::visit_all(basis, [&](const std::uint64_t* word) {
      for (std::size_t j = 0; j < n; ++j) {
        std::uint16_t s = 0;
        for (int t = 0; t < kSlots; ++t) {
          const std::size_t k = static_cast<std::size_t>(t) * n + j;
          unsigned v = (kernels::lane(word, k) + kernels::lane(offset.data(), k)) & 3u;
          if (kChiSigns[static_cast<std::size_t>(t)] < 0) v = (4 - v) & 3u;
          s = static_cast<std::uint16_t>(s | (v << (2 * t)));
        }
        symbols[j] = s;
      }
      std::sort(symbols.begin(), symbols.end());
      Acc& a = acc[symbols];
      a.re += x.re;
      a.im += x.im;
    });
  }

  CWE out;
  out.length = n;
  for (const auto& [key, a] : acc) {
    if (a.im != 0) throw InexactDivision("CWE transform left an imaginary part");
    if (a.re == 0) continue;
    const BigInt re = (a.re < 0 ? -BigInt(static_cast<std::uint64_t>(-a.re)) : BigInt(static_cast<std::uint64_t>(a.re)));
    out.terms[from_sorted(key)] = exact_quotient(re, size_c, "CWE transform");
  }
  return out;
}

namespace {

std::string key_string(const kernels::SlweKey& k) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < 17; ++i) os << (i ? "," : "") << k[i];
  os << ')';
  return os.str();
}

std::string key_string(const Composition& c) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < c.size(); ++i)
    os << (i ? "," : "") << to_crt_string(RingElement::from_bits(c[i].first)) << '^' << c[i].second;
  os << '}';
  return os.str();
}

template <class Map>
std::string map_difference(const Map& a, const Map& b) {
  auto ia = a.begin(), ib = b.begin();
  while (ia != a.end() || ib != b.end()) {
    if (ib == b.end() || (ia != a.end() && ia->first < ib->first))
      return key_string(ia->first) + ": " + ia->second.str() + " vs 0";
    if (ia == a.end() || ib->first < ia->first) return key_string(ib->first) + ": 0 vs " + ib->second.str();
    if (ia->second != ib->second)
      return key_string(ia->first) + ": " + ia->second.str() + " vs " + ib->second.str();
    ++ia;
    ++ib;
  }
  return {};
}

}  // namespace

std::string first_difference(const SLWE& a, const SLWE& b) {
  if (a.length != b.length) return "length " + std::to_string(a.length) + " vs " + std::to_string(b.length);
  return map_difference(a.terms, b.terms);
}

std::string first_difference(const CWE& a, const CWE& b) {
  if (a.length != b.length) return "length " + std::to_string(a.length) + " vs " + std::to_string(b.length);
  return map_difference(a.terms, b.terms);
}

std::string first_difference(const BivariateEnum& a, const BivariateEnum& b) {
  const std::size_t m = std::max(a.coeffs.size(), b.coeffs.size());
  for (std::size_t i = 0; i < m; ++i) {
    const BigInt x = i < a.coeffs.size() ? a.coeffs[i] : BigInt(0);
    const BigInt y = i < b.coeffs.size() ? b.coeffs[i] : BigInt(0);
    if (x != y) return "coefficient " + std::to_string(i) + ": " + x.str() + " vs " + y.str();
  }
  return {};
}

}  // namespace z4r
