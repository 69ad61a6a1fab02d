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

#include "z4r/z4_linalg.hpp"

#include <algorithm>
#include <utility>

#include "z4r/kernels.hpp"

namespace z4r {

namespace {

Z4 mod4(int x) { return static_cast<Z4>(((x % 4) + 4) % 4); }

bool is_zero_row(std::span<const Z4> v) {
  return std::all_of(v.begin(), v.end(), [](Z4 x) { return x == 0; });
}

// dst -= m * src
void sub_multiple(Z4Vector& dst, const Z4Vector& src, int m) {
  m &= 3;
  if (m == 0) return;
  for (std::size_t i = 0; i < dst.size(); ++i) dst[i] = mod4(dst[i] - m * src[i]);
}

void scale(Z4Vector& v, int m) {
  for (auto& x : v) x = mod4(x * m);
}

}  // namespace

Z4Matrix Z4Matrix::from_rows(const std::vector<Z4Vector>& rows, std::size_t cols) {
  Z4Matrix m(0, cols);
  for (const auto& r : rows) {
    if (r.size() != cols) throw LengthMismatch("row length " + std::to_string(r.size()) +
                                               " differs from " + std::to_string(cols));
    m.append_row(r);
  }
  return m;
}

Z4Matrix Z4Matrix::identity(std::size_t n) {
  Z4Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

void Z4Matrix::append_row(std::span<const Z4> v) {
  if (v.size() != cols_) throw LengthMismatch("row length mismatch");
  for (Z4 x : v) data_.push_back(x & 3);
  ++rows_;
}

std::vector<Z4Vector> Z4Matrix::to_rows() const {
  std::vector<Z4Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.emplace_back(row(r).begin(), row(r).end());
  return out;
}

Z4Matrix Z4Matrix::transpose() const {
  Z4Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

int lee_weight(std::span<const Z4> v) {
  int w = 0;
  for (Z4 x : v) w += lee_weight_z4(x);
  return w;
}

int hamming_weight(std::span<const Z4> v) {
  return static_cast<int>(std::count_if(v.begin(), v.end(), [](Z4 x) { return x != 0; }));
}

Z4 dot(std::span<const Z4> a, std::span<const Z4> b) {
  if (a.size() != b.size()) throw LengthMismatch("dot product of unequal lengths");
  unsigned s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += static_cast<unsigned>(a[i]) * b[i];
  return static_cast<Z4>(s & 3u);
}

Z4Matrix howell_form(const Z4Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<Z4Vector> active;
  for (std::size_t r = 0; r < m.rows(); ++r)
    if (!is_zero_row(m.row(r))) active.emplace_back(m.row(r).begin(), m.row(r).end());

  std::vector<Z4Vector> done;
  for (std::size_t j = 0; j < n && !active.empty(); ++j) {
    auto it = std::find_if(active.begin(), active.end(), [j](const Z4Vector& r) { return r[j] & 1; });
    if (it != active.end()) {
      Z4Vector p = std::move(*it);
      active.erase(it);
      if (p[j] == 3) scale(p, 3);
      for (auto& r : active) sub_multiple(r, p, r[j]);
      for (auto& r : done) sub_multiple(r, p, r[j]);
      done.push_back(std::move(p));
    } else {
      it = std::find_if(active.begin(), active.end(), [j](const Z4Vector& r) { return r[j] == 2; });
      if (it == active.end()) continue;
      Z4Vector p = std::move(*it);
      active.erase(it);
      for (auto& r : active)
        if (r[j] == 2) sub_multiple(r, p, 1);
      for (auto& r : done)
        if (r[j] >= 2) sub_multiple(r, p, 1);
      // 2p vanishes at column j but may carry information further right.
      Z4Vector twice = p;
      scale(twice, 2);
      if (!is_zero_row(twice)) active.push_back(std::move(twice));
      done.push_back(std::move(p));
    }
    std::erase_if(active, [](const Z4Vector& r) { return is_zero_row(r); });
  }
  return Z4Matrix::from_rows(done, n);
}

bool howell_contains(const Z4Matrix& h, std::span<const Z4> v) {
  if (v.size() != h.cols()) throw LengthMismatch("membership test of a vector of the wrong length");
  Z4Vector w(v.begin(), v.end());
  for (auto& x : w) x &= 3;
  for (std::size_t r = 0; r < h.rows(); ++r) {
    const auto row = h.row(r);
    const auto piv = static_cast<std::size_t>(
        std::find_if(row.begin(), row.end(), [](Z4 x) { return x != 0; }) - row.begin());
    int m = w[piv];
    if (row[piv] == 2) {
      if (m & 1) return false;
      m /= 2;
    }
    if (m == 0) continue;
    for (std::size_t c = piv; c < w.size(); ++c) w[c] = mod4(w[c] - m * row[c]);
  }
  return is_zero_row(w);
}

Z4Matrix StandardForm::block_generator() const {
  const std::size_t n = length;
  const std::size_t rest = n - k1 - k2;
  Z4Matrix g(k1 + k2, n);
  for (std::size_t i = 0; i < k1; ++i) {
    g(i, i) = 1;
    for (std::size_t j = 0; j < k2; ++j) g(i, k1 + j) = a(i, j);
    for (std::size_t j = 0; j < rest; ++j) g(i, k1 + k2 + j) = b(i, j);
  }
  for (std::size_t i = 0; i < k2; ++i) {
    g(k1 + i, k1 + i) = 2;
    for (std::size_t j = 0; j < rest; ++j) g(k1 + i, k1 + k2 + j) = static_cast<Z4>(2 * c(i, j) & 3);
  }
  return g;
}

namespace {

Z4Matrix unpermute(const Z4Matrix& g, const std::vector<std::size_t>& perm) {
  Z4Matrix out(g.rows(), g.cols());
  for (std::size_t r = 0; r < g.rows(); ++r)
    for (std::size_t j = 0; j < g.cols(); ++j) out(r, perm[j]) = g(r, j);
  return out;
}

}  // namespace

Z4Matrix StandardForm::generator() const { return unpermute(block_generator(), permutation); }

StandardForm standard_form_of(const Z4Matrix& m) {
  const std::size_t n = m.cols();
  std::vector<Z4Vector> rows = howell_form(m).to_rows();
  std::vector<std::size_t> perm(n);
  for (std::size_t j = 0; j < n; ++j) perm[j] = j;

  // Move column c to position p, shifting the columns in between right.
  auto move_column = [&](std::size_t c, std::size_t p) {
    if (c == p) return;
    for (auto& r : rows) std::rotate(r.begin() + p, r.begin() + c, r.begin() + c + 1);
    std::rotate(perm.begin() + p, perm.begin() + c, perm.begin() + c + 1);
  };

  std::size_t k1 = 0;
  for (;;) {
    std::size_t col = n, who = rows.size();
    for (std::size_t c = k1; c < n && col == n; ++c)
      for (std::size_t i = k1; i < rows.size(); ++i)
        if (rows[i][c] & 1) {
          col = c;
          who = i;
          break;
        }
    if (col == n) break;
    std::swap(rows[k1], rows[who]);
    move_column(col, k1);
    if (rows[k1][k1] == 3) scale(rows[k1], 3);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != k1) sub_multiple(rows[i], rows[k1], rows[i][k1]);
    ++k1;
  }

  rows.erase(std::remove_if(rows.begin() + static_cast<std::ptrdiff_t>(k1), rows.end(),
                            [](const Z4Vector& r) { return is_zero_row(r); }),
             rows.end());

  std::size_t k2 = 0;
  for (;;) {
    const std::size_t p = k1 + k2;
    std::size_t col = n, who = rows.size();
    for (std::size_t c = p; c < n && col == n; ++c)
      for (std::size_t i = p; i < rows.size(); ++i)
        if (rows[i][c] == 2) {
          col = c;
          who = i;
          break;
        }
    if (col == n) break;
    std::swap(rows[p], rows[who]);
    move_column(col, p);
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == p) continue;
      if ((i < k1 && rows[i][p] >= 2) || (i >= k1 && rows[i][p] == 2)) sub_multiple(rows[i], rows[p], 1);
    }
    ++k2;
  }

  StandardForm sf;
  sf.length = n;
  sf.k1 = k1;
  sf.k2 = k2;
  const std::size_t rest = n - k1 - k2;
  sf.a = Z4Matrix(k1, k2);
  sf.b = Z4Matrix(k1, rest);
  sf.c = Z4Matrix(k2, rest);
  for (std::size_t i = 0; i < k1; ++i) {
    for (std::size_t j = 0; j < k2; ++j) sf.a(i, j) = rows[i][k1 + j];
    for (std::size_t j = 0; j < rest; ++j) sf.b(i, j) = rows[i][k1 + k2 + j];
  }
  for (std::size_t i = 0; i < k2; ++i)
    for (std::size_t j = 0; j < rest; ++j) sf.c(i, j) = rows[k1 + i][k1 + k2 + j] / 2;
  sf.permutation = std::move(perm);
  return sf;
}

Z4Code::Z4Code(Z4Matrix generator)
    : generator_(std::move(generator)),
      canonical_(howell_form(generator_)),
      standard_(standard_form_of(canonical_)) {}

bool Z4Code::contains(std::span<const Z4> v) const { return howell_contains(canonical_, v); }

Z4Code dual_code(const Z4Code& code) {
  const StandardForm& sf = code.standard();
  const std::size_t n = sf.length, k1 = sf.k1, k2 = sf.k2, rest = n - k1 - k2;
  Z4Matrix g(rest + k2, n);
  for (std::size_t i = 0; i < rest; ++i) {
    for (std::size_t j = 0; j < k1; ++j) {
      int v = -sf.b(j, i);
      for (std::size_t l = 0; l < k2; ++l) v -= sf.c(l, i) * sf.a(j, l);
      g(i, j) = mod4(v);
    }
    for (std::size_t l = 0; l < k2; ++l) g(i, k1 + l) = sf.c(l, i);
    g(i, k1 + k2 + i) = 1;
  }
  for (std::size_t l = 0; l < k2; ++l) {
    for (std::size_t j = 0; j < k1; ++j) g(rest + l, j) = static_cast<Z4>(2 * sf.a(j, l) & 3);
    g(rest + l, k1 + l) = 2;
  }
  return Z4Code(unpermute(g, sf.permutation));
}

std::vector<Z4Vector> codewords(const Z4Code& c, std::uint64_t budget) {
  const kernels::PackedBasis b = kernels::packed_basis(c, budget);
  std::vector<Z4Vector> out;
  out.reserve(b.count);
  kernels::visit_all(b, [&](const std::uint64_t* w) {
    Z4Vector v(c.length());
    for (std::size_t k = 0; k < v.size(); ++k) v[k] = kernels::lane(w, k);
    out.push_back(std::move(v));
  });
  return out;
}

WeightDistribution weight_distribution(const Z4Code& c, std::uint64_t budget) {
  kernels::WeightTally t = kernels::weight_tally_parallel(kernels::packed_basis(c, budget));
  return {std::move(t.lee), std::move(t.hamming)};
}

std::optional<int> min_weight(const Z4Code& c, Metric metric, std::uint64_t budget) {
  if (c.is_zero()) {
    if (budget < 1) throw BudgetExceeded("min_weight", 1, budget);
    return std::nullopt;
  }
  const WeightDistribution d = weight_distribution(c, budget);
  const auto& counts = metric == Metric::Lee ? d.lee : d.hamming;
  for (std::size_t w = 1; w < counts.size(); ++w)
    if (counts[w] != 0) return static_cast<int>(w);
  return std::nullopt;
}

Z4Vector cyclic_shift(std::span<const Z4> v) {
  Z4Vector out(v.begin(), v.end());
  if (!out.empty()) std::rotate(out.rbegin(), out.rbegin() + 1, out.rend());
  return out;
}

}  // namespace z4r
