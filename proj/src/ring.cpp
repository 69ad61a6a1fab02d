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

#include "z4r/ring.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "z4r/errors.hpp"

namespace z4r {

namespace {

constexpr Z4 m4(int x) { return static_cast<Z4>(((x % 4) + 4) % 4); }

// Monomial order of the standard basis: 1,u,v,w,uv,uw,vw,uvw.
constexpr std::array<const char*, 8> kMonomials{"", "u", "v", "w", "uv", "uw", "vw", "uvw"};

int monomial_index(std::string letters) {
  std::sort(letters.begin(), letters.end());
  if (std::adjacent_find(letters.begin(), letters.end()) != letters.end()) return -1;
  for (int i = 0; i < 8; ++i)
    if (letters == kMonomials[i]) return i;
  return -1;
}

RingElement parse_crt(std::string_view text) {
  std::array<Z4, 8> coords{};
  std::size_t count = 0;
  std::string field;
  auto flush = [&] {
    if (field.empty()) throw ParseError("empty CRT coordinate in '" + std::string(text) + "'");
    if (field.size() != 1 || field[0] < '0' || field[0] > '3')
      throw ParseError("CRT coordinate '" + field + "' is not in 0..3");
    if (count >= 8) throw ParseError("more than 8 CRT coordinates in '" + std::string(text) + "'");
    coords[count++] = static_cast<Z4>(field[0] - '0');
    field.clear();
  };
  for (std::size_t i = 1; i + 1 < text.size(); ++i) {
    const char ch = text[i];
    if (std::isspace(static_cast<unsigned char>(ch))) continue;
    if (ch == ',')
      flush();
    else
      field.push_back(ch);
  }
  flush();
  if (count != 8) throw ParseError("expected 8 CRT coordinates in '" + std::string(text) + "'");
  return RingElement::from_crt(coords);
}

}  // namespace

RingElement crt_decompose(const StandardCoeffs& s) {
  const auto& [a, b, c, d, e, f, g, h] = s.c;
  return RingElement::from_crt({m4(a), m4(a + b), m4(a + c), m4(a + d), m4(a + b + c + e),
                                m4(a + b + d + f), m4(a + c + d + g),
                                m4(a + b + c + d + e + f + g + h)});
}

StandardCoeffs crt_compose(RingElement r) {
  const std::array<Z4, 8> x = r.crt();
  const int r1 = x[0], r2 = x[1], r3 = x[2], r4 = x[3];
  const int r5 = x[4], r6 = x[5], r7 = x[6], r8 = x[7];
  StandardCoeffs s;
  s.c = {m4(r1),
         m4(r2 - r1),
         m4(r3 - r1),
         m4(r4 - r1),
         m4(r5 - r2 - r3 + r1),
         m4(r6 - r2 - r4 + r1),
         m4(r7 - r3 - r4 + r1),
         m4(r8 - r5 - r6 - r7 + r2 + r3 + r4 - r1)};
  return s;
}

int lee_weight(const RVector& x) {
  int w = 0;
  for (RingElement r : x) w += lee_weight(r);
  return w;
}

int hamming_weight(const RVector& x) {
  return static_cast<int>(std::count_if(x.begin(), x.end(), [](RingElement r) { return !r.is_zero(); }));
}

LeeClassTable build_lee_class_table() {
  LeeClassTable table;
  table.class_of.resize(kRingOrder);
  for (std::uint32_t b = 0; b < kRingOrder; ++b) {
    const auto r = RingElement::from_bits(static_cast<std::uint16_t>(b));
    const int k = lee_weight(r);
    table.class_of[b] = static_cast<std::uint8_t>(k);
    table.members[k].push_back(r);
  }
  for (int k = 0; k <= kMaxSymbolLee; ++k) table.sizes[k] = static_cast<std::uint32_t>(table.members[k].size());
  return table;
}

const LeeClassTable& lee_class_table() {
  static const LeeClassTable table = build_lee_class_table();
  return table;
}

RingElement parse_element(std::string_view text) {
  std::string s;
  for (char ch : text)
    if (!std::isspace(static_cast<unsigned char>(ch))) s.push_back(ch);
  if (s.empty()) throw ParseError("empty ring element");
  if (s.front() == '[') {
    if (s.back() != ']') throw ParseError("unterminated CRT form '" + s + "'");
    return parse_crt(s);
  }

  StandardCoeffs coeffs;
  std::size_t pos = 0;
  while (pos <= s.size()) {
    const std::size_t plus = s.find('+', pos);
    const std::string term = s.substr(pos, plus == std::string::npos ? std::string::npos : plus - pos);
    if (term.empty()) throw ParseError("empty term in '" + s + "'");
    std::size_t i = 0;
    int coef = 1;
    if (std::isdigit(static_cast<unsigned char>(term[0]))) {
      coef = term[0] - '0';
      i = 1;
      if (i < term.size() && std::isdigit(static_cast<unsigned char>(term[i])))
        throw ParseError("coefficient in '" + term + "' is not a single digit 0..3");
      if (coef > 3) throw ParseError("coefficient in '" + term + "' is not in 0..3");
    }
    const std::string letters = term.substr(i);
    if (i == 0 && letters.empty()) throw ParseError("empty term in '" + s + "'");
    const int idx = monomial_index(letters);
    if (idx < 0) throw ParseError("unknown monomial '" + letters + "' in '" + s + "'");
    coeffs.c[idx] = m4(coeffs.c[idx] + coef);
    if (plus == std::string::npos) break;
    pos = plus + 1;
    if (pos == s.size()) throw ParseError("trailing '+' in '" + s + "'");
  }
  return crt_decompose(coeffs);
}

std::string to_standard_string(RingElement r) {
  const StandardCoeffs s = crt_compose(r);
  std::string out;
  for (int i = 0; i < 8; ++i) {
    if (s.c[i] == 0) continue;
    if (!out.empty()) out += '+';
    if (i == 0 || s.c[i] != 1) out += static_cast<char>('0' + s.c[i]);
    out += kMonomials[i];
  }
  return out.empty() ? "0" : out;
}

std::string to_crt_string(RingElement r) {
  std::string out = "[";
  for (int t = 0; t < kSlots; ++t) {
    if (t) out += ',';
    out += static_cast<char>('0' + r.coord(t));
  }
  return out + "]";
}

}  // namespace z4r
