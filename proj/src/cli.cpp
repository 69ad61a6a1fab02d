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

#include "z4r/cli.hpp"

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "z4r/catalog.hpp"
#include "z4r/enumerators.hpp"
#include "z4r/kernels.hpp"

namespace z4r::cli {

namespace {

using Clock = std::chrono::steady_clock;

std::string size_string(std::size_t a, std::size_t b) {
  return "4^" + std::to_string(a) + " 2^" + std::to_string(b);
}

std::string parameter_string(std::size_t length, std::size_t a, std::size_t b, const std::string& d) {
  return "[" + std::to_string(length) + ", " + size_string(a, b) + ", " + d + "]";
}

Json distance_json(const std::optional<int>& d) { return d ? Json(*d) : Json("infinite"); }

std::string distance_text(const std::optional<int>& d) { return d ? std::to_string(*d) : "inf"; }

Json big_list(const std::vector<BigInt>& v) {
  Json out = Json::array();
  for (const auto& x : v) out.push_back(to_decimal(x));
  return out;
}

double elapsed_ms(Clock::time_point since) {
  return std::chrono::duration<double, std::milli>(Clock::now() - since).count();
}

void stamp(Json& r, const Options& o, Clock::time_point since) {
  if (o.timing) r["timing_ms"] = elapsed_ms(since);
}

// ---- config -------------------------------------------------------------

int to_z4(const Json& v, const std::string& where) {
  if (!v.is_number_integer()) throw ParseError(where + ": expected an integer, got " + v.dump());
  const long long x = v.get<long long>();
  return static_cast<int>(((x % 4) + 4) % 4);
}

Z4Poly poly_field(const Json& obj, const char* key, const std::string& where) {
  if (!obj.contains(key)) return {};
  const Json& a = obj.at(key);
  const std::string at = where + "." + key;
  if (!a.is_array()) throw ParseError(at + ": expected a coefficient list");
  std::vector<int> c;
  for (std::size_t i = 0; i < a.size(); ++i) c.push_back(to_z4(a[i], at + "[" + std::to_string(i) + "]"));
  return Z4Poly(c);
}

Z4Matrix matrix_field(const Json& m, std::optional<std::size_t>& length, const std::string& where) {
  if (!m.is_array()) throw ParseError(where + ": expected a list of rows");
  std::vector<Z4Vector> rows;
  for (std::size_t r = 0; r < m.size(); ++r) {
    const std::string at = where + "[" + std::to_string(r) + "]";
    if (!m[r].is_array()) throw ParseError(at + ": expected a row of integers");
    if (length && m[r].size() != *length)
      throw ParseError(at + ": expected " + std::to_string(*length) + " entries, got " + std::to_string(m[r].size()));
    length = m[r].size();
    Z4Vector row;
    for (std::size_t j = 0; j < m[r].size(); ++j)
      row.push_back(static_cast<Z4>(to_z4(m[r][j], at + "[" + std::to_string(j) + "]")));
    rows.push_back(std::move(row));
  }
  return Z4Matrix::from_rows(rows, length.value_or(0));
}

// ---- component analysis ---------------------------------------------------

// Weight distributions per component, shared between equal components.
class ComponentCache {
 public:
  explicit ComponentCache(std::uint64_t budget) : budget_(budget) {}

  const std::optional<WeightDistribution>& get(const Z4Code& c) {
    for (auto& [code, wd] : entries_)
      if (code == c) return wd;
    std::optional<WeightDistribution> wd;
    try {
      wd = weight_distribution(c, budget_);
    } catch (const BudgetExceeded&) {
    }
    entries_.emplace_back(c, std::move(wd));
    return entries_.back().second;
  }

 private:
  std::uint64_t budget_;
  std::vector<std::pair<Z4Code, std::optional<WeightDistribution>>> entries_;
};

std::optional<int> first_nonzero(const std::vector<std::uint64_t>& dist) {
  for (std::size_t w = 1; w < dist.size(); ++w)
    if (dist[w]) return static_cast<int>(w);
  return std::nullopt;
}

std::vector<BigInt> convolve(const std::vector<BigInt>& a, const std::vector<std::uint64_t>& b) {
  std::vector<BigInt> out(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      if (b[j]) out[i + j] += a[i] * b[j];
  return out;
}

// Lee enumerator of the Gray image: the product of the component Lee
// distributions. Coefficient i counts words of Lee weight i.
std::optional<std::vector<BigInt>> lee_by_components(const RCode& c, ComponentCache& cache) {
  std::vector<BigInt> acc{1};
  for (const auto& comp : c.components()) {
    const auto& wd = cache.get(comp);
    if (!wd) return std::nullopt;
    acc = convolve(acc, wd->lee);
  }
  acc.resize(16 * c.length() + 1);
  return acc;
}

struct Distances {
  std::optional<int> lee, hamming;
  bool complete = true;
};

Distances component_distances(const RCode& c, ComponentCache& cache, Json& rows, const Options& o) {
  Distances d;
  for (int t = 0; t < kSlots; ++t) {
    const Z4Code& comp = c.component(t);
    Json row;
    row["slot"] = t + 1;
    row["k1"] = comp.k1();
    row["k2"] = comp.k2();
    if (comp.is_zero()) {
      row["d_lee"] = "infinite";
      row["d_hamming"] = "infinite";
      rows.push_back(row);
      continue;
    }
    const auto& wd = cache.get(comp);
    if (!wd) {
      d.complete = false;
      row["skipped"] = "component has 2^" + std::to_string(comp.log2_size()) + " words, budget is " +
                       std::to_string(o.budget);
      rows.push_back(row);
      continue;
    }
    const auto l = first_nonzero(wd->lee);
    const auto h = first_nonzero(wd->hamming);
    if (o.metric != MetricChoice::Hamming) row["d_lee"] = distance_json(l);
    if (o.metric != MetricChoice::Lee) row["d_hamming"] = distance_json(h);
    if (l && (!d.lee || *l < *d.lee)) d.lee = l;
    if (h && (!d.hamming || *h < *d.hamming)) d.hamming = h;
    rows.push_back(row);
  }
  return d;
}

// ---- examples ------------------------------------------------------------

Json factor_list(const std::vector<Z4Poly>& fs) {
  Json out = Json::array();
  for (const auto& f : fs) out.push_back(f.to_string());
  return out;
}

Json run_variant(const CatalogExample& e, const ExampleVariant& v, const Options& o, Outcome& out) {
  const auto start = Clock::now();
  Json r;
  r["example"] = e.number;
  r["variant"] = v.number;
  r["n"] = e.n;

  const RCyclicCode rc = r_cyclic(e.spec(v));
  const RCode& code = rc.code;
  std::size_t a = 0, b = 0;
  Json comps = Json::array();
  for (std::size_t t = 0; t < 8; ++t) {
    const CyclicSpec s = e.component_spec(v.components[t]);
    const TypeExponents x = cardinality_exponents(s.f, s.p, e.n);
    a += x.exp4;
    b += x.exp2;
    comps.push_back({{"slot", t + 1}, {"f1", s.f.to_string()}, {"f2", s.p.to_string()}});
  }
  r["components"] = comps;

  const auto& c = v.claimed;
  r["claimed"] = {{"parameters", parameter_string(c.length, c.exp4, c.exp2, std::to_string(c.distance))},
                  {"length", c.length},
                  {"exp4", c.exp4},
                  {"exp2", c.exp2},
                  {"d", c.distance}};

  Json checks;
  checks["size_formula_vs_structure"] =
      out.note(Verdict::check(code.exp4() == a && code.exp2() == b,
                              "structure gives " + size_string(code.exp4(), code.exp2()) + ", formula gives " +
                                  size_string(a, b)))
          .to_json();

  ComponentCache cache(o.budget);
  bool enumerated = true;
  for (const auto& comp : code.components()) {
    const auto& wd = cache.get(comp);
    if (!wd) {
      enumerated = false;
      continue;
    }
    std::uint64_t total = 0;
    for (auto x : wd->lee) total += x;
    if (BigInt(total) != comp.size()) {
      checks["size_enumerated"] = out.note(Verdict::fail("component enumeration disagrees with its type")).to_json();
      break;
    }
  }
  if (!checks.contains("size_enumerated"))
    checks["size_enumerated"] = enumerated ? Verdict::pass().to_json()
                                           : Verdict::skip("components exceed the enumeration budget").to_json();
  checks["cyclic"] = out.note(Verdict::check(is_cyclic_r(code), "a shifted generator left the code")).to_json();
  checks["quasi_cyclic_index_8"] =
      out.note(Verdict::check(is_quasi_cyclic(gray_image(code), 8), "Gray image not invariant under sigma_8"))
          .to_json();
  checks["generator_span"] =
      out.note(Verdict::check(r_shift_span({rc.generator, rc.torsion}, e.n) == code,
                              "combined generators span a different code"))
          .to_json();
  r["checks"] = checks;

  Json computed;
  computed["length"] = 8 * e.n;
  computed["exp4"] = a;
  computed["exp2"] = b;
  Json verdicts;
  verdicts["length"] = 8 * e.n == c.length ? "match" : "discrepancy";
  verdicts["size"] = (a == c.exp4 && b == c.exp2) ? "match" : "discrepancy";

  Json rows = Json::array();
  Options all = o;
  all.metric = MetricChoice::Both;
  const Distances d = component_distances(code, cache, rows, all);
  if (d.complete) {
    computed["d_lee"] = distance_json(d.lee);
    computed["d_hamming"] = distance_json(d.hamming);
    computed["distance_method"] = "exhaustive";
    computed["parameters"] = parameter_string(8 * e.n, a, b, distance_text(d.lee));
    verdicts["distance"] = d.lee == c.distance ? "match" : "discrepancy";
  } else {
    // Sampled Lee weights bound the distance from above only.
    int best = -1;
    std::uint64_t drawn = 0;
    std::vector<const Z4Code*> seen;
    for (const auto& comp : code.components()) {
      if (comp.is_zero()) continue;
      bool dup = false;
      for (const Z4Code* s : seen) dup = dup || *s == comp;
      if (dup) continue;
      seen.push_back(&comp);
      const int w = kernels::sampled_min_lee_parallel(kernels::sampling_basis(comp), o.samples, o.seed);
      drawn += o.samples;
      if (w >= 0 && (best < 0 || w < best)) best = w;
    }
    computed["distance_method"] = "sampled";
    computed["samples"] = drawn;
    computed["sampled_min_lee"] = best;
    computed["parameters"] = parameter_string(8 * e.n, a, b, "<=" + std::to_string(best));
    verdicts["distance"] = best >= 0 && best < c.distance ? "discrepancy" : "unverified-exhaustively";
  }
  computed["component_distances"] = rows;
  r["computed"] = computed;
  r["claim"] = verdicts;
  stamp(r, o, start);
  return r;
}

// ---- known codes -----------------------------------------------------------

std::string trim(std::string s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::size_t parse_count(const std::string& s, const std::string& what) {
  if (s.empty() || s.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(what + " '" + s + "' is not a nonnegative integer");
  try {
    return static_cast<std::size_t>(std::stoull(s));
  } catch (const std::out_of_range&) {
    throw ParseError(what + " '" + s + "' is out of range");
  }
}

// "4^a 2^b", "4^{a}2^{b}", "4^a*2^b", "4^a" or "2^b".
std::pair<std::size_t, std::size_t> parse_type(const std::string& s) {
  const auto bad = [&] { return ParseError("size '" + s + "' is not of the form 4^a 2^b or 4^{a}2^{b}"); };
  std::size_t a = 0, b = 0, pos = 0;
  bool seen4 = false, seen2 = false;
  while (pos < s.size()) {
    if (s[pos] == ' ' || s[pos] == '*') {
      ++pos;
      continue;
    }
    if (pos + 2 >= s.size() || s[pos + 1] != '^') throw bad();
    const char base = s[pos];
    if ((base != '4' && base != '2') || (base == '4' ? seen4 || seen2 : seen2)) throw bad();
    (base == '4' ? seen4 : seen2) = true;
    pos += 2;
    const bool braced = s[pos] == '{';
    if (braced) ++pos;
    const std::size_t end = std::min(s.find_first_not_of("0123456789", pos), s.size());
    (base == '4' ? a : b) = parse_count(s.substr(pos, end - pos), "exponent");
    pos = end;
    if (braced) {
      if (pos >= s.size() || s[pos] != '}') throw bad();
      ++pos;
    } else if (pos < s.size() && s[pos] != ' ' && s[pos] != '*') {
      throw bad();
    }
  }
  if (!seen4 && !seen2) throw bad();
  return {a, b};
}

}  // namespace

// ---- public ---------------------------------------------------------------

Json Verdict::to_json() const {
  Json j;
  switch (state) {
    case State::Pass:
      j["status"] = "pass";
      break;
    case State::Fail:
      j["status"] = "fail";
      j["reason"] = reason;
      break;
    case State::Skipped:
      j["status"] = "skipped";
      j["reason"] = reason;
      break;
  }
  return j;
}

const Verdict& Outcome::note(const Verdict& v) {
  if (v.state == Verdict::State::Fail) failed_ = true;
  if (v.state == Verdict::State::Skipped && v.over_budget) budget_ = true;
  return v;
}

int Outcome::exit_code() const {
  if (failed_) return kExitVerificationFailed;
  if (budget_) return kExitBudget;
  return kExitOk;
}

CodeConfig parse_config(const Json& j) {
  if (!j.is_object()) throw ParseError("config: expected a JSON object");
  CodeConfig c;
  if (j.contains("label")) {
    if (!j["label"].is_string()) throw ParseError("label: expected a string");
    c.label = j["label"].get<std::string>();
  }
  if (j.contains("budget")) {
    if (!j["budget"].is_number_unsigned()) throw ParseError("budget: expected a positive integer");
    c.budget = j["budget"].get<std::uint64_t>();
  }
  const bool has_m = j.contains("matrices"), has_c = j.contains("cyclic");
  if (has_m == has_c) throw ParseError("config: exactly one of 'matrices' and 'cyclic' is required");
  std::optional<std::size_t> length;
  if (j.contains("length")) {
    if (!j["length"].is_number_unsigned()) throw ParseError("length: expected a nonnegative integer");
    length = j["length"].get<std::size_t>();
  }
  if (has_m) {
    const Json& ms = j["matrices"];
    if (!ms.is_array() || ms.size() != 8)
      throw ParseError("matrices: expected 8 generator matrices, got " + (ms.is_array() ? std::to_string(ms.size()) : ms.dump()));
    std::array<Z4Matrix, 8> mats;
    for (std::size_t t = 0; t < 8; ++t) mats[t] = matrix_field(ms[t], length, "matrices[" + std::to_string(t) + "]");
    if (!length) throw ParseError("length: every matrix is empty, so 'length' must be given");
    for (auto& m : mats)
      if (m.rows() == 0) m = Z4Matrix(0, *length);
    c.matrices = mats;
  } else {
    const Json& cs = j["cyclic"];
    if (!cs.is_array() || cs.size() != 8)
      throw ParseError("cyclic: expected 8 component specs, got " + (cs.is_array() ? std::to_string(cs.size()) : cs.dump()));
    RCyclicSpec spec;
    for (std::size_t t = 0; t < 8; ++t) {
      const std::string at = "cyclic[" + std::to_string(t) + "]";
      const Json& s = cs[t];
      if (!s.is_object()) throw ParseError(at + ": expected an object with n, f, p, g");
      if (!s.contains("n") || !s["n"].is_number_unsigned() || s["n"].get<std::size_t>() == 0)
        throw ParseError(at + ".n: expected a positive integer");
      const auto n = s["n"].get<std::size_t>();
      if (length && n != *length)
        throw ParseError(at + ".n: length " + std::to_string(n) + " differs from " + std::to_string(*length));
      length = n;
      spec.components[t] = {n, poly_field(s, "f", at), poly_field(s, "p", at), poly_field(s, "g", at)};
    }
    spec.n = *length;
    c.cyclic = spec;
  }
  c.length = *length;
  return c;
}

CodeConfig load_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config '" + path + "'");
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw ParseError(path + ": " + e.what());
  }
  CodeConfig c = parse_config(j);
  if (c.label.empty()) c.label = path;
  return c;
}

RCode build_code(const CodeConfig& c) {
  if (c.cyclic) return r_cyclic(*c.cyclic).code;
  std::array<Z4Code, 8> comps;
  for (std::size_t t = 0; t < 8; ++t) comps[t] = Z4Code((*c.matrices)[t]);
  return RCode(std::move(comps));
}

Json build_report(const RCode& c, const std::string& label, const Options& o, Outcome& out) {
  const auto start = Clock::now();
  const std::size_t n = c.length();
  Json r;
  r["label"] = label;
  r["n"] = n;
  r["length"] = 8 * n;
  r["size"] = {{"exp4", c.exp4()},
               {"exp2", c.exp2()},
               {"type", size_string(c.exp4(), c.exp2())},
               {"value", to_decimal(c.size())}};

  ComponentCache cache(o.budget);
  Json rows = Json::array();
  const Distances d = component_distances(c, cache, rows, o);
  r["components"] = rows;
  if (d.complete) {
    if (o.metric != MetricChoice::Hamming) r["d_lee"] = distance_json(d.lee);
    if (o.metric != MetricChoice::Lee) r["d_hamming"] = distance_json(d.hamming);
    const auto& shown = o.metric == MetricChoice::Hamming ? d.hamming : d.lee;
    r["parameters"] = parameter_string(8 * n, c.exp4(), c.exp2(), distance_text(shown));
  } else {
    r["distances"] = out.note(Verdict::skip("a component exceeds the enumeration budget", true)).to_json();
    r["parameters"] = parameter_string(8 * n, c.exp4(), c.exp2(), "?");
  }

  Json mds;
  if (c.is_zero()) {
    mds["status"] = "undefined";
    mds["reason"] = "the zero code has infinite distance";
  } else if (d.complete) {
    const Rational defect = Rational(static_cast<long long>(n) + 1) -
                            Rational(static_cast<long long>(c.log2_size()), 16) - Rational(*d.hamming);
    std::string text = std::to_string(defect.numerator());
    if (defect.denominator() != 1) text += "/" + std::to_string(defect.denominator());
    mds["status"] = defect == Rational(0) ? "mds" : "not-mds";
    mds["singleton_defect"] = text;
  } else {
    mds["status"] = "skipped";
    mds["reason"] = "needs d_H";
  }
  Json classes = Json::array();
  for (const auto& comp : c.components()) classes.push_back(to_string(mds_classify(comp)));
  mds["components"] = classes;
  r["mds"] = mds;

  Json en;
  if (auto lee = lee_by_components(c, cache)) {
    en["lee"] = {{"method", "product of component Lee distributions"}, {"coefficients", big_list(*lee)}};
  } else {
    en["lee"] = Verdict::skip("a component exceeds the enumeration budget").to_json();
  }
  try {
    en["hamming"] = {{"method", "enumeration"}, {"coefficients", big_list(ham(c, o.budget).coeffs)}};
  } catch (const BudgetExceeded& e) {
    en["hamming"] = Verdict::skip(e.what()).to_json();
  }
  r["enumerators"] = en;

  Json v;
  const RCode cd = dual(c);
  v["size_product"] = out.note(Verdict::check(c.log2_size() + cd.log2_size() == 16 * n,
                                              "|C||C^perp| = 2^" + std::to_string(c.log2_size() + cd.log2_size())))
                          .to_json();
  {
    ComponentCache dual_cache(o.budget);
    const auto lc = lee_by_components(c, cache);
    const auto ld = lee_by_components(cd, dual_cache);
    if (lc && ld) {
      const BivariateEnum t = lee_macwilliams(BivariateEnum{*lc}, c.size());
      const std::string diff = first_difference(t, BivariateEnum{*ld});
      v["lee_macwilliams"] = out.note(Verdict::check(diff.empty(), diff)).to_json();
    } else {
      v["lee_macwilliams"] = Verdict::skip("a component or dual component exceeds the enumeration budget").to_json();
    }
  }
  v["cyclic"] = is_cyclic_r(c);
  v["gray_image_quasi_cyclic_index_8"] = is_quasi_cyclic(gray_image(c), 8);
  r["verification"] = v;
  stamp(r, o, start);
  return r;
}

Json min_distance_report(const RCode& c, const std::string& label, const Options& o, Outcome& out) {
  const auto start = Clock::now();
  Json r;
  r["label"] = label;
  r["length"] = 8 * c.length();
  ComponentCache cache(o.budget);
  Json rows = Json::array();
  const Distances d = component_distances(c, cache, rows, o);
  if (!d.complete) {
    // Lee upper bounds from sampling for the components that are too large.
    int best = -1;
    for (auto& row : rows) {
      if (!row.contains("skipped")) continue;
      const Z4Code& comp = c.component(row["slot"].get<int>() - 1);
      const int w = kernels::sampled_min_lee_parallel(kernels::sampling_basis(comp), o.samples, o.seed);
      row["sampled_min_lee"] = w;
      row["samples"] = o.samples;
      if (w >= 0 && (best < 0 || w < best)) best = w;
    }
    if (d.lee && (best < 0 || *d.lee < best)) best = *d.lee;
    r["d_lee_upper_bound"] = best;
    r["distances"] = out.note(Verdict::skip("exhaustive search exceeds the budget", true)).to_json();
  } else {
    if (o.metric != MetricChoice::Hamming) r["d_lee"] = distance_json(d.lee);
    if (o.metric != MetricChoice::Lee) r["d_hamming"] = distance_json(d.hamming);
  }
  r["components"] = rows;
  stamp(r, o, start);
  return r;
}

EnumeratorKind parse_kind(const std::string& s) {
  if (s == "cwe") return EnumeratorKind::Cwe;
  if (s == "slwe") return EnumeratorKind::Slwe;
  if (s == "ham") return EnumeratorKind::Ham;
  if (s == "lee") return EnumeratorKind::Lee;
  throw ParseError("unknown enumerator kind '" + s + "' (cwe, slwe, ham, lee)");
}

Json macwilliams_report(const RCode& c, EnumeratorKind kind, const std::string& label, const Options& o,
                        Outcome& out) {
  const auto start = Clock::now();
  static const char* const names[] = {"cwe", "slwe", "ham", "lee"};
  Json r;
  r["label"] = label;
  r["kind"] = names[static_cast<int>(kind)];
  const RCode cd = dual(c);
  r["size"] = to_decimal(c.size());
  r["dual_size"] = to_decimal(cd.size());
  if (kind == EnumeratorKind::Ham) r["multiplier"] = kHammingMultiplier;
  Verdict v;
  try {
    std::string diff;
    std::size_t terms = 0;
    switch (kind) {
      case EnumeratorKind::Cwe: {
        const CWE t = cwe_macwilliams(cwe(c, o.budget), c.size(), o.budget);
        const CWE direct = cwe(cd, o.budget);
        diff = first_difference(t, direct);
        terms = direct.terms.size();
        break;
      }
      case EnumeratorKind::Slwe: {
        const SLWE direct = slwe(cd, o.budget);
        diff = first_difference(slwe_macwilliams(slwe(c, o.budget), c.size()), direct);
        terms = direct.terms.size();
        break;
      }
      case EnumeratorKind::Ham: {
        const BivariateEnum direct = ham(cd, o.budget);
        diff = first_difference(ham_macwilliams(ham(c, o.budget), c.size(), c.length()), direct);
        terms = direct.coeffs.size();
        break;
      }
      case EnumeratorKind::Lee: {
        const BivariateEnum direct = lee(cd, o.budget);
        diff = first_difference(lee_macwilliams(lee(c, o.budget), c.size()), direct);
        terms = direct.coeffs.size();
        break;
      }
    }
    r["dual_terms"] = terms;
    v = Verdict::check(diff.empty(), diff);
  } catch (const BudgetExceeded& e) {
    v = Verdict::skip(e.what(), true);
  } catch (const InexactDivision& e) {
    v = Verdict::fail(e.what());
  }
  r["verdict"] = out.note(v).to_json();
  stamp(r, o, start);
  return r;
}

Json examples_report(int which, const Options& o, Outcome& out) {
  Json r = Json::array();
  for (const auto& e : paper_examples()) {
    if (which != 0 && e.number != which) continue;
    Json x;
    x["example"] = e.number;
    x["n"] = e.n;
    x["printed_factors"] = e.printed;
    x["mod2_factors"] = factor_list(e.mod2_factors);
    x["lifted_factors"] = factor_list(e.lifted_factors);
    if (!e.note.empty()) x["note"] = e.note;
    x["factors_mod2"] = out.note(Verdict::check(validate_factorization_mod2(e.n, e.mod2_factors), "bad product"))
                            .to_json();
    x["factors_z4"] =
        out.note(Verdict::check(validate_factorization(e.n, e.lifted_factors), "bad product")).to_json();
    Json vs = Json::array();
    for (const auto& v : e.variants) vs.push_back(run_variant(e, v, o, out));
    x["variants"] = vs;
    r.push_back(x);
  }
  return r;
}

Json ring_table() {
  Json r;
  Json ids = Json::array();
  for (int t = 0; t < kSlots; ++t) {
    const RingElement e = RingElement::idempotent(t);
    ids.push_back({{"slot", t + 1}, {"standard", to_standard_string(e)}, {"crt", to_crt_string(e)}});
  }
  r["idempotents"] = ids;
  Json classes = Json::array();
  const auto& table = lee_class_table();
  for (int k = 0; k <= kMaxSymbolLee; ++k) classes.push_back({{"weight", k}, {"size", table.sizes[k]}});
  r["lee_classes"] = classes;
  Json kernel = Json::array();
  for (const auto& row : slwe_kernel()) kernel.push_back(Json(row));
  r["slwe_kernel"] = kernel;
  return r;
}

std::vector<KnownCode> parse_known_codes(std::istream& in, const std::string& name) {
  std::vector<KnownCode> out;
  std::vector<std::string> errors;
  std::string line;
  for (std::size_t no = 1; std::getline(in, line); ++no) {
    const auto hash = line.find('#');
    const std::string body = trim(hash == std::string::npos ? line : line.substr(0, hash));
    if (body.empty()) continue;
    std::vector<std::string> f;
    std::stringstream ss(body);
    for (std::string cell; std::getline(ss, cell, ',');) f.push_back(trim(cell));
    try {
      KnownCode k;
      k.line = no;
      if (f.size() == 4) {
        k.length = parse_count(f[0], "length");
        k.exp4 = parse_count(f[1], "exponent of 4");
        k.exp2 = parse_count(f[2], "exponent of 2");
      } else if (f.size() == 3) {
        k.length = parse_count(f[0], "length");
        if (f[1].find('^') != std::string::npos)
          std::tie(k.exp4, k.exp2) = parse_type(f[1]);
        else
          k.exp4 = parse_count(f[1], "dimension");
      } else {
        throw ParseError("expected 3 or 4 comma-separated fields, got " + std::to_string(f.size()));
      }
      k.distance = static_cast<int>(parse_count(f.back(), "distance"));
      out.push_back(k);
    } catch (const ParseError& e) {
      errors.push_back(name + ":" + std::to_string(no) + ": " + e.what());
    }
  }
  if (!errors.empty()) {
    std::string msg;
    for (const auto& e : errors) msg += (msg.empty() ? "" : "\n") + e;
    throw ParseError(msg);
  }
  return out;
}

std::string compare_verdict(const std::vector<KnownCode>& table, std::size_t length, std::size_t exp4,
                            std::size_t exp2, int distance) {
  int best = -1;
  for (const auto& k : table)
    if (k.length == length && k.exp4 == exp4 && k.exp2 == exp2) best = std::max(best, k.distance);
  if (best < 0) return "absent (candidate new)";
  if (distance > best) return "better";
  if (distance == best) return "equal";
  return "worse";
}

Json compare_report(const RCode& c, const std::string& label, const std::vector<KnownCode>& table,
                    const Options& o, Outcome& out) {
  const auto start = Clock::now();
  Json r;
  r["label"] = label;
  const std::size_t length = 8 * c.length();
  r["length"] = length;
  r["size"] = size_string(c.exp4(), c.exp2());
  std::optional<int> d;
  try {
    d = min_distance(c, Metric::Lee, o.budget);
  } catch (const BudgetExceeded& e) {
    r["verdict"] = out.note(Verdict::skip(e.what(), true)).to_json();
    stamp(r, o, start);
    return r;
  }
  if (!d) {
    r["d_lee"] = "infinite";
    r["verdict"] = Verdict::skip("the zero code has no finite distance").to_json();
  } else {
    r["d_lee"] = *d;
    r["parameters"] = parameter_string(length, c.exp4(), c.exp2(), std::to_string(*d));
    int best = -1;
    for (const auto& k : table)
      if (k.length == length && k.exp4 == c.exp4() && k.exp2 == c.exp2()) best = std::max(best, k.distance);
    if (best >= 0) r["best_known_d"] = best;
    r["comparison"] = compare_verdict(table, length, c.exp4(), c.exp2(), *d);
  }
  stamp(r, o, start);
  return r;
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Linear codes over the ring Z4[u,v,w] with idempotent u, v, w, and their Z4 Gray images", "z4r"};
  app.require_subcommand(1);

  Options o;
  std::string metric = "both", output;
  bool no_timing = false;
  app.add_option("--budget", o.budget, "Maximum number of codewords any exhaustive sweep may visit")
      ->check(CLI::PositiveNumber);
  app.add_option("--metric", metric, "Distance metric")->check(CLI::IsMember({"lee", "hamming", "both"}));
  app.add_flag("--no-timing", no_timing, "Leave timing fields out of reports");
  app.add_option("--output", output, "Write the report here instead of stdout");
  app.add_option("--samples", o.samples, "Random codewords per component when a sweep is out of budget");
  app.add_option("--seed", o.seed, "Sampling seed");

  std::string config, table, kind, which = "all";
  auto* build = app.add_subcommand("build", "Build a code from a config and report its parameters");
  build->add_option("config", config, "JSON config")->required();
  auto* mw = app.add_subcommand("macwilliams", "Check a MacWilliams identity on a code and its dual");
  mw->add_option("config", config, "JSON config")->required();
  mw->add_option("kind", kind, "cwe, slwe, ham or lee")->required()->check(CLI::IsMember({"cwe", "slwe", "ham", "lee"}));
  auto* ex = app.add_subcommand("examples", "Rebuild the bundled example codes and compare with their claims");
  ex->add_option("which", which, "1..6 or all")->check(CLI::IsMember({"1", "2", "3", "4", "5", "6", "all"}));
  auto* cmp = app.add_subcommand("compare", "Compare a code's Gray image with a table of known codes");
  cmp->add_option("config", config, "JSON config")->required();
  cmp->add_option("table", table, "Known-codes table")->required();
  auto* rt = app.add_subcommand("ring-table", "Print idempotents, Lee class sizes and the SLWE kernel");
  auto* md = app.add_subcommand("min-distance", "Minimum distances of a code's Gray image");
  md->add_option("config", config, "JSON config")->required();
  for (auto* s : {build, mw, ex, cmp, rt, md}) s->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }
  o.timing = !no_timing;
  o.metric = metric == "lee" ? MetricChoice::Lee : metric == "hamming" ? MetricChoice::Hamming : MetricChoice::Both;

  Outcome outcome;
  Json report;
  try {
    auto load = [&] {
      CodeConfig c = load_config(config);
      if (c.budget && !app.get_option("--budget")->count()) o.budget = *c.budget;
      return c;
    };
    if (*build) {
      const CodeConfig c = load();
      report = build_report(build_code(c), c.label, o, outcome);
    } else if (*mw) {
      const CodeConfig c = load();
      report = macwilliams_report(build_code(c), parse_kind(kind), c.label, o, outcome);
    } else if (*ex) {
      report = examples_report(which == "all" ? 0 : std::stoi(which), o, outcome);
    } else if (*cmp) {
      const CodeConfig c = load();
      std::ifstream in(table);
      if (!in) throw ParseError("cannot open table '" + table + "'");
      const auto known = parse_known_codes(in, table);
      report = compare_report(build_code(c), c.label, known, o, outcome);
    } else if (*rt) {
      report = ring_table();
    } else if (*md) {
      const CodeConfig c = load();
      report = min_distance_report(build_code(c), c.label, o, outcome);
    }
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return kExitBudget;
  }

  const std::string text = report.dump(2) + "\n";
  if (output.empty()) {
    out << text;
  } else {
    std::ofstream f(output);
    if (!f) {
      err << "error: cannot write '" << output << "'\n";
      return kExitUsage;
    }
    f << text;
  }
  return outcome.exit_code();
}

}  // namespace z4r::cli
