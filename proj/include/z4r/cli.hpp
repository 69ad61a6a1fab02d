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
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "json.hpp"
#include "z4r/cyclic.hpp"
#include "z4r/errors.hpp"
#include "z4r/rcode.hpp"

namespace z4r::cli {

using Json = nlohmann::ordered_json;

/// Exit codes.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerificationFailed = 1;
inline constexpr int kExitUsage = 2;
inline constexpr int kExitBudget = 3;

enum class MetricChoice { Lee, Hamming, Both };

struct Options {
  std::uint64_t budget = kDefaultBudget;
  MetricChoice metric = MetricChoice::Both;
  bool timing = true;
  /// Random codewords drawn per component when exhaustive search is out of
  /// budget.
  std::uint64_t samples = 1'000'000;
  std::uint64_t seed = 1;
};

/// Either eight generator matrices or eight cyclic specs.
struct CodeConfig {
  std::string label;
  std::optional<std::uint64_t> budget;
  std::size_t length = 0;
  std::optional<std::array<Z4Matrix, 8>> matrices;
  std::optional<RCyclicSpec> cyclic;
};

/// Throws ParseError naming the offending field.
CodeConfig parse_config(const Json& j);
CodeConfig load_config(const std::string& path);
RCode build_code(const CodeConfig& c);

struct Verdict {
  enum class State { Pass, Fail, Skipped };
  State state = State::Pass;
  std::string reason;
  bool over_budget = false;

  static Verdict pass() { return {}; }
  static Verdict fail(std::string why) { return {State::Fail, std::move(why), false}; }
  static Verdict skip(std::string why, bool budget = false) { return {State::Skipped, std::move(why), budget}; }
  static Verdict check(bool ok, std::string why_not) { return ok ? pass() : fail(std::move(why_not)); }
  Json to_json() const;
};

/// Folds verdicts into an exit code: any failure gives 1, otherwise any
/// budget skip gives 3.
class Outcome {
 public:
  const Verdict& note(const Verdict& v);
  void note_budget() { budget_ = true; }
  int exit_code() const;

 private:
  bool failed_ = false;
  bool budget_ = false;
};

Json build_report(const RCode& c, const std::string& label, const Options& o, Outcome& out);
Json min_distance_report(const RCode& c, const std::string& label, const Options& o, Outcome& out);

enum class EnumeratorKind { Cwe, Slwe, Ham, Lee };
EnumeratorKind parse_kind(const std::string& s);
Json macwilliams_report(const RCode& c, EnumeratorKind kind, const std::string& label, const Options& o,
                        Outcome& out);

/// which = 0 runs every example.
Json examples_report(int which, const Options& o, Outcome& out);

Json ring_table();

struct KnownCode {
  std::size_t length = 0;
  std::size_t exp4 = 0;
  std::size_t exp2 = 0;
  int distance = 0;
  std::size_t line = 0;
};

/// Lines "N,a,b,d", "N,4^a 2^b,d" (or 4^{a}2^{b}) or "N,k,d" meaning 4^k. Blank lines and
/// '#' comments are skipped. Throws ParseError listing every bad line.
std::vector<KnownCode> parse_known_codes(std::istream& in, const std::string& name);

/// "better", "equal", "worse" or "absent (candidate new)" against the
/// largest tabulated distance with the same length and size.
std::string compare_verdict(const std::vector<KnownCode>& table, std::size_t length, std::size_t exp4,
                            std::size_t exp2, int distance);

Json compare_report(const RCode& c, const std::string& label, const std::vector<KnownCode>& table,
                    const Options& o, Outcome& out);

/// Entry point behind the z4r binary.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace z4r::cli
