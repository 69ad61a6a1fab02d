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

#include <cstdint>
#include <stdexcept>
#include <string>

namespace z4r {

/// Default cap on the number of words an exhaustive sweep may visit (2^24).
inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

/// An exhaustive operation would have to visit more words than allowed.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, double required, std::uint64_t budget)
      : std::runtime_error(what + ": needs ~" + std::to_string(required) +
                           " words, budget is " + std::to_string(budget)),
        required_(required),
        budget_(budget) {}

  double required() const { return required_; }
  std::uint64_t budget() const { return budget_; }

 private:
  double required_;
  std::uint64_t budget_;
};

/// A MacWilliams transform produced a coefficient not divisible by |C|.
/// Signals a non-linear input or a kernel defect.
class InexactDivision : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Exact polynomial division left a nonzero remainder.
class NotDivisible : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

class PreconditionViolated : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

class LengthMismatch : public std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// Malformed textual input (elements, configs, tables).
class ParseError : public std::runtime_error {
  using std::runtime_error::runtime_error;
};

}  // namespace z4r
