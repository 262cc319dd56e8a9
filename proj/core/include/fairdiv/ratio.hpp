// Copyright 2026 The fairdiv Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef FAIRDIV_RATIO_HPP_
#define FAIRDIV_RATIO_HPP_

#include <compare>
#include <stdexcept>
#include <string>
#include <utility>

#include "fairdiv/rational.hpp"

namespace fairdiv {

/// Largest alpha for which a fairness constraint holds: a finite non-negative
/// rational, or Unbounded when the constraint is vacuous. Unbounded compares
/// above every finite value.
class Ratio {
 public:
  /// Default-constructed ratios are Unbounded, the identity for min-aggregation.
  Ratio() noexcept = default;

  static Ratio unbounded() noexcept { return Ratio(); }
  static Ratio finite(Rational value) { return Ratio(std::move(value)); }
  /// numerator / denominator, or Unbounded when the denominator is zero.
  static Ratio quotient(const Rational& numerator, const Rational& denominator) {
    return denominator.is_zero() ? Ratio() : Ratio(numerator / denominator);
  }

  [[nodiscard]] bool is_unbounded() const noexcept { return unbounded_; }
  [[nodiscard]] bool is_finite() const noexcept { return !unbounded_; }
  /// Throws std::logic_error when Unbounded.
  [[nodiscard]] const Rational& value() const {
    if (unbounded_) throw std::logic_error("value() of an unbounded ratio");
    return value_;
  }

  /// The allocation is alpha-satisfied for this constraint iff ratio >= alpha.
  [[nodiscard]] bool satisfies(const Rational& alpha) const { return unbounded_ || value_ >= alpha; }

  /// "unbounded" or the exact rational.
  [[nodiscard]] std::string to_string() const { return unbounded_ ? "unbounded" : value_.to_string(); }
  [[nodiscard]] std::string to_decimal(int significant_digits = 15) const {
    return unbounded_ ? "unbounded" : value_.to_decimal(significant_digits);
  }

  friend bool operator==(const Ratio& lhs, const Ratio& rhs) noexcept {
    return lhs.unbounded_ == rhs.unbounded_ && (lhs.unbounded_ || lhs.value_ == rhs.value_);
  }
  friend std::strong_ordering operator<=>(const Ratio& lhs, const Ratio& rhs) {
    if (lhs.unbounded_ || rhs.unbounded_) return lhs.unbounded_ <=> rhs.unbounded_;
    return lhs.value_ <=> rhs.value_;
  }
  friend bool operator==(const Ratio& lhs, const Rational& rhs) { return !lhs.unbounded_ && lhs.value_ == rhs; }

 private:
  explicit Ratio(Rational value) : value_(std::move(value)), unbounded_(false) {}

  Rational value_;
  bool unbounded_ = true;
};

[[nodiscard]] inline Ratio min(const Ratio& a, const Ratio& b) { return b < a ? b : a; }

}  // namespace fairdiv

#endif  // FAIRDIV_RATIO_HPP_
