//  Copyright 2026 The relind Authors
//
//  Licensed under the Apache License, Version 2.0 (the "License");
//  you may not use this file except in compliance with the License.
//  You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
//  Unless required by applicable law or agreed to in writing, software
//  distributed under the License is distributed on an "AS IS" BASIS,
//  WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
//  See the License for the specific language governing permissions and
//  limitations under the License.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <string>
#include <string_view>
#include <variant>

namespace relind {

using Rational = boost::multiprecision::cpp_rational;

/// A probability (or signed probability difference) held as an exact rational
/// when every input was rational, otherwise as a double.
///
/// Arithmetic between two exact values stays exact; any operation touching an
/// inexact operand degrades to double. Comparisons between two exact values
/// are exact.
class Probability {
 public:
  Probability() : value_(Rational(0)) {}
  Probability(int v) : value_(Rational(v)) {}  // NOLINT(runtime/explicit)
  Probability(Rational r) : value_(std::move(r)) {}  // NOLINT
  static Probability ratio(long long num, long long den);
  static Probability inexact(double v) { return Probability(Inexact{v}); }

  /// Accepts "3/8", "0.375", "1" (exact) or anything std::stod understands
  /// with an exponent ("3.75e-1", inexact). Throws DomainError on garbage.
  static Probability parse(std::string_view text);

  bool is_exact() const noexcept { return std::holds_alternative<Rational>(value_); }
  const Rational& exact() const;  ///< throws if !is_exact()
  double to_double() const;

  /// "3/4" for exact values, shortest round-trip decimal otherwise.
  std::string to_string() const;

  Probability operator-() const;
  friend Probability operator+(const Probability& a, const Probability& b);
  friend Probability operator-(const Probability& a, const Probability& b);
  friend Probability operator*(const Probability& a, const Probability& b);
  /// Throws ModelInconsistency on division by zero.
  friend Probability operator/(const Probability& a, const Probability& b);
  Probability& operator+=(const Probability& o) { return *this = *this + o; }
  Probability& operator-=(const Probability& o) { return *this = *this - o; }
  Probability& operator*=(const Probability& o) { return *this = *this * o; }

  friend bool operator==(const Probability& a, const Probability& b);
  friend std::partial_ordering operator<=>(const Probability& a, const Probability& b);

  bool is_zero() const;
  Probability abs() const;

 private:
  struct Inexact {
    double v;
  };
  explicit Probability(Inexact v) : value_(v.v) {}

  std::variant<Rational, double> value_;
};

/// |a - b| <= tol, computed exactly when both are exact (tol = 0 then means
/// exact equality).
bool within(const Probability& a, const Probability& b, double tol);

}  // namespace relind
