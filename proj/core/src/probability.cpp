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

#include "relind/probability.hpp"

#include "relind/errors.hpp"

#include <charconv>
#include <cmath>
#include <cstdio>
#include <limits>

namespace relind {

namespace {

bool parse_digits(std::string_view s, boost::multiprecision::cpp_int& out) {
  if (s.empty()) return false;
  out = 0;
  for (char ch : s) {
    if (ch < '0' || ch > '9') return false;
    out = out * 10 + (ch - '0');
  }
  return true;
}

// Exact decimal or fraction; nullopt-like false when the text is not of that form.
bool parse_exact(std::string_view text, Rational& out) {
  bool negative = false;
  if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  boost::multiprecision::cpp_int num;
  boost::multiprecision::cpp_int den;
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    if (!parse_digits(text.substr(0, slash), num)) return false;
    if (!parse_digits(text.substr(slash + 1), den)) return false;
    if (den == 0) throw DomainError("zero denominator in '" + std::string(text) + "'");
  } else if (auto dot = text.find('.'); dot != std::string_view::npos) {
    auto whole = text.substr(0, dot);
    auto frac = text.substr(dot + 1);
    if (whole.empty() && frac.empty()) return false;
    boost::multiprecision::cpp_int w = 0;
    boost::multiprecision::cpp_int f = 0;
    if (!whole.empty() && !parse_digits(whole, w)) return false;
    if (!frac.empty() && !parse_digits(frac, f)) return false;
    den = boost::multiprecision::pow(boost::multiprecision::cpp_int(10),
                                     static_cast<unsigned>(frac.size()));
    num = w * den + f;
  } else {
    if (!parse_digits(text, num)) return false;
    den = 1;
  }
  out = Rational(num, den);
  if (negative) out = -out;
  return true;
}

}  // namespace

Probability Probability::ratio(long long num, long long den) {
  if (den == 0) throw DomainError("zero denominator");
  return Probability(Rational(num, den));
}

Probability Probability::parse(std::string_view text) {
  Rational r;
  if (parse_exact(text, r)) return Probability(r);
  std::string owned(text);
  double v = 0;
  auto [ptr, ec] = std::from_chars(owned.data(), owned.data() + owned.size(), v);
  if (ec != std::errc() || ptr != owned.data() + owned.size() || !std::isfinite(v)) {
    throw DomainError("not a probability: '" + owned + "'");
  }
  return inexact(v);
}

const Rational& Probability::exact() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r;
  throw Error("probability is not exact: " + to_string());
}

double Probability::to_double() const {
  if (auto* r = std::get_if<Rational>(&value_)) return r->convert_to<double>();
  return std::get<double>(value_);
}

std::string Probability::to_string() const {
  if (auto* r = std::get_if<Rational>(&value_)) {
    if (boost::multiprecision::denominator(*r) == 1) return boost::multiprecision::numerator(*r).str();
    return r->str();
  }
  char buf[64];
  auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), std::get<double>(value_));
  return std::string(buf, ptr);
}

Probability Probability::operator-() const {
  if (auto* r = std::get_if<Rational>(&value_)) return Probability(Rational(-*r));
  return inexact(-std::get<double>(value_));
}

Probability operator+(const Probability& a, const Probability& b) {
  if (a.is_exact() && b.is_exact()) return Probability(Rational(a.exact() + b.exact()));
  return Probability::inexact(a.to_double() + b.to_double());
}

Probability operator-(const Probability& a, const Probability& b) {
  if (a.is_exact() && b.is_exact()) return Probability(Rational(a.exact() - b.exact()));
  return Probability::inexact(a.to_double() - b.to_double());
}

Probability operator*(const Probability& a, const Probability& b) {
  if (a.is_exact() && b.is_exact()) return Probability(Rational(a.exact() * b.exact()));
  return Probability::inexact(a.to_double() * b.to_double());
}

Probability operator/(const Probability& a, const Probability& b) {
  if (b.is_zero()) throw ModelInconsistency("division by a zero probability");
  if (a.is_exact() && b.is_exact()) return Probability(Rational(a.exact() / b.exact()));
  return Probability::inexact(a.to_double() / b.to_double());
}

bool operator==(const Probability& a, const Probability& b) {
  if (a.is_exact() && b.is_exact()) return a.exact() == b.exact();
  return a.to_double() == b.to_double();
}

std::partial_ordering operator<=>(const Probability& a, const Probability& b) {
  if (a.is_exact() && b.is_exact()) {
    const auto& x = a.exact();
    const auto& y = b.exact();
    if (x < y) return std::partial_ordering::less;
    if (y < x) return std::partial_ordering::greater;
    return std::partial_ordering::equivalent;
  }
  return a.to_double() <=> b.to_double();
}

bool Probability::is_zero() const {
  if (auto* r = std::get_if<Rational>(&value_)) return *r == 0;
  return std::get<double>(value_) == 0.0;
}

Probability Probability::abs() const { return *this < Probability(0) ? -*this : *this; }

bool within(const Probability& a, const Probability& b, double tol) {
  Probability diff = (a - b).abs();
  if (diff.is_exact()) {
    if (tol == 0.0) return diff.is_zero();
    return diff.exact() <= Rational(tol);
  }
  return diff.to_double() <= tol;
}

}  // namespace relind
