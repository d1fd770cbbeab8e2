// Copyright 2026 The Taxlog Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// Exact decimal numbers over an arbitrary-precision integer coefficient.
// Every value is coefficient / 10^scale with the scale kept minimal, so
// equal values have equal representations and dollar arithmetic stays
// penny-exact. No binary floating point is involved anywhere.

#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <compare>
#include <stdexcept>
#include <string>

namespace taxlog {

using BigInt = boost::multiprecision::cpp_int;

class DecimalError : public std::runtime_error {
public:
  explicit DecimalError(const std::string& what) : std::runtime_error(what) {}
};

// Arbitrary-precision integer from decimal digits. cpp_int's own string
// constructor reads a leading zero as an octal prefix, so digit strings are
// routed through here instead.
inline BigInt bigint_from_digits(const std::string& digits) {
  std::size_t start = 0;
  while (start + 1 < digits.size() && digits[start] == '0') ++start;
  return BigInt(digits.substr(start));
}

class Decimal {
public:
  Decimal() = default;
  Decimal(long v) : coeff_(v) {}  // NOLINT: implicit on purpose for literals
  explicit Decimal(BigInt v) : coeff_(std::move(v)) {}

  // coeff / 10^scale, normalized so the scale is minimal.
  static Decimal scaled(BigInt coeff, int scale) {
    if (scale < 0) throw DecimalError("negative decimal scale");
    Decimal d;
    d.coeff_ = std::move(coeff);
    d.scale_ = scale;
    d.normalize();
    return d;
  }

  // Accepts [-]digits[.digits]; rejects anything else.
  static Decimal parse(const std::string& text) {
    if (text.empty()) throw DecimalError("empty decimal literal");
    std::size_t i = 0;
    bool neg = false;
    if (text[i] == '-') { neg = true; ++i; }
    std::string digits;
    int scale = 0;
    bool seen_dot = false, seen_digit = false;
    for (; i < text.size(); ++i) {
      char c = text[i];
      if (c == '.') {
        if (seen_dot || !seen_digit) throw DecimalError("malformed decimal literal: " + text);
        seen_dot = true;
      } else if (c >= '0' && c <= '9') {
        digits.push_back(c);
        seen_digit = true;
        if (seen_dot) ++scale;
      } else {
        throw DecimalError("malformed decimal literal: " + text);
      }
    }
    if (!seen_digit || (seen_dot && scale == 0))
      throw DecimalError("malformed decimal literal: " + text);
    BigInt coeff = bigint_from_digits(digits);
    if (neg) coeff = -coeff;
    return scaled(std::move(coeff), scale);
  }

  const BigInt& coefficient() const { return coeff_; }
  int scale() const { return scale_; }
  bool is_integer() const { return scale_ == 0; }
  bool is_zero() const { return coeff_ == 0; }
  bool is_negative() const { return coeff_ < 0; }

  // Requires is_integer().
  const BigInt& integer_value() const {
    if (scale_ != 0) throw DecimalError("not an integer: " + str());
    return coeff_;
  }

  friend Decimal operator+(const Decimal& a, const Decimal& b) {
    int s = std::max(a.scale_, b.scale_);
    return scaled(a.at_scale(s) + b.at_scale(s), s);
  }
  friend Decimal operator-(const Decimal& a, const Decimal& b) {
    int s = std::max(a.scale_, b.scale_);
    return scaled(a.at_scale(s) - b.at_scale(s), s);
  }
  friend Decimal operator*(const Decimal& a, const Decimal& b) {
    return scaled(a.coeff_ * b.coeff_, a.scale_ + b.scale_);
  }
  Decimal operator-() const { return scaled(-coeff_, scale_); }

  // Exact quotient. Throws when the result does not terminate within
  // max_scale fractional digits (e.g. 1/3): callers that want rounding
  // must ask for it explicitly via round_dollar/ceil/floor.
  static Decimal divide(const Decimal& a, const Decimal& b, int max_scale = 12) {
    if (b.coeff_ == 0) throw DecimalError("division by zero");
    // a/b = (a.c * 10^(b.s - a.s)) / b.c as an exact fraction.
    BigInt num = a.coeff_;
    BigInt den = b.coeff_;
    int net_scale = a.scale_ - b.scale_;  // result = (num/den) * 10^-net_scale
    if (den < 0) { num = -num; den = -den; }
    BigInt g = boost::multiprecision::gcd(num < 0 ? BigInt(-num) : num, den);
    if (g > 1) { num /= g; den /= g; }
    // den must now be 2^x * 5^y for an exact decimal.
    int extra = 0;
    BigInt d = den;
    while (d % 2 == 0) { d /= 2; ++extra; }
    int fives = 0;
    while (d % 5 == 0) { d /= 5; ++fives; }
    if (d != 1) throw DecimalError("inexact division: " + a.str() + " / " + b.str());
    extra = std::max(extra, fives);
    int scale = net_scale + extra;
    num *= pow10(extra);
    num /= den;
    if (scale < 0) { num *= pow10(-scale); scale = 0; }
    if (scale > max_scale)
      throw DecimalError("division result exceeds precision bound: " + a.str() + " / " + b.str());
    return scaled(std::move(num), scale);
  }

  Decimal abs() const { return coeff_ < 0 ? -*this : *this; }

  // Round to an integer, halves away from zero.
  Decimal round_half_away() const {
    if (scale_ == 0) return *this;
    BigInt p = pow10(scale_);
    BigInt q = coeff_ / p;
    BigInt r = coeff_ % p;
    if (r < 0) r = -r;
    if (2 * r >= p) q += (coeff_ < 0 ? -1 : 1);
    return Decimal(q);
  }

  Decimal floor() const {
    if (scale_ == 0) return *this;
    BigInt p = pow10(scale_);
    BigInt q = coeff_ / p;
    if (coeff_ < 0 && coeff_ % p != 0) q -= 1;
    return Decimal(q);
  }

  Decimal ceil() const {
    if (scale_ == 0) return *this;
    BigInt p = pow10(scale_);
    BigInt q = coeff_ / p;
    if (coeff_ > 0 && coeff_ % p != 0) q += 1;
    return Decimal(q);
  }

  std::strong_ordering operator<=>(const Decimal& other) const {
    int s = std::max(scale_, other.scale_);
    BigInt a = at_scale(s), b = other.at_scale(s);
    if (a < b) return std::strong_ordering::less;
    if (a > b) return std::strong_ordering::greater;
    return std::strong_ordering::equal;
  }
  bool operator==(const Decimal& other) const {
    return scale_ == other.scale_ && coeff_ == other.coeff_;
  }

  // Minimal textual form: "120", "-0.5", "0.9998".
  std::string str() const {
    std::string digits = coeff_.str();
    bool neg = false;
    if (!digits.empty() && digits[0] == '-') { neg = true; digits.erase(0, 1); }
    if (scale_ > 0) {
      while (digits.size() <= static_cast<std::size_t>(scale_))
        digits.insert(digits.begin(), '0');
      digits.insert(digits.size() - scale_, ".");
    }
    return neg ? "-" + digits : digits;
  }

private:
  static BigInt pow10(int n) {
    BigInt p = 1;
    for (int i = 0; i < n; ++i) p *= 10;
    return p;
  }

  BigInt at_scale(int s) const { return coeff_ * pow10(s - scale_); }

  void normalize() {
    if (coeff_ == 0) { scale_ = 0; return; }
    while (scale_ > 0 && coeff_ % 10 == 0) { coeff_ /= 10; --scale_; }
  }

  BigInt coeff_ = 0;
  int scale_ = 0;
};

}  // namespace taxlog
