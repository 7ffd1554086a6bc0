#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace hkpos {

using BigInt = mpz_class;

/// Exact arbitrary-precision fraction, always in lowest terms with a positive
/// denominator.
class Rational {
 public:
  Rational() = default;
  Rational(long value) : value_(value) {}  // NOLINT(google-explicit-constructor)
  Rational(int value) : value_(value) {}   // NOLINT(google-explicit-constructor)
  explicit Rational(const BigInt& value) : value_(value) {}
  Rational(const BigInt& num, const BigInt& den);
  Rational(long num, long den) : Rational(BigInt(num), BigInt(den)) {}

  /// Parses "p", "p/q", with an optional leading '-' (ASCII or U+2212) or '+'.
  /// Throws std::invalid_argument on anything else, including a zero denominator.
  static Rational parse(std::string_view text);

  BigInt num() const { return value_.get_num(); }
  BigInt den() const { return value_.get_den(); }

  int sign() const { return sgn(value_); }
  bool is_zero() const { return sign() == 0; }
  bool is_integer() const { return value_.get_den() == 1; }

  Rational abs() const;
  BigInt floor() const;
  BigInt ceil() const;
  double to_double() const { return value_.get_d(); }

  /// Canonical text form: "p" for integers, "p/q" otherwise.
  std::string to_string() const;

  Rational operator-() const;
  Rational& operator+=(const Rational& rhs);
  Rational& operator-=(const Rational& rhs);
  Rational& operator*=(const Rational& rhs);
  /// Throws hkpos::DomainError on division by zero.
  Rational& operator/=(const Rational& rhs);

  friend Rational operator+(Rational lhs, const Rational& rhs) { return lhs += rhs; }
  friend Rational operator-(Rational lhs, const Rational& rhs) { return lhs -= rhs; }
  friend Rational operator*(Rational lhs, const Rational& rhs) { return lhs *= rhs; }
  friend Rational operator/(Rational lhs, const Rational& rhs) { return lhs /= rhs; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_;
};

Rational pow(const Rational& base, unsigned exponent);
Rational binomial(unsigned n, unsigned k);
Rational factorial(unsigned n);

/// Rounds to `significant` significant digits (half away from zero) and prints
/// in fixed notation with trailing zeros trimmed. Zero prints as "0".
std::string to_decimal(const Rational& value, int significant);

std::ostream& operator<<(std::ostream& os, const Rational& r);

}  // namespace hkpos
