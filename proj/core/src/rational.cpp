#include "hkpos/rational.hpp"

#include <ostream>
#include <stdexcept>

#include "hkpos/error.hpp"

namespace hkpos {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (c < '0' || c > '9') return false;
  }
  return true;
}

BigInt pow10(long exponent) {
  BigInt result;
  mpz_ui_pow_ui(result.get_mpz_t(), 10, static_cast<unsigned long>(exponent));
  return result;
}

}  // namespace

Rational::Rational(const BigInt& num, const BigInt& den) : value_(num, den) {
  if (den == 0) throw DomainError("rational with zero denominator");
  value_.canonicalize();
}

Rational Rational::parse(std::string_view text) {
  const std::string original(text);
  bool negative = false;
  constexpr std::string_view kUnicodeMinus = "\xE2\x88\x92";
  if (text.substr(0, kUnicodeMinus.size()) == kUnicodeMinus) {
    negative = true;
    text.remove_prefix(kUnicodeMinus.size());
  } else if (!text.empty() && (text.front() == '-' || text.front() == '+')) {
    negative = text.front() == '-';
    text.remove_prefix(1);
  }
  const auto slash = text.find('/');
  const std::string_view num_text = text.substr(0, slash);
  const std::string_view den_text = slash == std::string_view::npos ? "1" : text.substr(slash + 1);
  if (!all_digits(num_text) || !all_digits(den_text)) {
    throw std::invalid_argument("not a rational number: '" + original + "'");
  }
  BigInt num(std::string(num_text), 10);
  const BigInt den(std::string(den_text), 10);
  if (den == 0) throw std::invalid_argument("zero denominator in '" + original + "'");
  if (negative) num = -num;
  return Rational(num, den);
}

Rational Rational::abs() const {
  Rational r;
  r.value_ = ::abs(value_);
  return r;
}

BigInt Rational::floor() const {
  BigInt q;
  mpz_fdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

BigInt Rational::ceil() const {
  BigInt q;
  mpz_cdiv_q(q.get_mpz_t(), value_.get_num_mpz_t(), value_.get_den_mpz_t());
  return q;
}

std::string Rational::to_string() const { return value_.get_str(10); }

Rational Rational::operator-() const {
  Rational r;
  r.value_ = -value_;
  return r;
}

Rational& Rational::operator+=(const Rational& rhs) {
  value_ += rhs.value_;
  return *this;
}

Rational& Rational::operator-=(const Rational& rhs) {
  value_ -= rhs.value_;
  return *this;
}

Rational& Rational::operator*=(const Rational& rhs) {
  value_ *= rhs.value_;
  return *this;
}

Rational& Rational::operator/=(const Rational& rhs) {
  if (rhs.is_zero()) throw DomainError("division by zero");
  value_ /= rhs.value_;
  return *this;
}

Rational pow(const Rational& base, unsigned exponent) {
  Rational result(1);
  Rational b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

Rational binomial(unsigned n, unsigned k) {
  if (k > n) return Rational(0);
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return Rational(r);
}

Rational factorial(unsigned n) {
  BigInt r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return Rational(r);
}

std::string to_decimal(const Rational& value, int significant) {
  if (significant < 1) throw DomainError("decimal precision must be at least one digit");
  if (value.is_zero()) return "0";
  const Rational mag = value.abs();

  // Decade k with 10^k <= |value| < 10^(k+1).
  long k = static_cast<long>(mpz_sizeinbase(mag.num().get_mpz_t(), 10)) -
           static_cast<long>(mpz_sizeinbase(mag.den().get_mpz_t(), 10));
  auto ten_pow = [](long e) {
    return e >= 0 ? Rational(pow10(e)) : Rational(BigInt(1), pow10(-e));
  };
  while (ten_pow(k) > mag) --k;
  while (ten_pow(k + 1) <= mag) ++k;

  long exponent = k - significant + 1;  // value ~ digits * 10^exponent
  auto round_scaled = [&](long e) {
    const Rational scaled = mag / ten_pow(e);
    return (scaled + Rational(1, 2)).floor();
  };
  BigInt digits = round_scaled(exponent);
  if (digits >= pow10(significant)) {
    ++exponent;
    digits = round_scaled(exponent);
  }

  std::string text = digits.get_str(10);
  if (exponent >= 0) {
    text.append(static_cast<std::size_t>(exponent), '0');
  } else {
    const auto frac = static_cast<std::size_t>(-exponent);
    if (text.size() <= frac) text.insert(0, frac - text.size() + 1, '0');
    text.insert(text.size() - frac, ".");
    while (text.back() == '0') text.pop_back();
    if (text.back() == '.') text.pop_back();
  }
  return value.sign() < 0 ? "-" + text : text;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.to_string(); }

}  // namespace hkpos
