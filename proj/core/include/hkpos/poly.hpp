#pragma once

#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hkpos/rational.hpp"

namespace hkpos {

/// Dense univariate polynomial over the rationals. Coefficients are stored in
/// ascending degree with no trailing zeros, so the zero polynomial is empty.
class UniPoly {
 public:
  UniPoly() = default;
  explicit UniPoly(std::vector<Rational> coeffs);
  UniPoly(std::initializer_list<Rational> coeffs) : UniPoly(std::vector<Rational>(coeffs)) {}

  static UniPoly constant(const Rational& c) { return UniPoly({c}); }
  /// c * x^k
  static UniPoly monomial(const Rational& c, unsigned k);
  static UniPoly x() { return monomial(Rational(1), 1); }

  /// -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  bool is_constant() const { return coeffs_.size() <= 1; }
  std::span<const Rational> coeffs() const { return coeffs_; }
  /// Coefficient of x^i; zero beyond the degree.
  Rational coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rational(0); }
  Rational leading() const { return is_zero() ? Rational(0) : coeffs_.back(); }

  UniPoly derivative() const;
  Rational eval(const Rational& at) const;
  /// Sign of p(at) without forming the full value when it is zero.
  int sign_at(const Rational& at) const { return eval(at).sign(); }
  /// p(inner(x)).
  UniPoly compose(const UniPoly& inner) const;

  /// Scaled to leading coefficient 1. The zero polynomial stays zero.
  UniPoly monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  UniPoly primitive() const;

  UniPoly operator-() const;
  UniPoly& operator+=(const UniPoly& rhs);
  UniPoly& operator-=(const UniPoly& rhs);
  UniPoly& operator*=(const UniPoly& rhs);
  UniPoly& operator*=(const Rational& rhs);

  friend UniPoly operator+(UniPoly a, const UniPoly& b) { return a += b; }
  friend UniPoly operator-(UniPoly a, const UniPoly& b) { return a -= b; }
  friend UniPoly operator*(UniPoly a, const UniPoly& b) { return a *= b; }
  friend UniPoly operator*(UniPoly a, const Rational& b) { return a *= b; }
  friend UniPoly operator*(const Rational& a, UniPoly b) { return b *= a; }
  friend bool operator==(const UniPoly&, const UniPoly&) = default;

  /// Human-readable form in descending degree, e.g. "105t^2 - 630t + 504".
  std::string to_string(std::string_view var = "t") const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

/// Euclidean division; throws DomainError when the divisor is zero.
std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den);
/// Monic gcd (zero iff both inputs are zero).
UniPoly gcd(const UniPoly& a, const UniPoly& b);
/// p / gcd(p, p'), made primitive.
UniPoly square_free_part(const UniPoly& p);
UniPoly pow(const UniPoly& base, unsigned exponent);

}  // namespace hkpos
