#pragma once

#include <compare>
#include <initializer_list>
#include <map>
#include <string>
#include <utility>

#include "hkpos/rational.hpp"

namespace hkpos {

/// Commutative monomial in the even Chern symbols c2, c4, c6, ...
///
/// Stored as an exponent map, so c2*c4 and c4*c2 are the same value. Odd
/// indices are rejected: the odd Chern classes of a hyperkaehler manifold
/// vanish. Weight is measured in complex codimension (c_k has weight k).
class ChernMonomial {
 public:
  ChernMonomial() = default;
  /// Pairs of (symbol index, exponent). Zero exponents are dropped; repeated
  /// indices accumulate. Throws DomainError for odd or non-positive indices
  /// and negative exponents.
  ChernMonomial(std::initializer_list<std::pair<int, int>> exponents);

  static ChernMonomial one() { return {}; }
  static ChernMonomial symbol(int index) { return {{index, 1}}; }

  int weight() const;
  int exponent(int index) const;
  bool is_one() const { return exponents_.empty(); }
  const std::map<int, int>& exponents() const { return exponents_; }

  /// Throws DomainError like the constructor.
  ChernMonomial& multiply(int index, int exponent);
  friend ChernMonomial operator*(ChernMonomial a, const ChernMonomial& b);

  /// "1", "c2", "c2^2*c4".
  std::string to_string() const;

  friend bool operator==(const ChernMonomial&, const ChernMonomial&) = default;
  /// Lower weight first; within a weight, higher powers of lower symbols first
  /// (c2^3 < c2*c4 < c6), matching how Todd and Segre classes are usually written.
  friend std::strong_ordering operator<=>(const ChernMonomial& a, const ChernMonomial& b);

 private:
  std::map<int, int> exponents_;
};

/// Truncated graded commutative series in the even Chern symbols. Every stored
/// monomial has weight <= truncation and a nonzero coefficient.
class GradedSeries {
 public:
  using Terms = std::map<ChernMonomial, Rational>;

  /// Throws DomainError for a negative truncation.
  explicit GradedSeries(int truncation);
  /// Terms above the truncation are dropped.
  GradedSeries(int truncation, const Terms& terms);

  static GradedSeries one(int truncation) { return GradedSeries(truncation, {{ChernMonomial::one(), Rational(1)}}); }
  /// 1 + c2 + c4 + ... up to the truncation (total Chern class with even symbols).
  static GradedSeries total_chern(int truncation);

  int truncation() const { return truncation_; }
  const Terms& terms() const { return terms_; }
  Rational coefficient(const ChernMonomial& m) const;
  Rational constant_term() const { return coefficient(ChernMonomial::one()); }
  bool is_zero() const { return terms_.empty(); }

  /// Homogeneous part of exactly this weight; 0 <= weight <= truncation.
  GradedSeries component(int weight) const;
  /// Same terms, smaller truncation.
  GradedSeries truncate(int truncation) const;

  GradedSeries& add_term(const ChernMonomial& m, const Rational& c);

  GradedSeries& operator+=(const GradedSeries& rhs);
  GradedSeries& operator-=(const GradedSeries& rhs);
  GradedSeries& operator*=(const Rational& scalar);
  friend GradedSeries operator+(GradedSeries a, const GradedSeries& b) { return a += b; }
  friend GradedSeries operator-(GradedSeries a, const GradedSeries& b) { return a -= b; }
  friend GradedSeries operator*(GradedSeries a, const Rational& s) { return a *= s; }
  friend GradedSeries operator*(const Rational& s, GradedSeries a) { return a *= s; }
  friend bool operator==(const GradedSeries&, const GradedSeries&) = default;

  std::string to_string() const;

 private:
  void require_same_truncation(const GradedSeries& other) const;

  int truncation_;
  Terms terms_;
};

/// Exact truncated product. Throws DomainError on a truncation mismatch.
GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b);
inline GradedSeries operator*(const GradedSeries& a, const GradedSeries& b) { return series_mul(a, b); }
/// Multiplicative inverse, solved weight by weight. Requires constant term 1.
GradedSeries series_inverse(const GradedSeries& a);
/// The square root with constant term 1, solved weight by weight. Requires
/// constant term 1.
GradedSeries series_sqrt(const GradedSeries& a);

}  // namespace hkpos
