#pragma once

#include <compare>
#include <optional>
#include <string>
#include <vector>

#include "hkpos/poly.hpp"
#include "hkpos/rational.hpp"

namespace hkpos {

struct Interval {
  Rational lo;
  Rational hi;

  Rational width() const { return hi - lo; }
  bool contains(const Rational& x) const { return lo <= x && x <= hi; }
};

/// Sturm chain of a square-free polynomial. Counts distinct real roots in
/// (a, b] through sign variations.
class SturmSequence {
 public:
  explicit SturmSequence(const UniPoly& p);

  int variations(const Rational& at) const;
  /// Number of distinct roots in (lo, hi].
  int count(const Rational& lo, const Rational& hi) const { return variations(lo) - variations(hi); }
  const std::vector<UniPoly>& chain() const { return chain_; }

 private:
  std::vector<UniPoly> chain_;
};

/// A real root of a rational polynomial, pinned by an isolating interval.
///
/// Irrational roots keep a primitive square-free defining polynomial that
/// changes sign strictly across (lo, hi) and has exactly one root there.
/// Rational roots are always snapped to a point interval [r, r] with a linear
/// defining polynomial. Values are immutable; refinement returns a new value.
class AlgebraicReal {
 public:
  static AlgebraicReal from_rational(const Rational& r);
  /// Validates and normalises a (polynomial, interval) pair. The polynomial is
  /// reduced to its square-free part; the open interval (lo, hi) must contain
  /// exactly one root and neither endpoint may be a root unless lo == hi.
  /// Throws DomainError otherwise.
  static AlgebraicReal from_isolating(const UniPoly& p, const Rational& lo, const Rational& hi);

  const UniPoly& defining() const { return defining_; }
  const Rational& lower() const { return lo_; }
  const Rational& upper() const { return hi_; }
  Interval interval() const { return {lo_, hi_}; }

  bool is_rational() const { return lo_ == hi_; }
  std::optional<Rational> rational_value() const {
    return is_rational() ? std::optional<Rational>(lo_) : std::nullopt;
  }

  /// Halves the interval width (or snaps to the exact value).
  AlgebraicReal refine() const;
  /// Interval of width <= eps containing the root. eps must be positive.
  Interval refine_to(const Rational& eps) const;

  std::strong_ordering compare(const Rational& r) const;
  int sign() const;

  /// Correctly rounded decimal with `significant` significant digits.
  std::string decimal(int significant = 6) const;
  /// "8" for rational roots, otherwise the decimal.
  std::string to_string(int significant = 6) const;

  friend bool operator==(const AlgebraicReal& x, const Rational& r) { return x.compare(r) == 0; }
  friend std::strong_ordering operator<=>(const AlgebraicReal& x, const Rational& r) { return x.compare(r); }

 private:
  AlgebraicReal(UniPoly defining, Rational lo, Rational hi)
      : defining_(std::move(defining)), lo_(std::move(lo)), hi_(std::move(hi)) {}

  friend std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p);
  static AlgebraicReal settle(const UniPoly& square_free, Rational lo, Rational hi);

  UniPoly defining_;
  Rational lo_;
  Rational hi_;
};

/// One AlgebraicReal per distinct real root, in ascending order. Throws
/// DomainError for the zero polynomial.
std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p);
std::optional<AlgebraicReal> largest_real_root(const UniPoly& p);
/// Strict upper bound on the absolute value of every root (Cauchy).
Rational root_bound(const UniPoly& p);

}  // namespace hkpos
