#pragma once

#include <random>

#include "hkpos/algebraic_real.hpp"
#include "hkpos/graded_series.hpp"
#include "hkpos/rational.hpp"

namespace hkpos::testing {

inline std::mt19937_64& rng() {
  static std::mt19937_64 gen(20261016);
  return gen;
}

inline long uniform(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng()); }

/// num/den with |num| <= range and 1 <= den <= max_den.
inline Rational random_rational(long range, long max_den) { return Rational(uniform(-range, range), uniform(1, max_den)); }

/// Random series with constant term 1 and only even symbols up to the truncation.
inline GradedSeries random_unit_series(int truncation) {
  GradedSeries s = GradedSeries::one(truncation);
  for (int w = 2; w <= truncation; w += 2) {
    // every monomial of weight w in c2, c4, c6, c8
    for (int e2 = 0; 2 * e2 <= w; ++e2) {
      for (int e4 = 0; 2 * e2 + 4 * e4 <= w; ++e4) {
        for (int e6 = 0; 2 * e2 + 4 * e4 + 6 * e6 <= w; ++e6) {
          const int rest = w - 2 * e2 - 4 * e4 - 6 * e6;
          if (rest % 8 != 0) continue;
          if (uniform(0, 2) == 0) continue;
          ChernMonomial m{{2, e2}, {4, e4}, {6, e6}, {8, rest / 8}};
          s.add_term(m, random_rational(9, 6));
        }
      }
    }
  }
  return s;
}

/// Bisection enclosure of x^(1/k) for x >= 0 with width <= eps.
inline Interval root_enclosure(const Rational& x, unsigned k, const Rational& eps) {
  Rational lo(0);
  Rational hi = x > Rational(1) ? x : Rational(1);
  while (hi - lo > eps) {
    const Rational mid = (lo + hi) / Rational(2);
    if (pow(mid, k) <= x) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return {lo, hi};
}

/// (2/21)(18 + cbrt(6(1875 - 7 sqrt 4233)) + cbrt(6(1875 + 7 sqrt 4233))) by
/// interval arithmetic; the result has width well under eps.
inline Interval closed_form_cubic_root(const Rational& eps) {
  const Rational fine = eps / Rational(1000);
  const Interval s = root_enclosure(Rational(4233), 2, fine);
  const Interval minus{Rational(6) * (Rational(1875) - Rational(7) * s.hi), Rational(6) * (Rational(1875) - Rational(7) * s.lo)};
  const Interval plus{Rational(6) * (Rational(1875) + Rational(7) * s.lo), Rational(6) * (Rational(1875) + Rational(7) * s.hi)};
  const Interval a_lo = root_enclosure(minus.lo, 3, fine), a_hi = root_enclosure(minus.hi, 3, fine);
  const Interval b_lo = root_enclosure(plus.lo, 3, fine), b_hi = root_enclosure(plus.hi, 3, fine);
  const Rational scale(2, 21);
  return {scale * (Rational(18) + a_lo.lo + b_lo.lo), scale * (Rational(18) + a_hi.hi + b_hi.hi)};
}

}  // namespace hkpos::testing
