#pragma once

#include <algorithm>
#include <set>
#include <string>
#include <vector>

#include "hkpos/threshold.hpp"
#include "support.hpp"

// Randomised checks shared by the unit tests and the acceptance runner. Each
// returns a list of failure descriptions (empty on success).
namespace hkpos::testing {

inline std::vector<std::string> series_roundtrips(int cases) {
  std::vector<std::string> failures;
  for (int i = 0; i < cases; ++i) {
    const int n = static_cast<int>(2 * uniform(1, 4));
    const GradedSeries a = random_unit_series(n);
    if (a * series_inverse(a) != GradedSeries::one(n)) failures.push_back("inverse of " + a.to_string());
    const GradedSeries r = series_sqrt(a);
    if (r * r != a) failures.push_back("sqrt of " + a.to_string());
  }
  return failures;
}

inline std::vector<std::string> rational_root_recovery(int cases) {
  std::vector<std::string> failures;
  for (int i = 0; i < cases; ++i) {
    const int k = static_cast<int>(uniform(1, 6));
    std::set<Rational> roots;
    UniPoly p({Rational(uniform(1, 4), uniform(1, 3)) * Rational(uniform(0, 1) == 0 ? -1 : 1)});
    for (int j = 0; j < k; ++j) {
      const Rational r = random_rational(30, 7);
      roots.insert(r);
      p = p * UniPoly({-r, Rational(1)});
    }
    const auto found = isolate_real_roots(p);
    std::vector<Rational> got;
    for (const auto& x : found) {
      if (!x.is_rational()) {
        failures.push_back("irrational root reported for " + p.to_string());
        break;
      }
      got.push_back(*x.rational_value());
    }
    if (got != std::vector<Rational>(roots.begin(), roots.end())) failures.push_back("roots of " + p.to_string());
  }
  return failures;
}

/// gamma_p^2 q = C, checked exactly: for rational C through a common factor of
/// the defining polynomial with q x^2 - C, otherwise by nesting q*[lo^2, hi^2]
/// inside the isolating interval of C.
inline std::vector<std::string> gamma_identity(int cases) {
  std::vector<std::string> failures;
  const std::vector<HKFamily> families = {preset(Preset::K3), preset(Preset::K3_2), preset(Preset::K3_3)};
  std::vector<ThresholdResult> thresholds;
  for (const auto& f : families) thresholds.push_back(compute_threshold(f));
  for (int i = 0; i < cases; ++i) {
    const auto& t = thresholds[static_cast<std::size_t>(i) % thresholds.size()];
    const Rational q(uniform(1, 200), uniform(1, 30));
    const AlgebraicReal g = gamma_p(t, q);
    const AlgebraicReal& C = *t.C;
    if (!divmod(t.poly.compose(UniPoly::monomial(q, 2)), g.defining()).second.is_zero()) {
      failures.push_back("gamma_p is not a root of p_X(q x^2) for q = " + q.to_string());
      continue;
    }
    bool ok = false;
    if (auto c = C.rational_value()) {
      const UniPoly common = gcd(g.defining(), UniPoly({-*c, Rational(0), q}));
      if (g.is_rational()) {
        ok = q * *g.rational_value() * *g.rational_value() == *c;
      } else {
        ok = common.degree() >= 1 && SturmSequence(common).count(g.lower(), g.upper()) == 1;
      }
    } else {
      AlgebraicReal x = g;
      for (int step = 0; step < 200 && !ok; ++step) {
        const Rational lo = q * x.lower() * x.lower();
        const Rational hi = q * x.upper() * x.upper();
        ok = x.lower().sign() > 0 && C.lower() <= lo && hi <= C.upper();
        x = x.refine();
      }
    }
    if (!ok) failures.push_back("gamma_p identity for q = " + q.to_string());
  }
  return failures;
}

inline std::vector<std::string> cone_homogeneity(int cases) {
  std::vector<std::string> failures;
  const std::vector<ThresholdResult> thresholds = {compute_threshold(preset(Preset::K3)), compute_threshold(preset(Preset::K3_2)),
                                                   compute_threshold(preset(Preset::K3_3))};
  for (int i = 0; i < cases; ++i) {
    const auto& t = thresholds[static_cast<std::size_t>(i) % thresholds.size()];
    const Rational a = random_rational(10, 4);
    const Rational qd = random_rational(80, 5);
    const Rational s(uniform(1, 50), uniform(1, 50));
    const bool nef = uniform(0, 4) != 0;
    if (pseff_cone_member(t, a, qd, nef) != pseff_cone_member(t, s * a, s * s * qd, nef)) {
      failures.push_back("scaling a = " + a.to_string() + ", q = " + qd.to_string() + " by " + s.to_string());
    }
  }
  return failures;
}

}  // namespace hkpos::testing
