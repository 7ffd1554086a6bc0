#include "hkpos/threshold.hpp"

#include "hkpos/error.hpp"

namespace hkpos {

UniPoly build_threshold_poly(const HKFamily& family) {
  const int n = family.table.n();
  const auto d = segre_pairings(family);
  std::vector<Rational> coeffs;
  coeffs.reserve(d.size());
  for (int i = 0; i <= n; ++i) {
    coeffs.push_back(binomial(static_cast<unsigned>(4 * n - 1), static_cast<unsigned>(2 * i)) * d[static_cast<std::size_t>(i)]);
  }
  return UniPoly(std::move(coeffs));
}

ThresholdResult compute_threshold(const HKFamily& family) {
  UniPoly poly = build_threshold_poly(family);
  auto C = largest_real_root(poly);
  return {std::move(poly), std::move(C)};
}

std::optional<AlgebraicReal> constant_C(const HKFamily& family) { return compute_threshold(family).C; }

bool is_pseff_sufficient(const ThresholdResult& threshold, const Rational& q) {
  if (q.sign() < 0) throw DomainError("q(w) must be nonnegative for a nef and big class, got " + q.to_string());
  if (!threshold.C) return true;
  return threshold.C->compare(q) <= 0;
}

bool is_pseff_sufficient(const HKFamily& family, const Rational& q) {
  return is_pseff_sufficient(compute_threshold(family), q);
}

AlgebraicReal gamma_p(const ThresholdResult& threshold, const Rational& q) {
  if (q.sign() <= 0) throw DomainError("gamma_p needs q(w) > 0, got " + q.to_string());
  if (!threshold.C || threshold.C->sign() <= 0) return AlgebraicReal::from_rational(Rational(0));
  // lambda -> p_X(q lambda^2); its largest root is sqrt(C / q).
  const UniPoly scaled = threshold.poly.compose(UniPoly::monomial(q, 2));
  auto root = largest_real_root(scaled);
  if (!root || root->sign() <= 0) throw ConsistencyError("rescaled threshold polynomial lost its positive root");
  return *root;
}

AlgebraicReal gamma_p(const HKFamily& family, const Rational& q) { return gamma_p(compute_threshold(family), q); }

bool pseff_cone_member(const ThresholdResult& threshold, const Rational& a, const Rational& q_delta, bool delta_is_nef) {
  if (a.sign() < 0 || !delta_is_nef) return false;
  if (a.is_zero()) return q_delta.sign() >= 0;
  if (!threshold.C) return true;
  return threshold.C->compare(q_delta / (a * a)) <= 0;
}

bool pseff_cone_member(const HKFamily& family, const Rational& a, const Rational& q_delta, bool delta_is_nef) {
  return pseff_cone_member(compute_threshold(family), a, q_delta, delta_is_nef);
}

}  // namespace hkpos
