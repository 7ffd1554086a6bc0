#pragma once

#include <optional>

#include "hkpos/algebraic_real.hpp"
#include "hkpos/hk_family.hpp"
#include "hkpos/poly.hpp"

namespace hkpos {

/// Top self-intersection (zeta + pi^* w)^(4n-1) on P(Omega_X) as a polynomial
/// in t = lambda^2 q(w), together with its largest real root C.
struct ThresholdResult {
  UniPoly poly;
  std::optional<AlgebraicReal> C;
};

/// p_X(t) = sum_i binom(4n-1, 2i) d_{2i} t^i.
UniPoly build_threshold_poly(const HKFamily& family);
ThresholdResult compute_threshold(const HKFamily& family);
std::optional<AlgebraicReal> constant_C(const HKFamily& family);

/// zeta + pi^* w is pseudoeffective whenever q(w) >= C. True when no real
/// root exists. Throws DomainError for negative q.
bool is_pseff_sufficient(const HKFamily& family, const Rational& q);
bool is_pseff_sufficient(const ThresholdResult& threshold, const Rational& q);

/// Positivity threshold: the infimum lambda_0 with p_X(lambda^2 q) > 0 for all
/// lambda > lambda_0, i.e. sqrt(C / q) when C > 0 and 0 otherwise. Requires q > 0.
///
/// Only this threshold is computable from pairing data. The pseudoeffective and
/// nef thresholds satisfy gamma_e <= gamma_p <= gamma_n but are not exposed.
AlgebraicReal gamma_p(const HKFamily& family, const Rational& q);
AlgebraicReal gamma_p(const ThresholdResult& threshold, const Rational& q);

/// a*zeta + pi^* delta lies in the pseudoeffective cone of P(Omega_X) iff
/// a >= 0, delta is nef and q(delta) >= a^2 C (very general X).
bool pseff_cone_member(const HKFamily& family, const Rational& a, const Rational& q_delta, bool delta_is_nef);
bool pseff_cone_member(const ThresholdResult& threshold, const Rational& a, const Rational& q_delta, bool delta_is_nef);

}  // namespace hkpos
