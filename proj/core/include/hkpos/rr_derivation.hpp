#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hkpos/algebraic_real.hpp"
#include "hkpos/graded_series.hpp"
#include "hkpos/hk_family.hpp"
#include "hkpos/poly.hpp"

/// Recovers the K3^[3] pairing constants from Riemann-Roch and the Nieper
/// identity. L denotes a (1,1)-class and q = q(L).
namespace hkpos {

/// Todd class of a hyperkaehler sixfold through weight 6.
GradedSeries todd6();

/// Polynomial in q. In paired form the coefficient of q^k is a homogeneous
/// Chern expression of weight 2n - 2k that still has to be paired with L^(2k);
/// in scalar form every coefficient is a number.
class QPolynomial {
 public:
  /// Throws ConsistencyError when a coefficient has the wrong weight.
  static QPolynomial paired(int n, std::vector<GradedSeries> coefficients);
  static QPolynomial scalar(int n, const UniPoly& values);

  int n() const { return n_; }
  bool is_scalar() const { return scalar_; }
  /// Index k holds the coefficient of q^k, k = 0..n.
  const std::vector<GradedSeries>& coefficients() const { return coeffs_; }
  const GradedSeries& coefficient(int k) const;

  /// Pairs every coefficient against the table; a scalar polynomial needs no table.
  UniPoly evaluate(const FujikiTable& table) const;
  UniPoly values() const;

  /// "q^3: (1/720)*1" lines, highest power first.
  std::vector<std::string> lines() const;

  friend bool operator==(const QPolynomial&, const QPolynomial&) = default;

 private:
  QPolynomial(int n, bool scalar, std::vector<GradedSeries> coeffs)
      : n_(n), scalar_(scalar), coeffs_(std::move(coeffs)) {}
  int n_;
  bool scalar_;
  std::vector<GradedSeries> coeffs_;
};

/// integral of e^L * series on a 2n-fold: the q^k coefficient is
/// component(series, 2n - 2k) / (2k)!.
QPolynomial pair_with_exponential(const GradedSeries& series, int n);

/// integral of e^L Td(X).
QPolynomial rr_lhs();
/// chi(L) on K3^[3] as a polynomial in q: binom(chi + 2, 3) with chi = q/2 + 2.
QPolynomial rr_rhs();

/// sum_m coefficient_m * (m L^(2n - weight m) / q^...) = rhs, unknowns keyed by
/// Chern monomial.
struct LinearEquation {
  std::map<ChernMonomial, Rational> coefficients;
  Rational rhs;

  /// Scaled so the last unknown (c4 for weight 4) has coefficient -1.
  LinearEquation normalized() const;
  Rational lhs_at(const std::map<ChernMonomial, Rational>& values) const;
  /// "3 c2^2 - c4 = 3120".
  std::string to_string() const;

  friend bool operator==(const LinearEquation&, const LinearEquation&) = default;
};

struct LinearSystem {
  std::vector<LinearEquation> equations;

  /// Exact Gaussian elimination; throws DomainError unless the system is
  /// square and nonsingular.
  std::map<ChernMonomial, Rational> solve() const;
};

struct RRMatch {
  QPolynomial lhs;
  QPolynomial rhs;
  Rational top;        // L^6 = top q^3
  Rational c2;         // c2 L^4 = c2 q^2
  LinearEquation equation1;
  Rational todd_constant;  // weight-6 Todd component on the Chern numbers
};
/// Matches rr_lhs against rr_rhs power by power. Throws ConsistencyError when
/// the constant terms disagree.
RRMatch rr_match();

struct NieperMatch {
  GradedSeries sqrt_todd;
  QPolynomial lhs;
  UniPoly rhs;                 // (1 + lambda q)^3 R
  Rational lambda_coefficient;  // lambda(L) = lambda_coefficient * q
  Rational sqrt_todd_integral;  // R
  LinearEquation equation2;
};
/// integral sqrt(Td) e^L = (1 + lambda(L))^3 integral sqrt(Td), matched power by
/// power using the constants from rr_match. Throws ConsistencyError when the
/// top coefficient is not reproduced.
NieperMatch nieper_match();

struct DerivedConstants {
  RRMatch rr;
  NieperMatch nieper;
  /// 1, c2, c2^2, c4 -> 15, 108, A, B.
  std::map<ChernMonomial, Rational> constants;
  /// Full table with the Chern numbers added.
  HKFamily family;
  bool matches_preset;
  UniPoly threshold_poly;
  std::optional<AlgebraicReal> C;
  std::vector<std::string> notes;
};
DerivedConstants derive_constants();

}  // namespace hkpos
