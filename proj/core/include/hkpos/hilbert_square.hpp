#pragma once

#include <compare>
#include <map>
#include <string>
#include <vector>

#include "hkpos/algebraic_real.hpp"
#include "hkpos/poly.hpp"
#include "hkpos/rational.hpp"

/// Intersection calculus on X = S^[2] and on P(Omega_X), with every number a
/// polynomial in a = alpha_S^2 (= q(alpha_X)).
namespace hkpos::square {

/// alpha^i delta^j Sbar^k l^m pt^p. Weights: alpha, delta 1; Sbar 2; l 3; pt 4.
struct SquareMonomial {
  int alpha = 0;
  int delta = 0;
  int sbar = 0;
  int l = 0;
  int pt = 0;

  int weight() const { return alpha + delta + 2 * sbar + 3 * l + 4 * pt; }
  std::string to_string() const;
  friend SquareMonomial operator*(const SquareMonomial& a, const SquareMonomial& b);
  friend auto operator<=>(const SquareMonomial&, const SquareMonomial&) = default;
};

/// Cohomology class on X with coefficients in Q[a]. Products of weight above
/// four vanish and are dropped.
class SquareClass {
 public:
  SquareClass() = default;
  static SquareClass constant(const UniPoly& c);
  static SquareClass constant(const Rational& c) { return constant(UniPoly::constant(c)); }
  static SquareClass alpha();
  static SquareClass delta();
  static SquareClass sbar();
  /// Class of a fibre of E_X -> S; equal to Sbar * delta.
  static SquareClass l();
  static SquareClass pt();
  /// E_X = 2 delta.
  static SquareClass exceptional() { return delta() * Rational(2); }

  const std::map<SquareMonomial, UniPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  /// Weight of a nonzero homogeneous class; throws DomainError otherwise.
  int weight() const;

  SquareClass& operator+=(const SquareClass& rhs);
  SquareClass& operator-=(const SquareClass& rhs);
  SquareClass& operator*=(const SquareClass& rhs);
  SquareClass& operator*=(const UniPoly& rhs);
  friend SquareClass operator+(SquareClass a, const SquareClass& b) { return a += b; }
  friend SquareClass operator-(SquareClass a, const SquareClass& b) { return a -= b; }
  friend SquareClass operator*(SquareClass a, const SquareClass& b) { return a *= b; }
  friend SquareClass operator*(SquareClass a, const UniPoly& b) { return a *= b; }
  friend SquareClass operator*(SquareClass a, const Rational& b) { return a *= UniPoly::constant(b); }
  friend SquareClass operator*(const Rational& b, SquareClass a) { return a *= UniPoly::constant(b); }
  friend bool operator==(const SquareClass&, const SquareClass&) = default;

  std::string to_string() const;

 private:
  void add(const SquareMonomial& m, const UniPoly& c);
  std::map<SquareMonomial, UniPoly> terms_;
};

SquareClass pow(const SquareClass& base, unsigned exponent);

/// Degree of a weight-4 class. The zero class has degree 0; any other
/// weight throws DomainError.
UniPoly square_intersect(const SquareClass& c);

struct TableRow {
  std::string label;
  UniPoly value;
  std::string derivation;
};
/// The stored weight-4 intersection numbers on X (everything else is derived).
std::vector<TableRow> stored_table();

/// Class on P(Omega_X) written as sum_j zeta^j * pi^* beta_j with beta_j of
/// weight degree - j. Stored by zeta exponent.
class PBClass {
 public:
  /// Zero class of the given degree. Components are kept for every zeta
  /// exponent 0..degree, so equal classes compare equal.
  explicit PBClass(int degree = 0);
  static PBClass zeta();
  /// pi^* beta for a homogeneous (or zero) beta.
  static PBClass pullback(const SquareClass& beta);

  int degree() const { return degree_; }
  /// beta_j, the coefficient of zeta^j (zero when absent).
  SquareClass component(int zeta_exponent) const;
  const std::vector<SquareClass>& components() const { return components_; }

  PBClass& operator+=(const PBClass& rhs);
  PBClass& operator-=(const PBClass& rhs);
  friend PBClass operator+(PBClass a, const PBClass& b) { return a += b; }
  friend PBClass operator-(PBClass a, const PBClass& b) { return a -= b; }
  friend PBClass operator*(const PBClass& a, const PBClass& b);
  friend PBClass operator*(PBClass a, const Rational& s);
  friend bool operator==(const PBClass&, const PBClass&) = default;

  std::string to_string() const;

 private:
  int degree_;
  std::vector<SquareClass> components_;
};

PBClass pow(const PBClass& base, unsigned exponent);

/// Chern and Segre data of X used by the pushforward rules.
struct ChernTable {
  SquareClass s2;     // -24 Sbar + 3 delta^2 = -c2(X)
  Rational s2_squared;  // c2(X)^2
  Rational c4_double_cover;  // c4(eta^* Omega_X) on the blow-up of S x S
  Rational c4;        // c4(X)
  Rational s4;        // s4(X) = c2^2 - c4
};

/// Builds the table and checks it against the golden values (s2^2 = 828,
/// s2 delta^2 = 60, s2 alpha^2 = -30a, s4 = 504, c4 = 324). Throws
/// ConsistencyError on a mismatch.
const ChernTable& square_chern_table();

/// pi_* zeta^(3 + i) = s_i(X); odd Segre classes vanish.
SquareClass segre_class(int i);

/// Top intersection on P(Omega_X) (dimension 7). Throws DomainError unless the
/// class has degree 7.
UniPoly pb_top_intersect(const PBClass& p);

/// Every zeta-row of the top-intersection table with how it was obtained.
std::vector<TableRow> derived_rows();

/// [Z] = 2 zeta^2 + 2 zeta pi^*delta + pi^*(24 Sbar - 6 delta^2).
PBClass z_class();
/// (zeta + pi^*(alpha - delta))^5 . [Z] as a polynomial in a.
UniPoly z_pairing();
/// Largest real root of z_pairing(): the value of a above which the pairing is
/// nonnegative.
AlgebraicReal z_pairing_threshold();
std::vector<std::string> z_pairing_notes();

template <typename T>
struct KahlerValues {
  T top;         // (alpha - delta)^4
  T divisor;     // (alpha - delta)^3 . E_X
  T surface;     // (alpha - delta)^2 . Sbar
  T curve;       // (alpha - delta) . l
};

KahlerValues<UniPoly> kahler_polys();

struct KahlerCriterion {
  KahlerValues<Rational> values;
  /// All four values positive; for a very general S this is alpha_X - delta
  /// being Kaehler, equivalently a > 2.
  bool all_positive;
};
KahlerCriterion kahler_criterion(const Rational& a);

}  // namespace hkpos::square
