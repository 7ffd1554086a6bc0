#include "hkpos/rr_derivation.hpp"

#include <algorithm>

#include "hkpos/error.hpp"
#include "hkpos/threshold.hpp"

namespace hkpos {

namespace {

const ChernMonomial kOne = ChernMonomial::one();
const ChernMonomial kC2 = ChernMonomial::symbol(2);
const ChernMonomial kC2Sq{{2, 2}};
const ChernMonomial kC4 = ChernMonomial::symbol(4);

std::map<ChernMonomial, Rational> chern_numbers() {
  const auto c = hilbert_cube_chern_numbers();
  return {{ChernMonomial{{2, 3}}, c.c2_cubed}, {ChernMonomial{{2, 1}, {4, 1}}, c.c2_c4}, {ChernMonomial::symbol(6), c.c6}};
}

std::string signed_term(const Rational& c, const std::string& name, bool first) {
  std::string out;
  Rational mag = c;
  if (c.sign() < 0) {
    out = first ? "-" : " - ";
    mag = -c;
  } else if (!first) {
    out = " + ";
  }
  if (mag != Rational(1)) out += (mag.is_integer() ? mag.to_string() : "(" + mag.to_string() + ")") + " ";
  return out + name;
}

// Splits a homogeneous expression into a known part and unknown coefficients.
struct Split {
  Rational known;
  std::map<ChernMonomial, Rational> unknown;
};

Split split(const GradedSeries& e, const std::map<ChernMonomial, Rational>& known) {
  Split s;
  for (const auto& [m, c] : e.terms()) {
    auto it = known.find(m);
    if (it != known.end()) {
      s.known += c * it->second;
    } else {
      s.unknown.emplace(m, c);
    }
  }
  return s;
}

}  // namespace

GradedSeries todd6() {
  static const GradedSeries td(6, {
                                      {kOne, Rational(1)},
                                      {kC2, Rational(1, 12)},
                                      {kC2Sq, Rational(1, 240)},
                                      {kC4, Rational(-1, 720)},
                                      {ChernMonomial{{2, 3}}, Rational(1, 6048)},
                                      {ChernMonomial{{2, 1}, {4, 1}}, Rational(-1, 6720)},
                                      {ChernMonomial::symbol(6), Rational(1, 30240)},
                                  });
  return td;
}

QPolynomial QPolynomial::paired(int n, std::vector<GradedSeries> coefficients) {
  if (n < 1 || coefficients.size() != static_cast<std::size_t>(n + 1)) {
    throw DomainError("a q-polynomial for n = " + std::to_string(n) + " needs n + 1 coefficients");
  }
  for (int k = 0; k <= n; ++k) {
    for (const auto& [m, c] : coefficients[static_cast<std::size_t>(k)].terms()) {
      if (m.weight() != 2 * n - 2 * k) {
        throw ConsistencyError("coefficient of q^" + std::to_string(k) + " contains " + m.to_string() + " of weight " +
                               std::to_string(m.weight()) + ", expected " + std::to_string(2 * n - 2 * k));
      }
    }
  }
  return QPolynomial(n, false, std::move(coefficients));
}

QPolynomial QPolynomial::scalar(int n, const UniPoly& values) {
  if (n < 1 || values.degree() > n) throw DomainError("scalar q-polynomial of degree above n");
  std::vector<GradedSeries> coeffs;
  for (int k = 0; k <= n; ++k) {
    GradedSeries s(0);
    s.add_term(kOne, values.coeff(static_cast<std::size_t>(k)));
    coeffs.push_back(std::move(s));
  }
  return QPolynomial(n, true, std::move(coeffs));
}

const GradedSeries& QPolynomial::coefficient(int k) const {
  if (k < 0 || k > n_) throw DomainError("no coefficient of q^" + std::to_string(k));
  return coeffs_[static_cast<std::size_t>(k)];
}

UniPoly QPolynomial::values() const {
  if (!scalar_) throw DomainError("a paired q-polynomial needs a Fujiki table");
  std::vector<Rational> v;
  for (const auto& c : coeffs_) v.push_back(c.constant_term());
  return UniPoly(std::move(v));
}

UniPoly QPolynomial::evaluate(const FujikiTable& table) const {
  if (scalar_) return values();
  if (table.n() != n_) throw DomainError("table dimension does not match the q-polynomial");
  std::vector<Rational> v;
  for (const auto& c : coeffs_) v.push_back(table.pair(c));
  return UniPoly(std::move(v));
}

std::vector<std::string> QPolynomial::lines() const {
  std::vector<std::string> out;
  for (int k = n_; k >= 0; --k) {
    const auto& c = coeffs_[static_cast<std::size_t>(k)];
    std::string head = k == 0 ? "q^0" : "q^" + std::to_string(k);
    if (scalar_) {
      out.push_back(head + ": " + c.constant_term().to_string());
    } else {
      out.push_back(head + ": " + c.to_string() + (k > 0 ? "  [paired with L^" + std::to_string(2 * k) + "]" : ""));
    }
  }
  return out;
}

QPolynomial pair_with_exponential(const GradedSeries& series, int n) {
  if (series.truncation() < 2 * n) throw DomainError("series is truncated below the dimension");
  std::vector<GradedSeries> coeffs;
  for (int k = 0; k <= n; ++k) {
    coeffs.push_back(series.component(2 * n - 2 * k).truncate(2 * n) * (Rational(1) / factorial(static_cast<unsigned>(2 * k))));
  }
  return QPolynomial::paired(n, std::move(coeffs));
}

QPolynomial rr_lhs() { return pair_with_exponential(todd6(), 3); }

QPolynomial rr_rhs() {
  const UniPoly chi({Rational(2), Rational(1, 2)});
  const UniPoly e = chi * (chi + UniPoly({1})) * (chi + UniPoly({2})) * Rational(1, 6);
  return QPolynomial::scalar(3, e);
}

LinearEquation LinearEquation::normalized() const {
  if (coefficients.empty()) return *this;
  const Rational scale = Rational(-1) / coefficients.rbegin()->second;
  LinearEquation out;
  for (const auto& [m, c] : coefficients) out.coefficients.emplace(m, c * scale);
  out.rhs = rhs * scale;
  return out;
}

Rational LinearEquation::lhs_at(const std::map<ChernMonomial, Rational>& values) const {
  Rational total;
  for (const auto& [m, c] : coefficients) {
    auto it = values.find(m);
    if (it == values.end()) throw MissingPairing(m.to_string());
    total += c * it->second;
  }
  return total;
}

std::string LinearEquation::to_string() const {
  std::string out;
  bool first = true;
  for (const auto& [m, c] : coefficients) {
    out += signed_term(c, m.to_string(), first);
    first = false;
  }
  return (out.empty() ? "0" : out) + " = " + rhs.to_string();
}

std::map<ChernMonomial, Rational> LinearSystem::solve() const {
  std::vector<ChernMonomial> unknowns;
  for (const auto& eq : equations) {
    for (const auto& [m, c] : eq.coefficients) {
      if (std::find(unknowns.begin(), unknowns.end(), m) == unknowns.end()) unknowns.push_back(m);
    }
  }
  std::sort(unknowns.begin(), unknowns.end());
  const std::size_t n = unknowns.size();
  if (equations.size() != n) throw DomainError("linear system is not square");

  std::vector<std::vector<Rational>> rows(n, std::vector<Rational>(n + 1));
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      auto it = equations[i].coefficients.find(unknowns[j]);
      if (it != equations[i].coefficients.end()) rows[i][j] = it->second;
    }
    rows[i][n] = equations[i].rhs;
  }
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    while (pivot < n && rows[pivot][col].is_zero()) ++pivot;
    if (pivot == n) throw DomainError("singular linear system");
    std::swap(rows[col], rows[pivot]);
    for (std::size_t i = 0; i < n; ++i) {
      if (i == col || rows[i][col].is_zero()) continue;
      const Rational f = rows[i][col] / rows[col][col];
      for (std::size_t j = col; j <= n; ++j) rows[i][j] -= f * rows[col][j];
    }
  }
  std::map<ChernMonomial, Rational> out;
  for (std::size_t i = 0; i < n; ++i) out.emplace(unknowns[i], rows[i][n] / rows[i][i]);
  return out;
}

RRMatch rr_match() {
  const QPolynomial lhs = rr_lhs();
  const QPolynomial rhs = rr_rhs();
  const UniPoly r = rhs.values();
  std::map<ChernMonomial, Rational> known = chern_numbers();

  std::optional<LinearEquation> equation;
  for (int k = lhs.n(); k >= 0; --k) {
    const Split s = split(lhs.coefficient(k), known);
    const Rational target = r.coeff(static_cast<std::size_t>(k)) - s.known;
    if (s.unknown.empty()) {
      if (!target.is_zero()) {
        throw ConsistencyError("Riemann-Roch match fails at q^" + std::to_string(k) + " by " + target.to_string());
      }
    } else if (s.unknown.size() == 1) {
      const auto& [m, c] = *s.unknown.begin();
      known.emplace(m, target / c);
    } else {
      if (equation) throw ConsistencyError("more than one underdetermined power of q");
      equation = LinearEquation{s.unknown, target}.normalized();
    }
  }
  if (!equation) throw ConsistencyError("Riemann-Roch match produced no linear equation");

  const Rational todd_constant = split(lhs.coefficient(0), chern_numbers()).known;
  return {lhs, rhs, known.at(kOne), known.at(kC2), *equation, todd_constant};
}

NieperMatch nieper_match() {
  const RRMatch rr = rr_match();
  const GradedSeries sq = series_sqrt(todd6());
  const QPolynomial lhs = pair_with_exponential(sq, 3);
  const int n = lhs.n();

  std::map<ChernMonomial, Rational> known = chern_numbers();
  known.emplace(kOne, rr.top);
  known.emplace(kC2, rr.c2);

  const auto value = [&](int k) {
    const Split s = split(lhs.coefficient(k), known);
    if (!s.unknown.empty()) throw ConsistencyError("Nieper match: unknown pairing at q^" + std::to_string(k));
    return s.known;
  };
  const Rational R = value(0);
  const Rational vn = value(n);
  const Rational vn1 = value(n - 1);
  const auto un = static_cast<unsigned>(n);
  // v_k = binom(n, k) lambda^k R
  const Rational lambda = vn * binomial(un, un - 1) / (vn1 * binomial(un, un));
  if (pow(lambda, un) * R != vn) {
    throw ConsistencyError("Nieper match: lambda^" + std::to_string(n) + " R = " + (pow(lambda, un) * R).to_string() +
                           " but the top coefficient is " + vn.to_string());
  }

  const UniPoly one_plus = UniPoly({Rational(1), lambda});
  const UniPoly rhs = pow(one_plus, un) * R;

  const Split s = split(lhs.coefficient(1), known);
  if (s.unknown.size() < 2) throw ConsistencyError("Nieper match: q^1 coefficient has no free pairings");
  LinearEquation eq = LinearEquation{s.unknown, rhs.coeff(1) - s.known}.normalized();
  return {sq, lhs, rhs, lambda, R, eq};
}

DerivedConstants derive_constants() {
  DerivedConstants out{rr_match(), nieper_match(), {}, preset(Preset::K3_3), false, {}, std::nullopt, {}};

  const auto solved = LinearSystem{{out.rr.equation1, out.nieper.equation2}}.solve();
  out.constants = {{kOne, out.rr.top}, {kC2, out.rr.c2}};
  for (const auto& [m, v] : solved) out.constants.emplace(m, v);

  auto table = out.constants;
  for (const auto& [m, v] : chern_numbers()) table.emplace(m, v);
  out.family = HKFamily{"K3_3 (derived)", FujikiTable(3, table), {}};
  for (const auto& [m, v] : out.constants) out.family.provenance.emplace(m, "derived by derive-k3-3");

  const HKFamily published = preset(Preset::K3_3);
  out.matches_preset = true;
  for (const auto& [m, v] : out.constants) {
    if (published.table.lookup(m) != v) out.matches_preset = false;
  }

  const ThresholdResult derived_threshold = compute_threshold(out.family);
  out.threshold_poly = derived_threshold.poly;
  out.C = derived_threshold.C;

  const GradedSeries& sq = out.nieper.sqrt_todd;
  const Rational sqrt_c2sq = sq.coefficient(kC2Sq);
  auto& notes = out.notes;
  notes.push_back("chi_S(L) = q/2 + 2 by Riemann-Roch on the K3 surface; the published chi_S(L) = L^2 + 2 does not "
                  "reproduce the published expansion q^3/48 + 3q^2/8 + 13q/6 + 4");
  notes.push_back("chi(L) on K3^[3] is binom(chi_S + 2, 3) = chi_S(chi_S + 1)(chi_S + 2)/6; the published "
                  "binom(chi_S + 2, 2) is not the cubic it is equated with");
  notes.push_back("L^6 = 15 q^3 (the power of q is fixed by homogeneity)");
  notes.push_back("sqrt(Td) has c2^2 coefficient " + sqrt_c2sq.to_string() + "; the published value is 7/5650");
  notes.push_back("the q^1 Nieper match reads " + out.nieper.equation2.to_string() +
                  " (L^2 enters e^L with 1/2!); the published right-hand side is 810");
  if (!out.matches_preset) {
    std::string got;
    for (const auto& [m, v] : solved) got += (got.empty() ? "" : ", ") + m.to_string() + " L^2 = " + v.to_string() + " q";
    const ThresholdResult pub = compute_threshold(published);
    notes.push_back("solved constants " + got + " differ from the published 1848 and 2424, which solve " +
                    out.rr.equation1.to_string() + " together with (7/4) c2^2 - c4 = 810");
    notes.push_back("with the derived constants p_X(t) = " + out.threshold_poly.to_string() +
                    (out.C ? " with largest root ~" + out.C->decimal() : std::string(" with no real root")) +
                    "; the published constants give " + pub.poly.to_string() +
                    (pub.C ? " with largest root ~" + pub.C->decimal() : std::string()));
  }
  return out;
}

}  // namespace hkpos
