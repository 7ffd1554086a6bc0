#include "hkpos/hilbert_square.hpp"

#include <array>
#include <sstream>

#include "hkpos/error.hpp"

namespace hkpos::square {

namespace {

void append_power(std::string& out, const char* name, int e) {
  if (e == 0) return;
  if (!out.empty()) out += '*';
  out += name;
  if (e > 1) out += '^' + std::to_string(e);
}

const UniPoly& a_var() {
  static const UniPoly a = UniPoly::x();
  return a;
}

// Weight-4 monomials in alpha, delta, Sbar, pt (l already rewritten) and their degrees.
struct Entry {
  SquareMonomial m;
  UniPoly value;
};

const std::vector<Entry>& base_entries() {
  static const std::vector<Entry> entries = {
      {{.alpha = 4}, UniPoly({0, 0, 3})},
      {{.alpha = 3, .delta = 1}, UniPoly()},
      {{.alpha = 2, .delta = 2}, UniPoly({0, -2})},
      {{.alpha = 1, .delta = 3}, UniPoly()},
      {{.delta = 4}, UniPoly({12})},
      {{.alpha = 2, .sbar = 1}, a_var()},
      {{.alpha = 1, .delta = 1, .sbar = 1}, UniPoly()},
      {{.delta = 2, .sbar = 1}, UniPoly({-1})},
      {{.sbar = 2}, UniPoly({1})},
      {{.pt = 1}, UniPoly({1})},
  };
  return entries;
}

UniPoly degree_of(SquareMonomial m) {
  m.delta += m.l;
  m.sbar += m.l;
  m.l = 0;
  for (const auto& e : base_entries()) {
    if (e.m == m) return e.value;
  }
  throw ConsistencyError("no intersection number for " + m.to_string());
}

}  // namespace

std::string SquareMonomial::to_string() const {
  std::string out;
  append_power(out, "alpha", alpha);
  append_power(out, "delta", delta);
  append_power(out, "Sbar", sbar);
  append_power(out, "l", l);
  append_power(out, "pt", pt);
  return out.empty() ? "1" : out;
}

SquareMonomial operator*(const SquareMonomial& a, const SquareMonomial& b) {
  return {a.alpha + b.alpha, a.delta + b.delta, a.sbar + b.sbar, a.l + b.l, a.pt + b.pt};
}

SquareClass SquareClass::constant(const UniPoly& c) {
  SquareClass out;
  out.add({}, c);
  return out;
}

SquareClass SquareClass::alpha() {
  SquareClass c;
  c.add({.alpha = 1}, UniPoly({1}));
  return c;
}

SquareClass SquareClass::delta() {
  SquareClass c;
  c.add({.delta = 1}, UniPoly({1}));
  return c;
}

SquareClass SquareClass::sbar() {
  SquareClass c;
  c.add({.sbar = 1}, UniPoly({1}));
  return c;
}

SquareClass SquareClass::l() {
  SquareClass c;
  c.add({.l = 1}, UniPoly({1}));
  return c;
}

SquareClass SquareClass::pt() {
  SquareClass c;
  c.add({.pt = 1}, UniPoly({1}));
  return c;
}

void SquareClass::add(const SquareMonomial& m, const UniPoly& c) {
  if (m.weight() > 4 || c.is_zero()) return;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
}

int SquareClass::weight() const {
  if (terms_.empty()) throw DomainError("the zero class has no weight");
  const int w = terms_.begin()->first.weight();
  for (const auto& [m, c] : terms_) {
    if (m.weight() != w) throw DomainError("class " + to_string() + " is not homogeneous");
  }
  return w;
}

SquareClass& SquareClass::operator+=(const SquareClass& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, c);
  return *this;
}

SquareClass& SquareClass::operator-=(const SquareClass& rhs) {
  for (const auto& [m, c] : rhs.terms_) add(m, -c);
  return *this;
}

SquareClass& SquareClass::operator*=(const SquareClass& rhs) {
  SquareClass out;
  for (const auto& [ma, ca] : terms_) {
    for (const auto& [mb, cb] : rhs.terms_) out.add(ma * mb, ca * cb);
  }
  return *this = std::move(out);
}

SquareClass& SquareClass::operator*=(const UniPoly& rhs) {
  SquareClass out;
  for (const auto& [m, c] : terms_) out.add(m, c * rhs);
  return *this = std::move(out);
}

std::string SquareClass::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [m, c] : terms_) {
    const bool one = m == SquareMonomial{};
    std::string factor;
    bool negative = false;
    if (c.is_constant()) {
      Rational v = c.coeff(0);
      negative = v.sign() < 0;
      if (negative) v = -v;
      if (one || v != Rational(1)) factor = v.to_string();
    } else {
      factor = "(" + c.to_string("a") + ")";
    }
    if (out.empty()) {
      out = negative ? "-" : "";
    } else {
      out += negative ? " - " : " + ";
    }
    out += factor;
    if (!one) out += (factor.empty() ? "" : "*") + m.to_string();
  }
  return out;
}

SquareClass pow(const SquareClass& base, unsigned exponent) {
  SquareClass out = SquareClass::constant(Rational(1));
  for (unsigned i = 0; i < exponent; ++i) out *= base;
  return out;
}

UniPoly square_intersect(const SquareClass& c) {
  UniPoly total;
  for (const auto& [m, coeff] : c.terms()) {
    if (m.weight() != 4) {
      throw DomainError("square_intersect needs a class of weight 4, got " + m.to_string() + " of weight " +
                        std::to_string(m.weight()));
    }
    total += coeff * degree_of(m);
  }
  return total;
}

std::vector<TableRow> stored_table() {
  std::vector<TableRow> rows;
  for (const auto& e : base_entries()) rows.push_back({e.m.to_string(), e.value, "stored"});
  rows.push_back({"l*alpha", square_intersect(SquareClass::l() * SquareClass::alpha()), "l = Sbar*delta"});
  rows.push_back({"l*delta", square_intersect(SquareClass::l() * SquareClass::delta()), "l = Sbar*delta"});
  return rows;
}

PBClass::PBClass(int degree) : degree_(degree), components_(static_cast<std::size_t>(degree < 0 ? 0 : degree + 1)) {
  if (degree < 0) throw DomainError("negative degree");
}

PBClass PBClass::zeta() {
  PBClass z(1);
  z.components_[1] = SquareClass::constant(Rational(1));
  return z;
}

PBClass PBClass::pullback(const SquareClass& beta) {
  const int w = beta.is_zero() ? 0 : beta.weight();
  PBClass p(w);
  p.components_[0] = beta;
  return p;
}

SquareClass PBClass::component(int zeta_exponent) const {
  if (zeta_exponent < 0 || zeta_exponent > degree_) return {};
  return components_[static_cast<std::size_t>(zeta_exponent)];
}

PBClass& PBClass::operator+=(const PBClass& rhs) {
  if (degree_ != rhs.degree_) {
    throw DomainError("cannot add classes of degree " + std::to_string(degree_) + " and " + std::to_string(rhs.degree_));
  }
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] += rhs.components_[i];
  return *this;
}

PBClass& PBClass::operator-=(const PBClass& rhs) {
  if (degree_ != rhs.degree_) {
    throw DomainError("cannot subtract classes of degree " + std::to_string(degree_) + " and " +
                      std::to_string(rhs.degree_));
  }
  for (std::size_t i = 0; i < components_.size(); ++i) components_[i] -= rhs.components_[i];
  return *this;
}

PBClass operator*(const PBClass& a, const PBClass& b) {
  PBClass out(a.degree_ + b.degree_);
  for (std::size_t i = 0; i < a.components_.size(); ++i) {
    if (a.components_[i].is_zero()) continue;
    for (std::size_t j = 0; j < b.components_.size(); ++j) {
      out.components_[i + j] += a.components_[i] * b.components_[j];
    }
  }
  return out;
}

PBClass operator*(PBClass a, const Rational& s) {
  for (auto& c : a.components_) c *= UniPoly::constant(s);
  return a;
}

std::string PBClass::to_string() const {
  std::string out;
  for (int j = degree_; j >= 0; --j) {
    const auto& c = components_[static_cast<std::size_t>(j)];
    if (c.is_zero()) continue;
    if (!out.empty()) out += " + ";
    std::string z = j == 0 ? "" : (j == 1 ? "zeta" : "zeta^" + std::to_string(j));
    if (c == SquareClass::constant(Rational(1)) && !z.empty()) {
      out += z;
    } else {
      out += (z.empty() ? "" : z + "*") + "(" + c.to_string() + ")";
    }
  }
  return out.empty() ? "0" : out;
}

PBClass pow(const PBClass& base, unsigned exponent) {
  PBClass out = PBClass::pullback(SquareClass::constant(Rational(1)));
  for (unsigned i = 0; i < exponent; ++i) out = out * base;
  return out;
}

const ChernTable& square_chern_table() {
  static const ChernTable table = [] {
    ChernTable t;
    t.s2 = SquareClass::sbar() * Rational(-24) + pow(SquareClass::delta(), 2) * Rational(3);
    const UniPoly s2s2 = square_intersect(t.s2 * t.s2);
    if (!s2s2.is_constant()) throw ConsistencyError("s2(X)^2 depends on a: " + s2s2.to_string("a"));
    t.s2_squared = s2s2.coeff(0);
    t.c4_double_cover = Rational(648);
    t.c4 = t.c4_double_cover / Rational(2);
    t.s4 = t.s2_squared - t.c4;

    const auto check = [](const char* what, const UniPoly& got, const UniPoly& want) {
      if (got != want) {
        throw ConsistencyError(std::string(what) + " = " + got.to_string("a") + ", expected " + want.to_string("a"));
      }
    };
    check("s2^2", s2s2, UniPoly({828}));
    check("s2*delta^2", square_intersect(t.s2 * pow(SquareClass::delta(), 2)), UniPoly({60}));
    check("s2*alpha^2", square_intersect(t.s2 * pow(SquareClass::alpha(), 2)), UniPoly({0, -30}));
    check("s4", UniPoly::constant(t.s4), UniPoly({504}));
    check("c4", UniPoly::constant(t.c4), UniPoly({324}));
    return t;
  }();
  return table;
}

SquareClass segre_class(int i) {
  switch (i) {
    case 0:
      return SquareClass::constant(Rational(1));
    case 2:
      return square_chern_table().s2;
    case 4:
      return SquareClass::pt() * square_chern_table().s4;
    default:
      return {};
  }
}

UniPoly pb_top_intersect(const PBClass& p) {
  if (p.degree() != 7) {
    throw DomainError("top intersection on P(Omega_X) needs degree 7, got " + std::to_string(p.degree()));
  }
  UniPoly total;
  for (int j = 3; j <= 7; ++j) {
    const SquareClass beta = p.component(j);
    if (beta.is_zero()) continue;
    total += square_intersect(segre_class(j - 3) * beta);
  }
  return total;
}

std::vector<TableRow> derived_rows() {
  const PBClass z = PBClass::zeta();
  const auto row = [&](int zeta_exp, const SquareClass& beta, std::string label, std::string how) {
    return TableRow{std::move(label), pb_top_intersect(pow(z, static_cast<unsigned>(zeta_exp)) * PBClass::pullback(beta)),
                    std::move(how)};
  };
  const SquareClass al = SquareClass::alpha();
  const SquareClass de = SquareClass::delta();
  const SquareClass sb = SquareClass::sbar();
  const SquareClass one = SquareClass::constant(Rational(1));
  std::vector<TableRow> rows;
  rows.push_back(row(7, one, "zeta^7", "s4(X) = s2(X)^2 - c4(X)"));
  rows.push_back(row(6, al, "zeta^6*alpha", "odd Segre class vanishes"));
  rows.push_back(row(6, de, "zeta^6*delta", "odd Segre class vanishes"));
  rows.push_back(row(5, al * al, "zeta^5*alpha^2", "s2(X)*alpha^2"));
  rows.push_back(row(5, al * de, "zeta^5*alpha*delta", "s2(X)*alpha*delta"));
  rows.push_back(row(5, de * de, "zeta^5*delta^2", "s2(X)*delta^2"));
  rows.push_back(row(5, sb, "zeta^5*Sbar", "s2(X)*Sbar"));
  rows.push_back(row(4, al * al * al, "zeta^4*alpha^3", "odd Segre class vanishes"));
  rows.push_back(row(4, sb * de, "zeta^4*Sbar*delta", "odd Segre class vanishes"));
  rows.push_back(row(3, pow(al, 4), "zeta^3*alpha^4", "degree on X"));
  rows.push_back(row(3, pow(al, 2) * pow(de, 2), "zeta^3*alpha^2*delta^2", "degree on X"));
  rows.push_back(row(3, pow(de, 4), "zeta^3*delta^4", "degree on X"));
  rows.push_back(row(3, sb * al * al, "zeta^3*Sbar*alpha^2", "degree on X"));
  rows.push_back(row(3, sb * de * de, "zeta^3*Sbar*delta^2", "degree on X"));
  rows.push_back(row(3, sb * sb, "zeta^3*Sbar^2", "degree on X"));
  return rows;
}

PBClass z_class() {
  const PBClass z = PBClass::zeta();
  const SquareClass de = SquareClass::delta();
  return z * z * Rational(2) + z * PBClass::pullback(de * Rational(2)) +
         PBClass::pullback(SquareClass::sbar() * Rational(24) - de * de * Rational(6));
}

UniPoly z_pairing() {
  const PBClass h = PBClass::zeta() + PBClass::pullback(SquareClass::alpha() - SquareClass::delta());
  return pb_top_intersect(pow(h, 5) * z_class());
}

AlgebraicReal z_pairing_threshold() {
  auto root = largest_real_root(z_pairing());
  if (!root) throw ConsistencyError("z pairing has no real root");
  return *root;
}

std::vector<std::string> z_pairing_notes() {
  return {
      "computed (zeta + pi^*(alpha - delta))^5 . [Z] = " + z_pairing().to_string("a") +
          " = 30(a^2 - 8a - 16); the published quadratic 15(a^2 - 8a - 56) has largest root 4 + 6 sqrt(2) ~ 12.4853, "
          "which contradicts the published decimal 9.6569",
      "the published bound (8 + sqrt(288))/2 ~ 12.4853 does not match the decimal 9.6569; the computed root is "
          "(8 + sqrt(128))/2 = 4 + 4 sqrt(2) ~ 9.65685",
  };
}

KahlerValues<UniPoly> kahler_polys() {
  const SquareClass w = SquareClass::alpha() - SquareClass::delta();
  return {
      square_intersect(pow(w, 4)),
      square_intersect(pow(w, 3) * SquareClass::exceptional()),
      square_intersect(pow(w, 2) * SquareClass::sbar()),
      square_intersect(w * SquareClass::l()),
  };
}

KahlerCriterion kahler_criterion(const Rational& a) {
  const auto p = kahler_polys();
  KahlerValues<Rational> v{p.top.eval(a), p.divisor.eval(a), p.surface.eval(a), p.curve.eval(a)};
  const bool positive = v.top.sign() > 0 && v.divisor.sign() > 0 && v.surface.sign() > 0 && v.curve.sign() > 0;
  return {std::move(v), positive};
}

}  // namespace hkpos::square
