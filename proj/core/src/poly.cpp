#include "hkpos/poly.hpp"

#include <sstream>

#include "hkpos/error.hpp"

namespace hkpos {

UniPoly::UniPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

UniPoly UniPoly::monomial(const Rational& c, unsigned k) {
  std::vector<Rational> coeffs(k + 1);
  coeffs[k] = c;
  return UniPoly(std::move(coeffs));
}

void UniPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

UniPoly UniPoly::derivative() const {
  if (coeffs_.size() <= 1) return {};
  std::vector<Rational> out(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) out[i - 1] = coeffs_[i] * Rational(static_cast<long>(i));
  return UniPoly(std::move(out));
}

Rational UniPoly::eval(const Rational& at) const {
  Rational acc(0);
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= at;
    acc += *it;
  }
  return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
  UniPoly acc;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
    acc *= inner;
    acc += constant(*it);
  }
  return acc;
}

UniPoly UniPoly::monic() const {
  if (is_zero()) return {};
  return *this * (Rational(1) / leading());
}

UniPoly UniPoly::primitive() const {
  if (is_zero()) return {};
  BigInt lcm_den(1);
  for (const auto& c : coeffs_) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), c.den().get_mpz_t());
  std::vector<BigInt> ints;
  ints.reserve(coeffs_.size());
  BigInt content(0);
  for (const auto& c : coeffs_) {
    ints.push_back(c.num() * (lcm_den / c.den()));
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), ints.back().get_mpz_t());
  }
  if (leading().sign() < 0) content = -content;
  std::vector<Rational> out;
  out.reserve(ints.size());
  for (const auto& v : ints) out.emplace_back(BigInt(v / content));
  return UniPoly(std::move(out));
}

UniPoly UniPoly::operator-() const {
  UniPoly r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

UniPoly& UniPoly::operator+=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] += rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& rhs) {
  if (rhs.coeffs_.size() > coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] -= rhs.coeffs_[i];
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const UniPoly& rhs) {
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * rhs.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

UniPoly& UniPoly::operator*=(const Rational& rhs) {
  if (rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  for (auto& c : coeffs_) c *= rhs;
  return *this;
}

std::string UniPoly::to_string(std::string_view var) const {
  if (is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = degree(); i >= 0; --i) {
    const Rational& c = coeffs_[static_cast<std::size_t>(i)];
    if (c.is_zero()) continue;
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (i == 0) {
      os << mag;
      continue;
    }
    if (mag != Rational(1)) {
      if (mag.is_integer()) {
        os << mag;
      } else {
        os << '(' << mag << ')';
      }
    }
    os << var;
    if (i > 1) os << '^' << i;
  }
  return os.str();
}

std::pair<UniPoly, UniPoly> divmod(const UniPoly& num, const UniPoly& den) {
  if (den.is_zero()) throw DomainError("polynomial division by zero");
  std::vector<Rational> rem(num.coeffs().begin(), num.coeffs().end());
  const int dd = den.degree();
  if (num.degree() < dd) return {UniPoly{}, num};
  std::vector<Rational> quot(static_cast<std::size_t>(num.degree() - dd + 1));
  const Rational lead = den.leading();
  for (int i = num.degree(); i >= dd; --i) {
    const Rational factor = rem[static_cast<std::size_t>(i)] / lead;
    quot[static_cast<std::size_t>(i - dd)] = factor;
    if (factor.is_zero()) continue;
    for (int j = 0; j <= dd; ++j) rem[static_cast<std::size_t>(i - dd + j)] -= factor * den.coeff(static_cast<std::size_t>(j));
  }
  return {UniPoly(std::move(quot)), UniPoly(std::move(rem))};
}

UniPoly gcd(const UniPoly& a, const UniPoly& b) {
  UniPoly x = a;
  UniPoly y = b;
  while (!y.is_zero()) {
    UniPoly r = divmod(x, y).second;
    x = std::move(y);
    y = r.monic();
  }
  return x.monic();
}

UniPoly square_free_part(const UniPoly& p) {
  if (p.is_constant()) return p.primitive();
  const UniPoly g = gcd(p, p.derivative());
  return divmod(p, g).first.primitive();
}

UniPoly pow(const UniPoly& base, unsigned exponent) {
  UniPoly result = UniPoly::constant(Rational(1));
  UniPoly b = base;
  while (exponent != 0) {
    if (exponent & 1U) result *= b;
    b *= b;
    exponent >>= 1U;
  }
  return result;
}

}  // namespace hkpos
