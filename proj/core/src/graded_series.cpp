#include "hkpos/graded_series.hpp"

#include <sstream>

#include "hkpos/error.hpp"

namespace hkpos {

ChernMonomial::ChernMonomial(std::initializer_list<std::pair<int, int>> exponents) {
  for (const auto& [index, exponent] : exponents) multiply(index, exponent);
}

ChernMonomial& ChernMonomial::multiply(int index, int exponent) {
  if (index <= 0 || index % 2 != 0) {
    throw DomainError("Chern symbol c" + std::to_string(index) + " is not allowed: only even indices occur");
  }
  if (exponent < 0) throw DomainError("negative exponent on c" + std::to_string(index));
  if (exponent == 0) return *this;
  exponents_[index] += exponent;
  return *this;
}

ChernMonomial operator*(ChernMonomial a, const ChernMonomial& b) {
  for (const auto& [index, exponent] : b.exponents_) a.exponents_[index] += exponent;
  return a;
}

int ChernMonomial::weight() const {
  int w = 0;
  for (const auto& [index, exponent] : exponents_) w += index * exponent;
  return w;
}

int ChernMonomial::exponent(int index) const {
  const auto it = exponents_.find(index);
  return it == exponents_.end() ? 0 : it->second;
}

std::string ChernMonomial::to_string() const {
  if (is_one()) return "1";
  std::string out;
  for (const auto& [index, exponent] : exponents_) {
    if (!out.empty()) out += '*';
    out += "c" + std::to_string(index);
    if (exponent > 1) out += "^" + std::to_string(exponent);
  }
  return out;
}

std::strong_ordering operator<=>(const ChernMonomial& a, const ChernMonomial& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  auto ia = a.exponents_.begin();
  auto ib = b.exponents_.begin();
  while (ia != a.exponents_.end() && ib != b.exponents_.end()) {
    if (ia->first != ib->first) return ia->first < ib->first ? std::strong_ordering::less : std::strong_ordering::greater;
    if (ia->second != ib->second) return ia->second > ib->second ? std::strong_ordering::less : std::strong_ordering::greater;
    ++ia;
    ++ib;
  }
  // Equal weights force both iterators to finish together.
  return std::strong_ordering::equal;
}

GradedSeries::GradedSeries(int truncation) : truncation_(truncation) {
  if (truncation < 0) throw DomainError("negative truncation");
}

GradedSeries::GradedSeries(int truncation, const Terms& terms) : GradedSeries(truncation) {
  for (const auto& [m, c] : terms) add_term(m, c);
}

GradedSeries GradedSeries::total_chern(int truncation) {
  GradedSeries c = one(truncation);
  for (int k = 2; k <= truncation; k += 2) c.add_term(ChernMonomial::symbol(k), Rational(1));
  return c;
}

Rational GradedSeries::coefficient(const ChernMonomial& m) const {
  const auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

GradedSeries& GradedSeries::add_term(const ChernMonomial& m, const Rational& c) {
  if (m.weight() > truncation_ || c.is_zero()) return *this;
  auto [it, inserted] = terms_.try_emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
  }
  return *this;
}

GradedSeries GradedSeries::component(int weight) const {
  if (weight < 0 || weight > truncation_) {
    throw DomainError("component weight " + std::to_string(weight) + " outside [0, " + std::to_string(truncation_) + "]");
  }
  GradedSeries out(truncation_);
  for (const auto& [m, c] : terms_) {
    if (m.weight() == weight) out.terms_.emplace(m, c);
  }
  return out;
}

GradedSeries GradedSeries::truncate(int truncation) const { return GradedSeries(truncation, terms_); }

void GradedSeries::require_same_truncation(const GradedSeries& other) const {
  if (truncation_ != other.truncation_) {
    throw DomainError("truncation mismatch: " + std::to_string(truncation_) + " vs " + std::to_string(other.truncation_));
  }
}

GradedSeries& GradedSeries::operator+=(const GradedSeries& rhs) {
  require_same_truncation(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, c);
  return *this;
}

GradedSeries& GradedSeries::operator-=(const GradedSeries& rhs) {
  require_same_truncation(rhs);
  for (const auto& [m, c] : rhs.terms_) add_term(m, -c);
  return *this;
}

GradedSeries& GradedSeries::operator*=(const Rational& scalar) {
  if (scalar.is_zero()) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, c] : terms_) c *= scalar;
  return *this;
}

std::string GradedSeries::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    const Rational mag = c.abs();
    if (first) {
      if (c.sign() < 0) os << '-';
    } else {
      os << (c.sign() < 0 ? " - " : " + ");
    }
    first = false;
    if (m.is_one()) {
      os << mag;
    } else if (mag == Rational(1)) {
      os << m.to_string();
    } else {
      os << '(' << mag << ")*" << m.to_string();
    }
  }
  return os.str();
}

GradedSeries series_mul(const GradedSeries& a, const GradedSeries& b) {
  if (a.truncation() != b.truncation()) {
    throw DomainError("truncation mismatch: " + std::to_string(a.truncation()) + " vs " + std::to_string(b.truncation()));
  }
  GradedSeries out(a.truncation());
  for (const auto& [ma, ca] : a.terms()) {
    for (const auto& [mb, cb] : b.terms()) {
      if (ma.weight() + mb.weight() > a.truncation()) continue;
      out.add_term(ma * mb, ca * cb);
    }
  }
  return out;
}

namespace {

void require_unit_constant(const GradedSeries& a, const char* op) {
  if (a.constant_term() != Rational(1)) {
    throw DomainError(std::string(op) + " needs constant term 1, got " + a.constant_term().to_string());
  }
}

}  // namespace

GradedSeries series_inverse(const GradedSeries& a) {
  require_unit_constant(a, "series_inverse");
  const int n = a.truncation();
  // b_w = -sum_{u=1..w} a_u * b_{w-u}
  std::vector<GradedSeries> parts;
  parts.reserve(static_cast<std::size_t>(n) + 1);
  parts.push_back(GradedSeries::one(n));
  for (int w = 1; w <= n; ++w) {
    GradedSeries next(n);
    for (int u = 1; u <= w; ++u) next -= series_mul(a.component(u), parts[static_cast<std::size_t>(w - u)]);
    parts.push_back(std::move(next));
  }
  GradedSeries out(n);
  for (const auto& p : parts) out += p;
  return out;
}

GradedSeries series_sqrt(const GradedSeries& a) {
  require_unit_constant(a, "series_sqrt");
  const int n = a.truncation();
  // r_w = (a_w - sum_{u=1..w-1} r_u * r_{w-u}) / 2
  std::vector<GradedSeries> parts;
  parts.reserve(static_cast<std::size_t>(n) + 1);
  parts.push_back(GradedSeries::one(n));
  for (int w = 1; w <= n; ++w) {
    GradedSeries next = a.component(w);
    for (int u = 1; u < w; ++u) next -= series_mul(parts[static_cast<std::size_t>(u)], parts[static_cast<std::size_t>(w - u)]);
    parts.push_back(next * Rational(1, 2));
  }
  GradedSeries out(n);
  for (const auto& p : parts) out += p;
  return out;
}

}  // namespace hkpos
