#include "hkpos/algebraic_real.hpp"

#include <algorithm>

#include "hkpos/error.hpp"

namespace hkpos {

namespace {

UniPoly linear_factor(const Rational& r) { return UniPoly({-r, Rational(1)}).primitive(); }

// A split point strictly inside (lo, hi) that is not a root of p.
Rational non_root_split(const UniPoly& p, const Rational& lo, const Rational& hi) {
  const Rational mid = (lo + hi) / Rational(2);
  if (!p.eval(mid).is_zero()) return mid;
  Rational offset = (hi - lo) / Rational(4);
  for (;;) {
    for (const Rational& candidate : {mid + offset, mid - offset}) {
      if (!p.eval(candidate).is_zero()) return candidate;
    }
    offset /= Rational(2);
  }
}

}  // namespace

SturmSequence::SturmSequence(const UniPoly& p) {
  if (p.is_zero()) return;
  chain_.push_back(p);
  chain_.push_back(p.derivative());
  while (!chain_.back().is_zero()) {
    const auto& a = chain_[chain_.size() - 2];
    const auto& b = chain_.back();
    UniPoly r = -divmod(a, b).second;
    if (r.is_zero()) break;
    // Positive rescaling keeps sign variations intact and coefficients small.
    chain_.push_back(r * (Rational(1) / r.leading().abs()));
  }
  if (chain_.back().is_zero()) chain_.pop_back();
}

int SturmSequence::variations(const Rational& at) const {
  int changes = 0;
  int last = 0;
  for (const auto& q : chain_) {
    const int s = q.sign_at(at);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

Rational root_bound(const UniPoly& p) {
  if (p.degree() < 1) return Rational(1);
  Rational max_ratio(0);
  const Rational lead = p.leading().abs();
  for (int i = 0; i < p.degree(); ++i) {
    max_ratio = std::max(max_ratio, p.coeff(static_cast<std::size_t>(i)).abs() / lead);
  }
  return Rational(1) + max_ratio;
}

AlgebraicReal AlgebraicReal::from_rational(const Rational& r) { return {linear_factor(r), r, r}; }

AlgebraicReal AlgebraicReal::settle(const UniPoly& square_free, Rational lo, Rational hi) {
  // Any rational root r of a primitive integer polynomial has lead * r integral,
  // so once the interval is narrower than 1/lead it holds at most one candidate.
  const Rational lead = square_free.leading().abs();
  const int lo_sign = square_free.sign_at(lo);
  while ((hi - lo) * lead >= Rational(1)) {
    const Rational mid = (lo + hi) / Rational(2);
    const int s = square_free.sign_at(mid);
    if (s == 0) return from_rational(mid);
    if (s == lo_sign) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  const BigInt candidate = (hi * lead).floor();
  const Rational scaled(candidate);
  if (scaled > lo * lead && scaled < hi * lead) {
    const Rational r = scaled / lead;
    if (square_free.eval(r).is_zero()) return from_rational(r);
  }
  return {square_free, std::move(lo), std::move(hi)};
}

AlgebraicReal AlgebraicReal::from_isolating(const UniPoly& p, const Rational& lo, const Rational& hi) {
  if (p.degree() < 1) throw DomainError("defining polynomial must have positive degree");
  if (lo > hi) throw DomainError("isolating interval has lo > hi");
  const UniPoly sf = square_free_part(p);
  if (lo == hi) {
    if (!sf.eval(lo).is_zero()) throw DomainError("point interval is not a root of the defining polynomial");
    return from_rational(lo);
  }
  if (sf.eval(lo).is_zero() || sf.eval(hi).is_zero()) {
    throw DomainError("isolating interval endpoints must not be roots");
  }
  if (SturmSequence(sf).count(lo, hi) != 1) throw DomainError("interval does not isolate exactly one root");
  return settle(sf, lo, hi);
}

AlgebraicReal AlgebraicReal::refine() const {
  if (is_rational()) return *this;
  const Rational mid = (lo_ + hi_) / Rational(2);
  const int s = defining_.sign_at(mid);
  if (s == 0) return from_rational(mid);
  if (s == defining_.sign_at(lo_)) return {defining_, mid, hi_};
  return {defining_, lo_, mid};
}

Interval AlgebraicReal::refine_to(const Rational& eps) const {
  if (eps.sign() <= 0) throw DomainError("refinement width must be positive");
  AlgebraicReal x = *this;
  while (x.hi_ - x.lo_ > eps) x = x.refine();
  return x.interval();
}

std::strong_ordering AlgebraicReal::compare(const Rational& r) const {
  if (is_rational()) return lo_ <=> r;
  if (r <= lo_) return std::strong_ordering::greater;
  if (r >= hi_) return std::strong_ordering::less;
  const int s = defining_.sign_at(r);
  if (s == 0) return std::strong_ordering::equal;
  return s == defining_.sign_at(lo_) ? std::strong_ordering::greater : std::strong_ordering::less;
}

int AlgebraicReal::sign() const {
  const auto c = compare(Rational(0));
  return c < 0 ? -1 : (c > 0 ? 1 : 0);
}

std::string AlgebraicReal::decimal(int significant) const {
  if (is_rational()) return to_decimal(lo_, significant);
  AlgebraicReal x = *this;
  for (;;) {
    // Rounding is monotone, so equal roundings of both endpoints fix the
    // rounding of everything in between.
    std::string a = to_decimal(x.lo_, significant);
    if (a == to_decimal(x.hi_, significant)) return a;
    x = x.refine();
    if (x.is_rational()) return to_decimal(x.lo_, significant);
  }
}

std::string AlgebraicReal::to_string(int significant) const {
  if (is_rational()) return lo_.to_string();
  return decimal(significant);
}

std::vector<AlgebraicReal> isolate_real_roots(const UniPoly& p) {
  if (p.is_zero()) throw DomainError("cannot isolate the roots of the zero polynomial");
  if (p.degree() < 1) return {};
  const UniPoly sf = square_free_part(p);
  const SturmSequence sturm(sf);
  const Rational bound = root_bound(sf);

  struct Pending {
    Rational lo, hi;
    int count;
  };
  std::vector<Pending> stack{{-bound, bound, sturm.count(-bound, bound)}};
  std::vector<AlgebraicReal> roots;
  while (!stack.empty()) {
    Pending job = std::move(stack.back());
    stack.pop_back();
    if (job.count == 0) continue;
    if (job.count == 1) {
      roots.push_back(AlgebraicReal::settle(sf, job.lo, job.hi));
      continue;
    }
    const Rational mid = non_root_split(sf, job.lo, job.hi);
    const int left = sturm.count(job.lo, mid);
    stack.push_back({mid, job.hi, job.count - left});
    stack.push_back({job.lo, mid, left});
  }
  std::sort(roots.begin(), roots.end(),
            [](const AlgebraicReal& a, const AlgebraicReal& b) { return a.upper() < b.upper(); });
  return roots;
}

std::optional<AlgebraicReal> largest_real_root(const UniPoly& p) {
  auto roots = isolate_real_roots(p);
  if (roots.empty()) return std::nullopt;
  return roots.back();
}

}  // namespace hkpos
