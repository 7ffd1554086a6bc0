#include <cstdio>
#include <functional>
#include <string>
#include <vector>

#include "hkpos/hilbert_square.hpp"
#include "hkpos/rr_derivation.hpp"
#include "hkpos/threshold.hpp"
#include "properties.hpp"
#include "support.hpp"

using namespace hkpos;

namespace {

struct Check {
  std::vector<std::string> failures;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void merge(const std::vector<std::string>& more, const std::string& label) {
    if (!more.empty()) failures.push_back(label + ": " + std::to_string(more.size()) + " failing case(s), first: " + more.front());
  }
};

bool within(const AlgebraicReal& x, const Rational& target, const Rational& tol) {
  return x.compare(target - tol) > 0 && x.compare(target + tol) < 0;
}

const ChernMonomial kOne;
const ChernMonomial kC2 = ChernMonomial::symbol(2);
const ChernMonomial kC4 = ChernMonomial::symbol(4);
const ChernMonomial kC2Sq{{2, 2}};

void k3_threshold(Check& c) {
  const ThresholdResult r = compute_threshold(preset(Preset::K3));
  c.expect(r.poly == UniPoly({-24, 3}), "poly is " + r.poly.to_string());
  c.expect(r.C && r.C->rational_value() == Rational(8), "C is not exactly 8");
}

void k3_2_threshold(Check& c) {
  const ThresholdResult r = compute_threshold(preset(Preset::K3_2));
  c.expect(r.poly == UniPoly({504, -630, 105}), "poly is " + r.poly.to_string());
  c.expect(r.C.has_value(), "no real root");
  if (!r.C) return;
  // (C - 3)^2 = 21/5 with C > 3 means C is the larger root of 5t^2 - 30t + 24
  const UniPoly shifted = UniPoly({-3, 1}) * UniPoly({-3, 1}) - UniPoly({Rational(21, 5)});
  c.expect(divmod(shifted, r.C->defining()).second.is_zero() && *r.C > Rational(3), "(C - 3)^2 != 21/5");
  c.expect(within(*r.C, Rational(50493, 10000), Rational(1, 10000)), "decimal " + r.C->decimal());
}

void k3_3_threshold(Check& c) {
  const ThresholdResult r = compute_threshold(preset(Preset::K3_3));
  c.expect(r.poly == UniPoly({-10560, -31680, -35640, 6930}), "poly is " + r.poly.to_string());
  c.expect(isolate_real_roots(r.poly).size() == 1, "not exactly one real root");
  c.expect(r.C.has_value(), "no real root");
  if (!r.C) return;
  c.expect(within(*r.C, Rational(59538, 10000), Rational(1, 10000)),
           "root " + r.C->decimal(8) + " is not within 1e-4 of 5.9538");
  const Interval closed = testing::closed_form_cubic_root(Rational(1, 1000000));
  c.expect(closed.width() <= Rational(1, 1000000), "closed form enclosure too wide");
  c.expect(r.C->lower() <= closed.lo && closed.hi <= r.C->upper(), "closed form outside the isolating interval");
}

void segre_inversion(Check& c) {
  const GradedSeries s = series_inverse(GradedSeries::total_chern(4));
  c.expect(s.component(4) == GradedSeries(4, {{kC2Sq, 1}, {kC4, -1}}), "weight 4 is " + s.component(4).to_string());
  // n = 2: binom(7, 2i) times s_{4-2i}; leading coefficients 1, -21, 35
  const Rational w0 = binomial(7, 0) * s.coefficient(kC2Sq);
  const Rational w1 = binomial(7, 2) * s.coefficient(kC2);
  const Rational w2 = binomial(7, 4) * s.constant_term();
  c.expect(w0 == Rational(1) && w1 == Rational(-21) && w2 == Rational(35),
           "weighted coefficients " + w0.to_string() + ", " + w1.to_string() + ", " + w2.to_string());
  c.expect(s.coefficient(kC2) == Rational(-1), "s2 != -c2");
}

void hilbert_square_tables(Check& c) {
  using namespace square;
  const SquareClass A = SquareClass::alpha(), D = SquareClass::delta(), S = SquareClass::sbar(), L = SquareClass::l();
  const auto zp = [](int k, const SquareClass& b) {
    return pb_top_intersect(pow(PBClass::zeta(), static_cast<unsigned>(k)) * PBClass::pullback(b));
  };
  struct Row {
    std::string label;
    UniPoly got;
    UniPoly want;
  };
  const std::vector<Row> rows = {
      {"alpha^4", square_intersect(pow(A, 4)), UniPoly({0, 0, 3})},
      {"alpha^3 delta", square_intersect(pow(A, 3) * D), UniPoly()},
      {"alpha^2 delta^2", square_intersect(A * A * D * D), UniPoly({0, -2})},
      {"alpha delta^3", square_intersect(A * pow(D, 3)), UniPoly()},
      {"delta^4", square_intersect(pow(D, 4)), UniPoly({12})},
      {"Sbar^2", square_intersect(S * S), UniPoly({1})},
      {"Sbar alpha^2", square_intersect(S * A * A), UniPoly({0, 1})},
      {"Sbar alpha delta", square_intersect(S * A * D), UniPoly()},
      {"Sbar delta^2", square_intersect(S * D * D), UniPoly({-1})},
      {"l alpha", square_intersect(L * A), UniPoly()},
      {"l delta", square_intersect(L * D), UniPoly({-1})},
      {"zeta^7", zp(7, SquareClass::constant(Rational(1))), UniPoly({504})},
      {"zeta^6 alpha", zp(6, A), UniPoly()},
      {"zeta^6 delta", zp(6, D), UniPoly()},
      {"zeta^5 alpha^2", zp(5, A * A), UniPoly({0, -30})},
      {"zeta^5 alpha delta", zp(5, A * D), UniPoly()},
      {"zeta^5 delta^2", zp(5, D * D), UniPoly({60})},
      {"zeta^5 Sbar", zp(5, S), UniPoly({-27})},
      {"zeta^4 alpha^3", zp(4, pow(A, 3)), UniPoly()},
      {"zeta^3 Sbar delta^2", zp(3, S * D * D), UniPoly({-1})},
      {"zeta^3 delta^4", zp(3, pow(D, 4)), UniPoly({12})},
      {"zeta^3 alpha^4", zp(3, pow(A, 4)), UniPoly({0, 0, 3})},
      {"zeta^3 Sbar^2", zp(3, S * S), UniPoly({1})},
  };
  for (const auto& r : rows) c.expect(r.got == r.want, r.label + " = " + r.got.to_string("a"));
  const auto& t = square_chern_table();
  c.expect(t.s2_squared == Rational(828) && t.c4 == Rational(324) && t.s4 == Rational(504), "Chern data");
}

void kahler(Check& c) {
  const auto p = square::kahler_polys();
  c.expect(p.top == UniPoly({12, -12, 3}), "(alpha - delta)^4 = " + p.top.to_string("a"));
  c.expect(p.divisor == UniPoly({-24, 12}), "(alpha - delta)^3 E = " + p.divisor.to_string("a"));
  c.expect(p.surface == UniPoly({-1, 1}), "(alpha - delta)^2 Sbar = " + p.surface.to_string("a"));
  c.expect(p.curve == UniPoly({1}), "(alpha - delta) l = " + p.curve.to_string("a"));
  for (const Rational& a : {Rational(1), Rational(2), Rational(5, 2), Rational(3), Rational(10)}) {
    c.expect(square::kahler_criterion(a).all_positive == (a > Rational(2)), "predicate at a = " + a.to_string());
  }
}

// Independent expansion of (zeta + w)^5 [Z] against the printed rows.
UniPoly z_pairing_oracle() {
  using namespace square;
  const SquareClass A = SquareClass::alpha(), D = SquareClass::delta(), S = SquareClass::sbar();
  const auto z5 = [](int alpha2, int delta2, int sbar) {
    return UniPoly({0, -30}) * Rational(alpha2) + UniPoly({60}) * Rational(delta2) + UniPoly({-27}) * Rational(sbar);
  };
  const SquareClass w = A - D;
  UniPoly total = UniPoly({1008});
  total += z5(1, 1, 0) * Rational(20);
  total += square_intersect(pow(w, 4)) * Rational(10);
  total += z5(0, -1, 0) * Rational(10);
  total += square_intersect(pow(w, 3) * D) * Rational(20);
  total += z5(0, -6, 24);
  total += square_intersect(w * w * (S * Rational(24) - D * D * Rational(6))) * Rational(10);
  return total;
}

void z_pairing(Check& c) {
  const UniPoly p = square::z_pairing();
  c.expect(p == z_pairing_oracle(), "z_pairing " + p.to_string("a") + " vs oracle " + z_pairing_oracle().to_string("a"));
  c.expect(p == UniPoly({-480, -240, 30}), "z_pairing is " + p.to_string("a"));
  c.expect(within(square::z_pairing_threshold(), Rational(96569, 10000), Rational(1, 10000)),
           "largest root " + square::z_pairing_threshold().decimal());
  const auto notes = square::z_pairing_notes();
  bool quadratic = false, radical = false;
  for (const auto& n : notes) {
    quadratic |= n.find("15(a^2 - 8a - 56)") != std::string::npos;
    radical |= n.find("sqrt(288)") != std::string::npos;
  }
  c.expect(quadratic && radical, "discrepancy notes missing");
}

void derivation(Check& c) {
  const DerivedConstants d = derive_constants();
  const auto get = [&](const ChernMonomial& m) { return d.constants.count(m) ? d.constants.at(m) : Rational(-1); };
  c.expect(get(kOne) == Rational(15), "L^6 constant " + get(kOne).to_string());
  c.expect(get(kC2) == Rational(108), "c2 L^4 constant " + get(kC2).to_string());
  c.expect(get(kC2Sq) == Rational(1848), "c2^2 L^2 constant is " + get(kC2Sq).to_string() + ", expected 1848");
  c.expect(get(kC4) == Rational(2424), "c4 L^2 constant is " + get(kC4).to_string() + ", expected 2424");
  const LinearEquation& e1 = d.rr.equation1;
  c.expect(e1.coefficients.at(kC2Sq) == Rational(3) && e1.coefficients.at(kC4) == Rational(-1) && e1.rhs == Rational(3120),
           "equation 1 is " + e1.to_string());
  const LinearEquation& e2 = d.nieper.equation2;
  c.expect(e2.coefficients.at(kC2Sq) == Rational(7, 4) && e2.coefficients.at(kC4) == Rational(-1) && e2.rhs == Rational(810),
           "equation 2 is " + e2.to_string() + ", expected (7/4) c2^2 - c4 = 810");
  c.expect(d.nieper.lambda_coefficient == Rational(1, 3), "lambda " + d.nieper.lambda_coefficient.to_string());
  c.expect(d.nieper.sqrt_todd.coefficient(kC2Sq) == Rational(7, 5760), "sqrt(Td) c2^2 coefficient");
  bool note = false;
  for (const auto& n : d.notes) note |= n.find("7/5650") != std::string::npos;
  c.expect(note, "7/5650 discrepancy note missing");
  c.expect(d.rr.todd_constant == Rational(4), "Todd constant " + d.rr.todd_constant.to_string());
  c.expect(Rational(36800, 6048) - Rational(14720, 6720) + Rational(3200, 30240) == Rational(4), "Todd identity");
}

void cross_module(Check& c) {
  const DerivedConstants d = derive_constants();
  const FujikiTable& t = preset(Preset::K3_3).table;
  for (const auto& [m, v] : d.constants) {
    const auto p = t.lookup(m);
    c.expect(p == v, "derived " + m.to_string() + " = " + v.to_string() + ", preset K3_3 has " +
                         (p ? p->to_string() : std::string("none")));
  }
  const auto seg = segre_pairings(preset(Preset::K3_2));
  c.expect(seg == std::vector<Rational>{504, -30, 3}, "K3_2 Segre pairings");
  using namespace square;
  const auto zp = [](int k, const SquareClass& b) {
    return pb_top_intersect(pow(PBClass::zeta(), static_cast<unsigned>(k)) * PBClass::pullback(b));
  };
  const SquareClass A = SquareClass::alpha();
  c.expect(zp(7, SquareClass::constant(Rational(1))) == UniPoly({seg[0]}), "zeta^7 vs d0");
  c.expect(zp(5, A * A) == UniPoly({0, seg[1]}), "zeta^5 alpha^2 vs d2");
  c.expect(zp(3, pow(A, 4)) == UniPoly({0, 0, seg[2]}), "zeta^3 alpha^4 vs d4");
}

void properties(Check& c) {
  c.merge(testing::series_roundtrips(120), "series round trips");
  c.merge(testing::rational_root_recovery(120), "rational root recovery");
  c.merge(testing::gamma_identity(120), "gamma_p identity");
  c.merge(testing::cone_homogeneity(200), "cone homogeneity");
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"K3 threshold polynomial and C = 8", k3_threshold},
      {"K3^[2] threshold polynomial and C = 3 + sqrt(21/5)", k3_2_threshold},
      {"K3^[3] threshold cubic, unique root, closed radical form", k3_3_threshold},
      {"Segre inversion and n = 2 binomial weighting", segre_inversion},
      {"Hilbert square intersection tables", hilbert_square_tables},
      {"Kaehler criterion for alpha - delta", kahler},
      {"pairing with the class of Z", z_pairing},
      {"K3^[3] constants from Riemann-Roch and the Nieper identity", derivation},
      {"cross-module consistency", cross_module},
      {"property suites", properties},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const bool ok = c.failures.empty();
    failed += ok ? 0 : 1;
    std::printf("[%s] %2zu %s\n", ok ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str());
    for (const auto& f : c.failures) std::printf("         %s\n", f.c_str());
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - static_cast<std::size_t>(failed), criteria.size());
  return failed == 0 ? 0 : 1;
}
