#include <doctest.h>

#include "hkpos/error.hpp"
#include "hkpos/threshold.hpp"
#include "support.hpp"

using namespace hkpos;

TEST_CASE("threshold polynomials") {
  CHECK(build_threshold_poly(preset("K3")) == UniPoly({-24, 3}));
  CHECK(build_threshold_poly(preset("K3_2")) == UniPoly({504, -630, 105}));
  CHECK(build_threshold_poly(preset("K3_3")) == UniPoly({-10560, -31680, -35640, 6930}));
}

TEST_CASE("the constant C") {
  const auto k3 = constant_C(preset("K3"));
  REQUIRE(k3);
  CHECK(k3->rational_value() == Rational(8));

  const auto k32 = constant_C(preset("K3_2"));
  REQUIRE(k32);
  CHECK(*k32 > Rational(3));
  // (C - 3)^2 = 21/5  <=>  5C^2 - 30C + 24 = 0
  CHECK(k32->defining() == UniPoly({24, -30, 5}));
  CHECK(*k32 > Rational(50493, 10000) - Rational(1, 10000));
  CHECK(*k32 < Rational(50493, 10000) + Rational(1, 10000));

  const auto k33 = constant_C(preset("K3_3"));
  REQUIRE(k33);
  CHECK(isolate_real_roots(build_threshold_poly(preset("K3_3"))).size() == 1);
  CHECK(*k33 > Rational(595367, 100000));
  CHECK(*k33 < Rational(595368, 100000));
  const Interval closed = testing::closed_form_cubic_root(Rational(1, 1000000));
  CHECK(closed.width() <= Rational(1, 1000000));
  CHECK(k33->lower() <= closed.lo);
  CHECK(closed.hi <= k33->upper());
  const Interval fine = k33->refine_to(Rational(1, 100000));
  CHECK(fine.lo <= closed.hi);
  CHECK(closed.lo <= fine.hi);
}

TEST_CASE("pseudoeffectivity test") {
  CHECK(is_pseff_sufficient(preset("K3"), Rational(8)));
  CHECK_FALSE(is_pseff_sufficient(preset("K3"), Rational(7)));
  CHECK_FALSE(is_pseff_sufficient(preset("K3_2"), Rational(5)));
  CHECK(is_pseff_sufficient(preset("K3_2"), Rational(6)));
  CHECK_THROWS_AS(is_pseff_sufficient(preset("K3"), Rational(-1)), DomainError);

  const ThresholdResult none{UniPoly({1, 0, 1}), std::nullopt};
  CHECK(is_pseff_sufficient(none, Rational(0)));
}

TEST_CASE("gamma_p") {
  CHECK(gamma_p(preset("K3"), Rational(32)) == Rational(1, 2));
  CHECK(gamma_p(preset("K3"), Rational(8)) == Rational(1));
  CHECK_THROWS_AS(gamma_p(preset("K3"), Rational(0)), DomainError);
  CHECK_THROWS_AS(gamma_p(preset("K3"), Rational(-3)), DomainError);

  const AlgebraicReal g = gamma_p(preset("K3_2"), Rational(3));
  // gamma^2 * q is a root of p_X
  const Interval iv = g.refine_to(Rational(1, 1000000));
  const auto C = *constant_C(preset("K3_2"));
  CHECK(C > iv.lo * iv.lo * Rational(3));
  CHECK(C < iv.hi * iv.hi * Rational(3));

  // C <= 0 or absent gives 0
  const ThresholdResult negative{UniPoly({2, 1}), AlgebraicReal::from_rational(Rational(-2))};
  CHECK(gamma_p(negative, Rational(1)) == Rational(0));
  const ThresholdResult none{UniPoly({1, 0, 1}), std::nullopt};
  CHECK(gamma_p(none, Rational(1)) == Rational(0));
}

TEST_CASE("pseudoeffective cone membership") {
  const HKFamily k32 = preset("K3_2");
  CHECK(pseff_cone_member(k32, Rational(0), Rational(0), true));
  CHECK(pseff_cone_member(k32, Rational(1), Rational(6), true));
  CHECK_FALSE(pseff_cone_member(k32, Rational(1), Rational(5), true));
  CHECK_FALSE(pseff_cone_member(k32, Rational(1), Rational(6), false));
  CHECK_FALSE(pseff_cone_member(k32, Rational(-1), Rational(6), true));
  CHECK(pseff_cone_member(preset("K3"), Rational(2), Rational(32), true));
  CHECK_FALSE(pseff_cone_member(preset("K3"), Rational(2), Rational(31), true));
  CHECK_FALSE(pseff_cone_member(preset("K3"), Rational(0), Rational(-1), true));
}

TEST_CASE("custom family without real root") {
  // c2 = -6 gives p(t) = 3t + 6, root -2
  const HKFamily f{"custom", FujikiTable(1, {{ChernMonomial(), 1}, {ChernMonomial::symbol(2), -6}}), {}};
  const auto r = compute_threshold(f);
  CHECK(r.poly == UniPoly({6, 3}));
  REQUIRE(r.C);
  CHECK(*r.C == Rational(-2));
  CHECK(is_pseff_sufficient(r, Rational(0)));
  CHECK(gamma_p(r, Rational(5)) == Rational(0));
}
