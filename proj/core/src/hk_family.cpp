#include "hkpos/hk_family.hpp"

#include <algorithm>
#include <cctype>

#include "hkpos/error.hpp"
#include "hkpos/rr_derivation.hpp"

namespace hkpos {

FujikiTable::FujikiTable(int n, std::map<ChernMonomial, Rational> pairings) : n_(n), pairings_(std::move(pairings)) {
  if (n_ < 1) throw SchemaError("family dimension parameter n must be positive");
  for (const auto& [m, d] : pairings_) {
    if (m.weight() > dimension()) {
      throw SchemaError("monomial " + m.to_string() + " has weight " + std::to_string(m.weight()) +
                        " above the dimension " + std::to_string(dimension()));
    }
  }
  const auto top = pairings_.find(ChernMonomial::one());
  if (top == pairings_.end()) throw SchemaError("missing top power constant (empty monomial)");
  if (top->second.sign() <= 0) throw SchemaError("top power constant must be positive, got " + top->second.to_string());
}

std::optional<Rational> FujikiTable::lookup(const ChernMonomial& m) const {
  const auto it = pairings_.find(m);
  if (it == pairings_.end()) return std::nullopt;
  return it->second;
}

Rational FujikiTable::constant(const ChernMonomial& m) const {
  auto d = lookup(m);
  if (!d) throw MissingPairing(m.to_string());
  return *d;
}

Rational FujikiTable::pair(const GradedSeries& homogeneous) const {
  Rational total(0);
  for (const auto& [m, c] : homogeneous.terms()) total += c * constant(m);
  return total;
}

std::vector<std::string> preset_names() { return {"K3", "K3_2", "K3_3"}; }

Preset parse_preset(std::string_view name) {
  std::string upper(name);
  std::transform(upper.begin(), upper.end(), upper.begin(), [](unsigned char c) { return std::toupper(c); });
  if (upper == "K3") return Preset::K3;
  if (upper == "K3_2") return Preset::K3_2;
  if (upper == "K3_3") return Preset::K3_3;
  throw SchemaError("unknown family preset '" + std::string(name) + "' (expected K3, K3_2 or K3_3)");
}

HilbertCubeChernNumbers hilbert_cube_chern_numbers() {
  // Unknowns x = c2^3, y = c2*c4 with c6 fixed:
  //   t3 x + t22 y + t6 c6 = chi(O_X) = 4        (weight-6 Todd component)
  //   -x + 2 y - c6 = s6 = -10560                (weight-6 Segre component)
  static const HilbertCubeChernNumbers numbers = [] {
    const Rational c6(3200);
    const Rational chi(4);
    const Rational s6(-10560);
    const GradedSeries todd = todd6().component(6);
    const GradedSeries segre = series_inverse(GradedSeries::total_chern(6)).component(6);
    const ChernMonomial c2_3{{2, 3}};
    const ChernMonomial c2_c4{{2, 1}, {4, 1}};
    const ChernMonomial c6m = ChernMonomial::symbol(6);

    const Rational a11 = todd.coefficient(c2_3), a12 = todd.coefficient(c2_c4);
    const Rational b1 = chi - todd.coefficient(c6m) * c6;
    const Rational a21 = segre.coefficient(c2_3), a22 = segre.coefficient(c2_c4);
    const Rational b2 = s6 - segre.coefficient(c6m) * c6;
    const Rational det = a11 * a22 - a12 * a21;
    if (det.is_zero()) throw ConsistencyError("singular system for the K3^[3] Chern numbers");
    HilbertCubeChernNumbers out{(b1 * a22 - a12 * b2) / det, (a11 * b2 - b1 * a21) / det, c6};
    if (out.c2_cubed != Rational(36800) || out.c2_c4 != Rational(14720)) {
      throw ConsistencyError("K3^[3] Chern numbers solve gave " + out.c2_cubed.to_string() + ", " +
                             out.c2_c4.to_string() + " instead of 36800, 14720");
    }
    return out;
  }();
  return numbers;
}

namespace {

HKFamily make_k3() {
  const ChernMonomial c2 = ChernMonomial::symbol(2);
  return {"K3",
          FujikiTable(1, {{ChernMonomial::one(), Rational(1)}, {c2, Rational(24)}}),
          {{ChernMonomial::one(), "w^2 = q(w): q is the intersection form of the surface"},
           {c2, "c2(S) = 24, the Euler characteristic of a K3 surface"}}};
}

HKFamily make_k3_2() {
  const ChernMonomial c2 = ChernMonomial::symbol(2);
  const ChernMonomial c2_2{{2, 2}};
  const ChernMonomial c4 = ChernMonomial::symbol(4);
  return {"K3_2",
          FujikiTable(2, {{ChernMonomial::one(), Rational(3)}, {c2, Rational(30)}, {c2_2, Rational(828)}, {c4, Rational(324)}}),
          {{ChernMonomial::one(), "w^4 = 3 q(w)^2 (Beauville)"},
           {c2, "c2 w^2 = 30 q(w)"},
           {c2_2, "c2^2 = s2^2 = 828 from the Hilbert-square intersection table"},
           {c4, "c4 = c4(eta^* Omega_X) / 2 = 648 / 2 = 324"}}};
}

HKFamily make_k3_3() {
  const auto chern = hilbert_cube_chern_numbers();
  const ChernMonomial c2 = ChernMonomial::symbol(2);
  const ChernMonomial c2_2{{2, 2}};
  const ChernMonomial c4 = ChernMonomial::symbol(4);
  const ChernMonomial c2_3{{2, 3}};
  const ChernMonomial c2_c4{{2, 1}, {4, 1}};
  const ChernMonomial c6 = ChernMonomial::symbol(6);
  return {"K3_3",
          FujikiTable(3, {{ChernMonomial::one(), Rational(15)},
                          {c2, Rational(108)},
                          {c2_2, Rational(1848)},
                          {c4, Rational(2424)},
                          {c2_3, chern.c2_cubed},
                          {c2_c4, chern.c2_c4},
                          {c6, chern.c6}}),
          {{ChernMonomial::one(), "w^6 = 15 q(w)^3 (exponent fixed by homogeneity)"},
           {c2, "c2 w^4 = 108 q(w)^2"},
           {c2_2, "published constant c2^2 w^2 = 1848 q(w); the Nieper expansion gives 1200, see derive-k3-3"},
           {c4, "published constant c4 w^2 = 2424 q(w); the Nieper expansion gives 480, see derive-k3-3"},
           {c2_3, "solved from chi(O_X) = 4 and s6 = -10560"},
           {c2_c4, "solved from chi(O_X) = 4 and s6 = -10560"},
           {c6, "Euler characteristic of the Hilbert cube of a K3 surface"}}};
}

}  // namespace

HKFamily preset(Preset which) {
  switch (which) {
    case Preset::K3:
      return make_k3();
    case Preset::K3_2:
      return make_k3_2();
    case Preset::K3_3:
      return make_k3_3();
  }
  throw SchemaError("unknown preset");
}

HKFamily preset(std::string_view name) { return preset(parse_preset(name)); }

std::vector<Rational> segre_pairings(const HKFamily& family) {
  const int n = family.table.n();
  const GradedSeries segre = series_inverse(GradedSeries::total_chern(2 * n));
  std::vector<Rational> d;
  d.reserve(static_cast<std::size_t>(n) + 1);
  for (int i = 0; i <= n; ++i) d.push_back(family.table.pair(segre.component(2 * n - 2 * i)));
  return d;
}

}  // namespace hkpos
