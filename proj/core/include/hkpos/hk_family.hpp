#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "hkpos/graded_series.hpp"
#include "hkpos/rational.hpp"

namespace hkpos {

/// Generalised Fujiki constants of a hyperkaehler deformation family of
/// complex dimension 2n.
///
/// An entry m -> d states that m * w^(2n - weight(m)) = d * q(w)^(n - weight(m)/2)
/// for every (1,1)-class w. The empty monomial carries the top power w^(2n) and
/// must have a positive constant.
class FujikiTable {
 public:
  /// Validates every invariant; throws SchemaError on violation.
  FujikiTable(int n, std::map<ChernMonomial, Rational> pairings);

  int n() const { return n_; }
  int dimension() const { return 2 * n_; }
  const std::map<ChernMonomial, Rational>& pairings() const { return pairings_; }

  std::optional<Rational> lookup(const ChernMonomial& m) const;
  /// Throws MissingPairing naming the monomial.
  Rational constant(const ChernMonomial& m) const;
  /// Exponent of w paired with m, i.e. 2n - weight(m).
  int omega_power(const ChernMonomial& m) const { return dimension() - m.weight(); }

  /// Sum of coefficient * constant over a homogeneous series; throws
  /// MissingPairing for the first monomial without a constant.
  Rational pair(const GradedSeries& homogeneous) const;

  friend bool operator==(const FujikiTable&, const FujikiTable&) = default;

 private:
  int n_;
  std::map<ChernMonomial, Rational> pairings_;
};

struct HKFamily {
  std::string name;
  FujikiTable table;
  /// Where each constant comes from, keyed like the table.
  std::map<ChernMonomial, std::string> provenance;

  friend bool operator==(const HKFamily& a, const HKFamily& b) { return a.name == b.name && a.table == b.table; }
};

enum class Preset { K3, K3_2, K3_3 };

std::vector<std::string> preset_names();
/// Case-insensitive lookup of "K3", "K3_2", "K3_3"; throws SchemaError otherwise.
Preset parse_preset(std::string_view name);
HKFamily preset(Preset which);
HKFamily preset(std::string_view name);

/// Chern numbers (c2^3, c2*c4, c6) of K3^[3], derived from the Euler
/// characteristic c6 = 3200, the Todd constant term (chi(O) = 4) and the
/// published Segre constant s6 = -10560 by an exact 2x2 solve.
struct HilbertCubeChernNumbers {
  Rational c2_cubed;
  Rational c2_c4;
  Rational c6;
};
HilbertCubeChernNumbers hilbert_cube_chern_numbers();

/// d_{2i} for i = 0..n with s_{2n-2i}(X) * w^(2i) = d_{2i} q(w)^i, where the
/// total Segre class is the series inverse of 1 + c2 + ... + c_{2n}.
std::vector<Rational> segre_pairings(const HKFamily& family);

}  // namespace hkpos
