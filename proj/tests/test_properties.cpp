#include <doctest.h>

#include "properties.hpp"

using namespace hkpos::testing;

namespace {
void report(const std::vector<std::string>& failures) {
  for (const auto& f : failures) MESSAGE(f);
  CHECK(failures.empty());
}
}  // namespace

TEST_CASE("series inverse and square root round trips") { report(series_roundtrips(150)); }

TEST_CASE("products of linear factors give back their roots") { report(rational_root_recovery(150)); }

TEST_CASE("gamma_p squared times q is C") { report(gamma_identity(120)); }

TEST_CASE("cone membership is homogeneous") { report(cone_homogeneity(300)); }
