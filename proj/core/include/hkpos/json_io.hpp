#pragma once

#include <filesystem>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "hkpos/algebraic_real.hpp"
#include "hkpos/graded_series.hpp"
#include "hkpos/hk_family.hpp"
#include "hkpos/poly.hpp"
#include "hkpos/rational.hpp"

namespace hkpos::json {

using Json = nlohmann::ordered_json;

/// Rationals travel as strings ("-7/4") so big values survive every parser.
Json to_json(const Rational& r);
/// Also accepts JSON integers. Throws SchemaError.
Rational rational_from_json(const Json& j);

/// Ascending coefficient list.
Json to_json(const UniPoly& p);
UniPoly poly_from_json(const Json& j);

/// {"poly": [...], "interval": [lo, hi], "decimal": "..."}.
Json to_json(const AlgebraicReal& x, int significant = 6);
/// Reads poly and interval; the decimal is ignored. Throws SchemaError.
AlgebraicReal algebraic_from_json(const Json& j);

/// {"2": 2, "4": 1} for c2^2*c4.
Json to_json(const ChernMonomial& m);
ChernMonomial monomial_from_json(const Json& j);

/// {"truncation": N, "terms": [{"monomial": {...}, "coeff": "..."}]}.
Json to_json(const GradedSeries& s);
GradedSeries series_from_json(const Json& j);

/// {"name", "n", "pairings": [{"monomial", "omega_power", "constant"}]}.
Json family_to_json(const HKFamily& family);
/// Validates the document; every failure is a SchemaError naming the field.
HKFamily family_from_json(const Json& j);
HKFamily family_from_text(std::string_view text);
HKFamily family_from_file(const std::filesystem::path& path);

}  // namespace hkpos::json
