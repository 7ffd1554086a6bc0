#include "hkpos/json_io.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "hkpos/error.hpp"

namespace hkpos::json {

namespace {

const Json& field(const Json& j, const char* key, const std::string& where) {
  if (!j.is_object()) throw SchemaError(where + ": expected an object");
  auto it = j.find(key);
  if (it == j.end()) throw SchemaError(where + ": missing field '" + key + "'");
  return *it;
}

long as_integer(const Json& j, const std::string& where) {
  if (!j.is_number_integer()) throw SchemaError(where + ": expected an integer");
  return j.get<long>();
}

}  // namespace

Json to_json(const Rational& r) { return r.to_string(); }

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(j.get<long>());
  if (!j.is_string()) throw SchemaError("expected a rational as a string, got " + j.dump());
  try {
    return Rational::parse(j.get<std::string>());
  } catch (const std::invalid_argument& e) {
    throw SchemaError("malformed rational " + j.dump());
  }
}

Json to_json(const UniPoly& p) {
  Json out = Json::array();
  for (const auto& c : p.coeffs()) out.push_back(to_json(c));
  return out;
}

UniPoly poly_from_json(const Json& j) {
  if (!j.is_array()) throw SchemaError("polynomial must be an array of coefficients");
  std::vector<Rational> coeffs;
  for (const auto& c : j) coeffs.push_back(rational_from_json(c));
  return UniPoly(std::move(coeffs));
}

Json to_json(const AlgebraicReal& x, int significant) {
  Json out;
  out["poly"] = to_json(x.defining());
  out["interval"] = Json::array({to_json(x.lower()), to_json(x.upper())});
  out["decimal"] = x.decimal(significant);
  return out;
}

AlgebraicReal algebraic_from_json(const Json& j) {
  const UniPoly p = poly_from_json(field(j, "poly", "algebraic number"));
  const Json& iv = field(j, "interval", "algebraic number");
  if (!iv.is_array() || iv.size() != 2) throw SchemaError("algebraic number: interval must be [lo, hi]");
  try {
    return AlgebraicReal::from_isolating(p, rational_from_json(iv[0]), rational_from_json(iv[1]));
  } catch (const DomainError& e) {
    throw SchemaError(std::string("algebraic number: ") + e.what());
  }
}

Json to_json(const ChernMonomial& m) {
  Json out = Json::object();
  for (const auto& [k, e] : m.exponents()) out[std::to_string(k)] = e;
  return out;
}

ChernMonomial monomial_from_json(const Json& j) {
  if (!j.is_object()) throw SchemaError("monomial must be an object like {\"2\": 1}, got " + j.dump());
  ChernMonomial m;
  for (const auto& [key, value] : j.items()) {
    int index = 0;
    const auto [ptr, ec] = std::from_chars(key.data(), key.data() + key.size(), index);
    if (ec != std::errc() || ptr != key.data() + key.size()) {
      throw SchemaError("monomial key '" + key + "' is not a Chern class index");
    }
    if (index <= 0 || index % 2 != 0) {
      throw SchemaError("monomial uses c" + key + "; only even Chern classes c2, c4, ... are allowed");
    }
    const long e = as_integer(value, "exponent of c" + key);
    if (e < 0) throw SchemaError("negative exponent for c" + key);
    m.multiply(index, static_cast<int>(e));
  }
  return m;
}

Json to_json(const GradedSeries& s) {
  Json out;
  out["truncation"] = s.truncation();
  Json terms = Json::array();
  for (const auto& [m, c] : s.terms()) terms.push_back(Json{{"monomial", to_json(m)}, {"coeff", to_json(c)}});
  out["terms"] = std::move(terms);
  return out;
}

GradedSeries series_from_json(const Json& j) {
  const long n = as_integer(field(j, "truncation", "series"), "series truncation");
  if (n < 0) throw SchemaError("series truncation must be nonnegative");
  GradedSeries s(static_cast<int>(n));
  const Json& terms = field(j, "terms", "series");
  if (!terms.is_array()) throw SchemaError("series terms must be an array");
  for (const auto& t : terms) {
    s.add_term(monomial_from_json(field(t, "monomial", "series term")), rational_from_json(field(t, "coeff", "series term")));
  }
  return s;
}

Json family_to_json(const HKFamily& family) {
  Json out;
  out["name"] = family.name;
  out["n"] = family.table.n();
  Json rows = Json::array();
  for (const auto& [m, d] : family.table.pairings()) {
    rows.push_back(Json{{"monomial", to_json(m)}, {"omega_power", family.table.omega_power(m)}, {"constant", to_json(d)}});
  }
  out["pairings"] = std::move(rows);
  return out;
}

HKFamily family_from_json(const Json& j) {
  const Json& name = field(j, "name", "family");
  if (!name.is_string()) throw SchemaError("family: 'name' must be a string");
  const long n = as_integer(field(j, "n", "family"), "family 'n'");
  if (n < 1) throw SchemaError("family: 'n' must be positive");
  const Json& rows = field(j, "pairings", "family");
  if (!rows.is_array()) throw SchemaError("family: 'pairings' must be an array");

  std::map<ChernMonomial, Rational> pairings;
  std::size_t i = 0;
  for (const auto& row : rows) {
    const std::string where = "pairings[" + std::to_string(i++) + "]";
    ChernMonomial m;
    try {
      m = monomial_from_json(field(row, "monomial", where));
    } catch (const SchemaError& e) {
      throw SchemaError(where + ": " + e.what());
    }
    const long power = as_integer(field(row, "omega_power", where), where + ".omega_power");
    if (power != 2 * n - m.weight()) {
      throw SchemaError(where + ": omega_power " + std::to_string(power) + " is inconsistent with monomial " +
                        m.to_string() + " (expected " + std::to_string(2 * n - m.weight()) + ")");
    }
    Rational d = rational_from_json(field(row, "constant", where));
    if (!pairings.emplace(m, std::move(d)).second) throw SchemaError(where + ": duplicate monomial " + m.to_string());
  }
  return HKFamily{name.get<std::string>(), FujikiTable(static_cast<int>(n), std::move(pairings)), {}};
}

HKFamily family_from_text(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw SchemaError(std::string("family document is not valid JSON: ") + e.what());
  }
  return family_from_json(j);
}

HKFamily family_from_file(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw SchemaError("cannot read family file " + path.string());
  std::stringstream buf;
  buf << in.rdbuf();
  return family_from_text(buf.str());
}

}  // namespace hkpos::json
