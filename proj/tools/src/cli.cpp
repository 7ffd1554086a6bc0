#include "hkpos/cli.hpp"

#include <functional>
#include <optional>
#include <sstream>
#include <stdexcept>

#include <CLI11.hpp>

#include "hkpos/error.hpp"
#include "hkpos/hilbert_square.hpp"
#include "hkpos/json_io.hpp"
#include "hkpos/rr_derivation.hpp"
#include "hkpos/threshold.hpp"

namespace hkpos::cli {

namespace {

using json::Json;
using json::to_json;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Format {
  bool json = false;
  int precision = 6;
};

Rational rational_arg(const std::string& text, const std::string& flag) {
  try {
    return Rational::parse(text);
  } catch (const std::invalid_argument&) {
    throw UsageError("invalid rational '" + text + "' for " + flag);
  }
}

HKFamily load_family(const std::string& selector) {
  if (!selector.empty() && selector.front() == '@') return json::family_from_file(selector.substr(1));
  return preset(selector);
}

std::vector<std::string> family_notes(const HKFamily& f) {
  if (f == preset(Preset::K3_3)) {
    return {"w^6 = 15 q(w)^3: the power of q is fixed by homogeneity",
            "c2^2 w^2 = 1848 q and c4 w^2 = 2424 q are the published constants; derive-k3-3 obtains 1200 and 480",
            "the real root of the published cubic is 5.953679..., equal to its published radical form; the published "
            "decimal 5.9538 is 1.2e-4 too large"};
  }
  return {};
}

Json header(const std::string& command) {
  Json j;
  j["schema"] = "1";
  j["command"] = command;
  return j;
}

std::string exact_or_decimal(const AlgebraicReal& x, const Format& fmt, std::string_view var) {
  if (auto r = x.rational_value()) return r->to_string();
  return x.decimal(fmt.precision) + " (root of " + x.defining().to_string(var) + " in [" + x.lower().to_string() +
         ", " + x.upper().to_string() + "])";
}

void emit(std::ostream& out, const Format& fmt, Json j, const std::string& text, const std::vector<std::string>& notes) {
  if (fmt.json) {
    j["notes"] = notes;
    out << j.dump(2) << "\n";
    return;
  }
  out << text;
  if (!notes.empty()) {
    out << "notes:\n";
    for (const auto& n : notes) out << "  - " << n << "\n";
  }
}

void describe_family(std::ostringstream& text, Json& j, const HKFamily& f) {
  text << "family: " << f.name << " (n = " << f.table.n() << ")\n";
  j["family"] = f.name;
  j["n"] = f.table.n();
}

Json c_json(const std::optional<AlgebraicReal>& C, const Format& fmt) {
  return C ? to_json(*C, fmt.precision) : Json(nullptr);
}

void cmd_threshold(std::ostream& out, const Format& fmt, const std::string& family) {
  const HKFamily f = load_family(family);
  const ThresholdResult r = compute_threshold(f);
  Json j = header("threshold");
  std::ostringstream text;
  describe_family(text, j, f);
  text << "p_X(t) = " << r.poly.to_string() << "\n";
  if (r.C) {
    text << "C = " << exact_or_decimal(*r.C, fmt, "t") << "\n";
  } else {
    text << "C: none (p_X has no real root)\n";
  }
  j["poly"] = to_json(r.poly);
  j["C"] = c_json(r.C, fmt);
  emit(out, fmt, std::move(j), text.str(), family_notes(f));
}

void cmd_poly(std::ostream& out, const Format& fmt, const std::string& coeffs, const std::optional<std::string>& eps_text) {
  std::vector<Rational> c;
  std::stringstream in(coeffs);
  std::string token;
  while (std::getline(in, token, ',')) {
    const auto b = token.find_first_not_of(" \t");
    const auto e = token.find_last_not_of(" \t");
    c.push_back(rational_arg(b == std::string::npos ? "" : token.substr(b, e - b + 1), "--coeffs"));
  }
  if (c.empty()) throw UsageError("--coeffs needs at least one coefficient");
  std::optional<Rational> eps;
  if (eps_text) {
    eps = rational_arg(*eps_text, "--eps");
    if (eps->sign() <= 0) throw UsageError("--eps must be positive, got '" + *eps_text + "'");
  }

  const UniPoly p(std::move(c));
  const auto roots = isolate_real_roots(p);
  Json j = header("poly");
  std::ostringstream text;
  text << "p(t) = " << p.to_string() << "\n";
  text << "real roots: " << roots.size() << "\n";
  j["poly"] = to_json(p);
  Json rs = Json::array();
  for (const auto& r : roots) {
    text << "  " << exact_or_decimal(r, fmt, "t") << "\n";
    Json rj = to_json(r, fmt.precision);
    if (eps) {
      const Interval iv = r.refine_to(*eps);
      text << "    refined to [" << iv.lo.to_string() << ", " << iv.hi.to_string() << "]\n";
      rj["refined"] = Json::array({to_json(iv.lo), to_json(iv.hi)});
    }
    rs.push_back(std::move(rj));
  }
  j["roots"] = std::move(rs);
  emit(out, fmt, std::move(j), text.str(), {});
}

void cmd_gamma_p(std::ostream& out, const Format& fmt, const std::string& family, const std::string& q_text) {
  const Rational q = rational_arg(q_text, "--q");
  const HKFamily f = load_family(family);
  const ThresholdResult r = compute_threshold(f);
  const AlgebraicReal g = gamma_p(r, q);
  Json j = header("gamma-p");
  std::ostringstream text;
  describe_family(text, j, f);
  text << "q = " << q.to_string() << "\n";
  text << "C = " << (r.C ? exact_or_decimal(*r.C, fmt, "t") : std::string("none")) << "\n";
  text << "gamma_p = " << exact_or_decimal(g, fmt, "x") << "\n";
  j["q"] = to_json(q);
  j["C"] = c_json(r.C, fmt);
  j["gamma_p"] = to_json(g, fmt.precision);
  emit(out, fmt, std::move(j), text.str(), family_notes(f));
}

void cmd_cone_test(std::ostream& out, const Format& fmt, const std::string& family, const std::string& a_text,
                   const std::string& qd_text, bool not_nef) {
  const Rational a = rational_arg(a_text, "--a");
  const Rational qd = rational_arg(qd_text, "--q-delta");
  const HKFamily f = load_family(family);
  const ThresholdResult r = compute_threshold(f);
  const bool member = pseff_cone_member(r, a, qd, !not_nef);
  Json j = header("cone-test");
  std::ostringstream text;
  describe_family(text, j, f);
  text << "a = " << a.to_string() << ", q(delta) = " << qd.to_string() << ", delta nef: " << (not_nef ? "no" : "yes")
       << "\n";
  text << "C = " << (r.C ? exact_or_decimal(*r.C, fmt, "t") : std::string("none")) << "\n";
  text << "pseudoeffective: " << (member ? "yes" : "no") << "\n";
  j["a"] = to_json(a);
  j["q_delta"] = to_json(qd);
  j["delta_is_nef"] = !not_nef;
  j["C"] = c_json(r.C, fmt);
  j["member"] = member;
  emit(out, fmt, std::move(j), text.str(), family_notes(f));
}

Json row_json(const square::TableRow& row) {
  return Json{{"label", row.label}, {"value", to_json(row.value)}, {"derivation", row.derivation}};
}

void cmd_square_table(std::ostream& out, const Format& fmt) {
  const auto stored = square::stored_table();
  const auto& chern = square::square_chern_table();
  const auto derived = square::derived_rows();
  Json j = header("square table");
  j["variable"] = "a";
  std::ostringstream text;
  text << "degrees on X = S^[2], a = alpha_S^2:\n";
  Json sj = Json::array();
  for (const auto& row : stored) {
    text << "  " << row.label << " = " << row.value.to_string("a");
    if (row.derivation != "stored") text << "    [" << row.derivation << "]";
    text << "\n";
    sj.push_back(row_json(row));
  }
  j["stored"] = std::move(sj);

  text << "Chern data of X:\n";
  text << "  s2 = " << chern.s2.to_string() << "\n";
  text << "  s2^2 = " << chern.s2_squared.to_string() << "\n";
  text << "  c4(eta^* Omega_X) = " << chern.c4_double_cover.to_string() << "\n";
  text << "  c4 = " << chern.c4.to_string() << "\n";
  text << "  s4 = " << chern.s4.to_string() << "\n";
  j["chern"] = Json{{"s2", chern.s2.to_string()},
                    {"s2_squared", to_json(chern.s2_squared)},
                    {"c4_double_cover", to_json(chern.c4_double_cover)},
                    {"c4", to_json(chern.c4)},
                    {"s4", to_json(chern.s4)}};

  text << "top intersections on P(Omega_X):\n";
  Json dj = Json::array();
  for (const auto& row : derived) {
    text << "  " << row.label << " = " << row.value.to_string("a") << "    [" << row.derivation << "]\n";
    dj.push_back(row_json(row));
  }
  j["derived"] = std::move(dj);
  emit(out, fmt, std::move(j), text.str(), {});
}

void cmd_square_z(std::ostream& out, const Format& fmt, const std::optional<std::string>& a_text) {
  const UniPoly p = square::z_pairing();
  const AlgebraicReal root = square::z_pairing_threshold();
  Json j = header("square z-pairing");
  j["variable"] = "a";
  std::ostringstream text;
  text << "(zeta + pi^*(alpha - delta))^5 . [Z] = " << p.to_string("a") << "\n";
  text << "largest root: " << exact_or_decimal(root, fmt, "a") << "\n";
  j["polynomial"] = to_json(p);
  j["largest_root"] = to_json(root, fmt.precision);
  if (a_text) {
    const Rational a = rational_arg(*a_text, "--alpha-sq");
    const Rational v = p.eval(a);
    text << "value at a = " << a.to_string() << ": " << v.to_string() << "\n";
    j["alpha_sq"] = to_json(a);
    j["value"] = to_json(v);
  }
  emit(out, fmt, std::move(j), text.str(), square::z_pairing_notes());
}

void cmd_square_kahler(std::ostream& out, const Format& fmt, const std::string& a_text) {
  const Rational a = rational_arg(a_text, "--alpha-sq");
  const auto polys = square::kahler_polys();
  const auto crit = square::kahler_criterion(a);
  Json j = header("square kahler");
  j["variable"] = "a";
  j["alpha_sq"] = to_json(a);
  std::ostringstream text;
  Json rows = Json::array();
  const auto line = [&](const char* label, const UniPoly& p, const Rational& v) {
    text << label << " = " << p.to_string("a") << " = " << v.to_string() << "\n";
    rows.push_back(Json{{"label", label}, {"polynomial", to_json(p)}, {"value", to_json(v)}});
  };
  text << "a = " << a.to_string() << "\n";
  line("(alpha - delta)^4", polys.top, crit.values.top);
  line("(alpha - delta)^3 . E_X", polys.divisor, crit.values.divisor);
  line("(alpha - delta)^2 . Sbar", polys.surface, crit.values.surface);
  line("(alpha - delta) . l", polys.curve, crit.values.curve);
  text << "all positive: " << (crit.all_positive ? "yes" : "no") << "\n";
  j["values"] = std::move(rows);
  j["all_positive"] = crit.all_positive;
  emit(out, fmt, std::move(j), text.str(), {});
}

std::string constant_label(const ChernMonomial& m) {
  const int power = 6 - m.weight();
  std::string lhs = m.is_one() ? "" : m.to_string() + " ";
  lhs += "L^" + std::to_string(power);
  return lhs;
}

std::string q_power(int k) { return k == 1 ? "q" : "q^" + std::to_string(k); }

void cmd_derive(std::ostream& out, const Format& fmt) {
  const DerivedConstants d = derive_constants();
  Json j = header("derive-k3-3");
  std::ostringstream text;

  text << "integral of e^L Td(X):\n";
  for (const auto& l : d.rr.lhs.lines()) text << "  " << l << "\n";
  text << "chi(L) = binom(chi_S + 2, 3), chi_S = q/2 + 2:\n";
  for (const auto& l : d.rr.rhs.lines()) text << "  " << l << "\n";
  text << "Todd constant on (c2^3, c2 c4, c6): " << d.rr.todd_constant.to_string() << "\n";
  text << "equation 1: " << d.rr.equation1.to_string() << "\n";
  text << "sqrt(Td) = " << d.nieper.sqrt_todd.to_string() << "\n";
  text << "integral of e^L sqrt(Td):\n";
  for (const auto& l : d.nieper.lhs.lines()) text << "  " << l << "\n";
  text << "lambda(L) = " << d.nieper.lambda_coefficient.to_string() << " q\n";
  text << "integral of sqrt(Td) = " << d.nieper.sqrt_todd_integral.to_string() << "\n";
  text << "(1 + lambda)^3 integral sqrt(Td) = " << d.nieper.rhs.to_string("q") << "\n";
  text << "equation 2: " << d.nieper.equation2.to_string() << "\n";
  text << "constants:\n";
  Json cj = Json::array();
  for (const auto& [m, v] : d.constants) {
    const int k = (6 - m.weight()) / 2;
    text << "  " << constant_label(m) << " = " << v.to_string() << " " << q_power(k) << "\n";
    cj.push_back(Json{{"monomial", to_json(m)}, {"omega_power", 6 - m.weight()}, {"constant", to_json(v)}});
  }
  text << "matches preset K3_3: " << (d.matches_preset ? "yes" : "no") << "\n";
  text << "p_X(t) with these constants = " << d.threshold_poly.to_string() << "\n";
  text << "C = " << (d.C ? exact_or_decimal(*d.C, fmt, "t") : std::string("none")) << "\n";

  const auto lines_json = [](const QPolynomial& p) {
    Json a = Json::array();
    for (const auto& c : p.coefficients()) a.push_back(to_json(c));
    return a;
  };
  const auto eq_json = [](const LinearEquation& e) {
    Json terms = Json::array();
    for (const auto& [m, c] : e.coefficients) terms.push_back(Json{{"monomial", to_json(m)}, {"coeff", to_json(c)}});
    return Json{{"terms", terms}, {"rhs", to_json(e.rhs)}, {"text", e.to_string()}};
  };
  j["rr_lhs"] = lines_json(d.rr.lhs);
  j["rr_rhs"] = to_json(d.rr.rhs.values());
  j["todd_constant"] = to_json(d.rr.todd_constant);
  j["equation1"] = eq_json(d.rr.equation1);
  j["sqrt_todd"] = to_json(d.nieper.sqrt_todd);
  j["nieper_lhs"] = lines_json(d.nieper.lhs);
  j["lambda_coefficient"] = to_json(d.nieper.lambda_coefficient);
  j["sqrt_todd_integral"] = to_json(d.nieper.sqrt_todd_integral);
  j["equation2"] = eq_json(d.nieper.equation2);
  j["constants"] = std::move(cj);
  j["matches_preset"] = d.matches_preset;
  j["threshold_poly"] = to_json(d.threshold_poly);
  j["C"] = c_json(d.C, fmt);
  emit(out, fmt, std::move(j), text.str(), d.notes);
}

void add_format(CLI::App* cmd, Format& fmt) {
  cmd->add_flag("--json", fmt.json, "Print JSON instead of text");
  cmd->add_option("--precision", fmt.precision, "Significant digits of decimal output")->check(CLI::Range(1, 60));
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact positivity thresholds for twisted cotangent bundles of hyperkaehler manifolds", "hkpos"};
  app.require_subcommand(1);
  Format fmt;
  std::function<void()> action;

  std::string family;
  std::string q, a, q_delta, alpha_sq, coeffs;
  std::optional<std::string> eps, alpha_sq_opt;
  bool not_nef = false;

  auto* threshold = app.add_subcommand("threshold", "Threshold polynomial p_X and its largest root C");
  threshold->add_option("--family", family, "Preset (K3, K3_2, K3_3) or @path to a family JSON file")->required();
  add_format(threshold, fmt);
  threshold->callback([&] { action = [&] { cmd_threshold(out, fmt, family); }; });

  auto* poly = app.add_subcommand("poly", "Real roots of a rational polynomial");
  poly->add_option("--coeffs", coeffs, "Comma-separated coefficients, constant term first")->required();
  poly->add_option("--eps", eps, "Refine isolating intervals to this width");
  add_format(poly, fmt);
  poly->callback([&] { action = [&] { cmd_poly(out, fmt, coeffs, eps); }; });

  auto* gp = app.add_subcommand("gamma-p", "Positivity threshold for a class with the given q");
  gp->add_option("--family", family, "Preset or @file")->required();
  gp->add_option("--q", q, "q(w), a positive rational")->required();
  add_format(gp, fmt);
  gp->callback([&] { action = [&] { cmd_gamma_p(out, fmt, family, q); }; });

  auto* cone = app.add_subcommand("cone-test", "Is a zeta + pi^* delta pseudoeffective?");
  cone->add_option("--family", family, "Preset or @file")->required();
  cone->add_option("--a", a, "Coefficient of zeta")->required();
  cone->add_option("--q-delta", q_delta, "q(delta)")->required();
  cone->add_flag("--not-nef", not_nef, "delta is not nef");
  add_format(cone, fmt);
  cone->callback([&] { action = [&] { cmd_cone_test(out, fmt, family, a, q_delta, not_nef); }; });

  auto* square = app.add_subcommand("square", "Intersection numbers on the Hilbert square of a K3 surface");
  square->require_subcommand(1);
  auto* table = square->add_subcommand("table", "Stored and derived intersection tables");
  add_format(table, fmt);
  table->callback([&] { action = [&] { cmd_square_table(out, fmt); }; });
  auto* zp = square->add_subcommand("z-pairing", "(zeta + pi^*(alpha - delta))^5 . [Z]");
  zp->add_option("--alpha-sq", alpha_sq_opt, "Evaluate at a = alpha_S^2");
  add_format(zp, fmt);
  zp->callback([&] { action = [&] { cmd_square_z(out, fmt, alpha_sq_opt); }; });
  auto* kahler = square->add_subcommand("kahler", "Kaehler test for alpha - delta");
  kahler->add_option("--alpha-sq", alpha_sq, "a = alpha_S^2")->required();
  add_format(kahler, fmt);
  kahler->callback([&] { action = [&] { cmd_square_kahler(out, fmt, alpha_sq); }; });

  auto* derive = app.add_subcommand("derive-k3-3", "Derive the K3^[3] pairing constants");
  add_format(derive, fmt);
  derive->callback([&] { action = [&] { cmd_derive(out, fmt); }; });

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsageError;
  }

  try {
    if (action) action();
    return kOk;
  } catch (const UsageError& e) {
    err << "hkpos: " << e.what() << "\n";
    return kUsageError;
  } catch (const Error& e) {
    err << "hkpos: " << e.what() << "\n";
    return kDomainError;
  }
}

}  // namespace hkpos::cli
