#include "minshadow/cli.hpp"

#include <CLI11.hpp>

#include <sstream>
#include <string>
#include <vector>

#include "minshadow/gf2.hpp"
#include "minshadow/gleason.hpp"
#include "minshadow/report.hpp"
#include "minshadow/solver.hpp"
#include "minshadow/theorems.hpp"

namespace minshadow {

namespace {

constexpr const char* kShadowTheorem = "shadow theorem (Conway & Sloane 1990)";
constexpr const char* kRains = "extremal distance bound and alpha/beta coefficients (Rains 1998)";
constexpr const char* kZhang = "extremal doubly-even length bound (Zhang 1999)";
constexpr const char* kYorgov = "minimal-shadow criterion for 24m+8 (Yorgov 1999)";
constexpr const char* kMinimalShadow = "minimal-shadow constraint system";

struct Emitted {
  Report report;
  std::string text;
  std::string csv;
};

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

Json param_json(const ParamSet& p) {
  return {{"n", p.n}, {"m", p.m}, {"l", p.l}, {"r", p.r}, {"t", p.t}, {"d", p.d}};
}

std::string param_line(const ParamSet& p) {
  std::ostringstream out;
  out << "n = " << p.n << " (m = " << p.m << ", l = " << p.l << ", r = " << p.r << ", t = " << p.t
      << "), d = " << p.d << ", unknowns c_0..c_" << p.k();
  return out.str();
}

ParamSet length_or_usage(int n) {
  try {
    return ParamSet::from_length(n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

Json vector_json(const std::vector<Rational>& v) {
  Json out = Json::array();
  for (const auto& x : v) {
    out.push_back(exact(x));
  }
  return out;
}

Json screen_json(const ScreenReport& s) {
  Json out = Json::array();
  for (const auto& c : s.checks) {
    Json item = {{"name", c.name}, {"passed", c.passed}, {"detail", c.detail}};
    if (c.weight) {
      item["weight"] = *c.weight;
    }
    out.push_back(std::move(item));
  }
  return out;
}

void append_screen_text(std::ostringstream& text, const ScreenReport& s) {
  text << "screen: " << (s.passed() ? "pass" : "FAIL") << "\n";
  for (const auto& c : s.checks) {
    text << "  " << (c.passed ? "pass " : "FAIL ") << c.name;
    if (!c.passed) {
      text << ": " << c.detail;
    }
    text << "\n";
  }
}

void append_enumerator_csv(std::ostringstream& csv, const std::string& label, const WeightEnumerator& e) {
  for (int w = 0; w <= e.n; ++w) {
    if (e.at(w) != 0) {
      csv << label << "," << w << "," << to_string(e.at(w)) << "\n";
    }
  }
}

Emitted cmd_enumerate(int n) {
  const ParamSet p = length_or_usage(n);
  Emitted em{Report("enumerate"), "", ""};
  em.report.parameters() = {{"n", n}};
  em.report.values()["params"] = param_json(p);

  const ConstraintSystem sys = build_constraints(p);
  const SolveOutcome outcome = solve(sys);
  const std::string name = outcome_name(outcome);
  em.report.values()["outcome"] = name;
  Json tags = Json::array();
  for (const auto& row : sys.rows) {
    tags.push_back(row.tag + " = " + to_string(row.rhs));
  }
  em.report.values()["constraints"] = std::move(tags);

  std::ostringstream text;
  std::ostringstream csv;
  csv << "kind,weight,coefficient\n";
  text << param_line(p) << "\n";
  text << "constraints: " << sys.rows.size() << " rows\n";
  text << "outcome: " << name << "\n";

  if (const auto expected = expected_outcome(p)) {
    em.report.add_verdict({"classification", name == *expected, kMinimalShadow,
                           "expected " + *expected + ", got " + name});
  }

  if (const auto* bad = std::get_if<Inconsistent>(&outcome)) {
    Json cert = Json::object();
    text << "certificate: sum of lambda * row leaves 0 = " << to_string(bad->residual) << "\n";
    for (const auto& [tag, lambda] : bad->certificate) {
      cert[tag] = exact(lambda);
      text << "  " << tag << ": " << to_string(lambda) << "\n";
    }
    em.report.values()["certificate"] = std::move(cert);
    em.report.values()["residual"] = exact(bad->residual);
  } else if (const auto* u = std::get_if<Unique>(&outcome)) {
    const Enumerators e = enumerators_from_c(p, u->c);
    const ScreenReport s = screen(p, e.w, e.s);
    em.report.values()["c"] = vector_json(u->c);
    em.report.values()["W"] = enumerator_json(e.w);
    em.report.values()["S"] = enumerator_json(e.s);
    em.report.values()["screen"] = screen_json(s);
    text << "W(y) = " << format_polynomial(e.w) << "\n";
    text << "S(y) = " << format_polynomial(e.s) << "\n";
    append_screen_text(text, s);
    append_enumerator_csv(csv, "W", e.w);
    append_enumerator_csv(csv, "S", e.s);
    if (p.m >= 1) {
      bool expect_pass = false;
      std::string why;
      if (p.t == 4 || p.t == 6 || p.t == 7 || p.t == 9) {
        expect_pass = p.m < stored_threshold(p.t);
        why = expect_pass ? "below the length bound" : "at or above the length bound";
      } else if (p.t == 11) {
        why = "d = 4m+6 excludes a weight-3 shadow vector";
      }
      const bool ok = expect_pass ? s.shadow_theorem_passed() : !s.passed();
      em.report.add_verdict({"screen", ok, kShadowTheorem,
                             std::string(expect_pass ? "shadow bullets expected to hold" : "expected failure") + " (" +
                                 why + ")"});
    }
  } else {
    const auto& fam = std::get<Family>(outcome);
    const Enumerators base = enumerators_from_c(p, fam.particular);
    em.report.values()["dimension"] = fam.dimension;
    em.report.values()["particular_c"] = vector_json(fam.particular);
    em.report.values()["W_particular"] = enumerator_json(base.w);
    em.report.values()["S_particular"] = enumerator_json(base.s);
    Json dirs = Json::array();
    text << "W(y) = " << format_polynomial(base.w) << "\n";
    text << "S(y) = " << format_polynomial(base.s) << "\n";
    append_enumerator_csv(csv, "W", base.w);
    append_enumerator_csv(csv, "S", base.s);
    for (std::size_t f = 0; f < fam.basis.size(); ++f) {
      const Enumerators dir = enumerators_from_c(p, fam.basis[f]);
      const std::string label = "x" + std::to_string(f + 1);
      dirs.push_back({{"c", vector_json(fam.basis[f])}, {"W", enumerator_json(dir.w)}, {"S", enumerator_json(dir.s)}});
      text << "  + " << label << " * [W: " << format_polynomial(dir.w) << "]\n";
      text << "  + " << label << " * [S: " << format_polynomial(dir.s) << "]\n";
      append_enumerator_csv(csv, "W_" + label, dir.w);
      append_enumerator_csv(csv, "S_" + label, dir.s);
    }
    em.report.values()["directions"] = std::move(dirs);
  }
  em.text = text.str();
  em.csv = csv.str();
  return em;
}

Emitted cmd_classify(int m_max) {
  if (m_max < 0) {
    throw UsageError("--m-max must be nonnegative");
  }
  Emitted em{Report("classify"), "", ""};
  em.report.parameters() = {{"m_max", m_max}};
  std::ostringstream text;
  std::ostringstream csv;
  text << "    n   m   t  outcome       feasible  minimal  expected\n";
  csv << "n,m,t,outcome,feasible,minimal_shadow,expected\n";
  Json grid = Json::array();
  bool all_match = true;
  for (int m = 0; m <= m_max; ++m) {
    for (int t = 0; t <= 11; ++t) {
      if (m == 0 && t == 0) {
        continue;
      }
      const Classification c = classify_length(24 * m + 2 * t);
      const auto expected = expected_outcome(c.params);
      const auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; };
      if (expected && *expected != c.outcome) {
        all_match = false;
      }
      char line[160];
      std::snprintf(line, sizeof line, "%5d %3d %3d  %-13s %-9s %-8s %s\n", c.params.n, m, t, c.outcome.c_str(),
                    tri(c.feasible), tri(c.minimal_shadow), expected ? expected->c_str() : "-");
      text << line;
      csv << c.params.n << "," << m << "," << t << "," << c.outcome << "," << tri(c.feasible) << ","
          << tri(c.minimal_shadow) << "," << (expected ? *expected : "-") << "\n";
      Json cell = {{"n", c.params.n}, {"m", m}, {"t", t}, {"outcome", c.outcome}};
      if (c.feasible) {
        cell["feasible"] = *c.feasible;
      }
      if (c.minimal_shadow) {
        cell["minimal_shadow"] = *c.minimal_shadow;
      }
      if (c.violation) {
        cell["first_violation"] = c.violation->detail;
      }
      grid.push_back(std::move(cell));
    }
  }
  em.report.values()["grid"] = std::move(grid);
  em.report.add_verdict({"classification", all_match, kMinimalShadow, "every m >= 1 cell matches its residue class"});
  em.text = text.str();
  em.csv = csv.str();
  return em;
}

Emitted cmd_nonexistence(int t, int m_max) {
  if (t != 1 && t != 2 && t != 3 && t != 5) {
    throw UsageError("--t must be one of 1, 2, 3, 5");
  }
  if (m_max < 1) {
    throw UsageError("--m-max must be at least 1");
  }
  const NonexistenceReport rep = check_nonexistence(t, m_max);
  const NonexistencePolynomial np = nonexistence_polynomial(t);
  Emitted em{Report("nonexistence"), "", ""};
  em.report.parameters() = {{"t", t}, {"m_max", m_max}};
  em.report.values()["polynomial"] = np.poly.to_string();
  std::ostringstream text;
  std::ostringstream csv;
  text << "n = 24m+" << 2 * t << ": alpha_{2m+1,0} = beta_{2m+1,0} reduces to " << np.poly.to_string() << " = 0\n";
  text << "   m  P(m)            identity  solver\n";
  csv << "m,residual,reduced,identity,solver_inconsistent\n";
  Json rows = Json::array();
  for (const auto& row : rep.rows) {
    const auto tri = [](const std::optional<bool>& b) { return b ? (*b ? "yes" : "no") : "-"; };
    char line[160];
    std::snprintf(line, sizeof line, "%4d  %-15s %-9s %s\n", row.m, to_string(row.residual).c_str(),
                  tri(row.identity_holds), row.solver_inconsistent ? (*row.solver_inconsistent ? "inconsistent" : "CONSISTENT") : "-");
    text << line;
    csv << row.m << "," << to_string(row.residual) << "," << (row.reduced ? to_string(*row.reduced) : "") << ","
        << tri(row.identity_holds) << "," << tri(row.solver_inconsistent) << "\n";
    Json item = {{"m", row.m}, {"residual", to_string(row.residual)}};
    if (row.reduced) {
      item["reduced"] = exact(*row.reduced);
    }
    if (row.identity_holds) {
      item["identity"] = *row.identity_holds;
    }
    if (row.solver_inconsistent) {
      item["solver_inconsistent"] = *row.solver_inconsistent;
    }
    rows.push_back(std::move(item));
  }
  em.report.values()["rows"] = std::move(rows);
  em.report.add_verdict({"nonexistence", rep.ok(), kRains,
                         "no root, identity exact and solver inconsistent for every m <= " + std::to_string(m_max)});
  text << (rep.ok() ? "verified" : "NOT verified") << "\n";
  em.text = text.str();
  em.csv = csv.str();
  return em;
}

Emitted cmd_thresholds(int t, int m_max, int solver_m_max) {
  if (t != 4 && t != 6 && t != 7 && t != 9) {
    throw UsageError("--t must be one of 4, 6, 7, 9");
  }
  if (m_max < 1) {
    throw UsageError("--m-max must be at least 1");
  }
  const ThresholdRecord rec = threshold_scan(t, m_max, solver_m_max < 0 ? m_max : solver_m_max);
  Emitted em{Report("thresholds"), "", ""};
  em.report.parameters() = {{"t", t}, {"m_max", m_max}, {"solver_m_max", rec.solver_scanned_to}};
  const auto opt = [](const std::optional<int>& v) { return v ? Json(*v) : Json(nullptr); };
  em.report.values()["coefficient"] = to_string(rec.which);
  em.report.values()["polynomial"] = rec.poly.to_string();
  em.report.values()["stored_threshold"] = rec.stored;
  em.report.values()["polynomial_threshold"] = opt(rec.polynomial_threshold);
  em.report.values()["solver_threshold"] = opt(rec.solver_threshold);
  em.report.values()["closed_form_matches_solver"] = rec.closed_form_matches_solver;
  Json at = Json::object();
  for (const auto& [m, b] : rec.solver_values) {
    at[std::to_string(m)] = exact(b);
  }
  em.report.values()["solver_values"] = std::move(at);

  std::ostringstream text;
  std::ostringstream csv;
  text << "n = 24m+" << 2 * t << ": " << to_string(rec.which) << " carries the factor " << rec.poly.to_string() << "\n";
  text << "first negative m (polynomial): " << (rec.polynomial_threshold ? std::to_string(*rec.polynomial_threshold) : "none") << "\n";
  text << "first negative m (solver, m <= " << rec.solver_scanned_to << "): "
       << (rec.solver_threshold ? std::to_string(*rec.solver_threshold) : "none") << "\n";
  text << "closed form equals solver at every scanned m: " << (rec.closed_form_matches_solver ? "yes" : "NO") << "\n";
  for (const auto& [m, b] : rec.solver_values) {
    text << "  m = " << m << ": " << to_string(rec.which) << " = " << to_string(b) << "\n";
  }
  text << "m* = " << (rec.polynomial_threshold ? std::to_string(*rec.polynomial_threshold) : "?") << " (published "
       << rec.stored << ")\n";
  csv << "t,coefficient,stored,polynomial_threshold,solver_threshold,solver_scanned_to,agree\n";
  csv << t << "," << to_string(rec.which) << "," << rec.stored << ","
      << (rec.polynomial_threshold ? std::to_string(*rec.polynomial_threshold) : "") << ","
      << (rec.solver_threshold ? std::to_string(*rec.solver_threshold) : "") << "," << rec.solver_scanned_to << ","
      << (rec.ok() ? "yes" : "no") << "\n";
  em.report.add_verdict({"threshold", rec.ok(), kShadowTheorem,
                         "m* = " + std::to_string(rec.stored) + " from polynomial and solver"});
  if (t == 4) {
    Json excluded = Json::array();
    text << "Yorgov exclusions below m*: ";
    for (int m = 1; m < rec.stored; ++m) {
      if (yorgov_excludes(m)) {
        excluded.push_back(m);
        text << m << " ";
      }
    }
    text << "\n";
    em.report.values()["yorgov_excluded"] = std::move(excluded);
    em.report.add_verdict({"yorgov_annotation", true, kYorgov, "annotation only"});
  }
  em.text = text.str();
  em.csv = csv.str();
  return em;
}

Emitted cmd_summary(int m_max, int solver_m_max) {
  if (m_max < 1) {
    throw UsageError("--m-max must be at least 1");
  }
  const auto rows = summary(m_max, solver_m_max);
  Emitted em{Report("summary"), "", ""};
  em.report.parameters() = {{"m_max", m_max}, {"solver_m_max", solver_m_max}};
  Json out = Json::array();
  std::ostringstream csv;
  csv << "residue,t,verdict,checked,detail\n";
  bool all = true;
  for (const auto& row : rows) {
    out.push_back({{"residue", row.residue}, {"t", row.t}, {"verdict", row.verdict}, {"detail", row.detail},
                   {"checked", row.verified}});
    csv << row.residue << "," << row.t << "," << row.verdict << "," << (row.verified ? "yes" : "no") << ",\""
        << row.detail << "\"\n";
    all = all && row.verified;
  }
  em.report.values()["rows"] = std::move(out);
  em.report.add_verdict({"summary", all, kZhang, "every residue class verdict re-derived"});
  em.text = format_summary(rows);
  em.csv = csv.str();
  return em;
}

BinaryCode load_or_usage(const std::string& path) {
  try {
    return load_code(path);
  } catch (const CodeFormatError& e) {
    throw UsageError(e.what());
  }
}

Emitted cmd_code_check(const std::string& path) {
  const BinaryCode code = load_or_usage(path);
  const CodeChecks c = checks(code);
  Emitted em{Report("code-check"), "", ""};
  em.report.parameters() = {{"matrix", path}};
  Json v = {{"n", code.n},
            {"k", code.k},
            {"self_dual", c.self_dual},
            {"doubly_even", c.doubly_even},
            {"singly_even", c.singly_even},
            {"min_distance", c.min_distance},
            {"extremal_bound", c.extremal_bound},
            {"extremal", c.extremal}};
  std::ostringstream text;
  std::ostringstream csv;
  text << "[" << code.n << ", " << code.k << ", " << c.min_distance << "] code\n";
  text << "self-dual: " << (c.self_dual ? "yes" : "no") << "\n";
  text << "doubly-even: " << (c.doubly_even ? "yes" : "no") << "\n";
  text << "singly-even: " << (c.singly_even ? "yes" : "no") << "\n";
  text << "extremal (d = " << c.extremal_bound << "): " << (c.extremal ? "yes" : "no") << "\n";
  const WeightEnumerator w = weight_enumerator(code);
  v["W"] = enumerator_json(w);
  text << "W(y) = " << format_polynomial(w) << "\n";
  csv << "kind,weight,coefficient\n";
  append_enumerator_csv(csv, "W", w);
  if (c.singly_even) {
    const ShadowDecomposition sd = shadow_decompose(code);
    v["shadow_min_weight"] = *c.shadow_min_weight;
    v["minimal_shadow"] = *c.minimal_shadow;
    v["S"] = enumerator_json(sd.shadow);
    v["c1_rep"] = format_word(sd.c1_rep, code.n);
    v["c2_rep"] = format_word(sd.c2_rep, code.n);
    v["c3_rep"] = format_word(sd.c3_rep, code.n);
    Json gens = Json::array();
    for (Word g : sd.c0_generators) {
      gens.push_back(format_word(g, code.n));
    }
    v["c0_generators"] = std::move(gens);
    text << "S(y) = " << format_polynomial(sd.shadow) << "\n";
    text << "shadow minimum weight: " << *c.shadow_min_weight << " (minimal shadow: "
         << (*c.minimal_shadow ? "yes" : "no") << ")\n";
    text << "C1 representative: " << format_word(sd.c1_rep, code.n) << "\n";
    text << "C2 representative: " << format_word(sd.c2_rep, code.n) << "\n";
    text << "C3 representative: " << format_word(sd.c3_rep, code.n) << "\n";
    append_enumerator_csv(csv, "S", sd.shadow);

    // d/2 bounds use the code's own minimum distance
    ParamSet own = ParamSet::from_length(code.n);
    own.d = c.min_distance;
    const ScreenReport own_screen = screen(own, w, sd.shadow);
    v["screen"] = screen_json(own_screen);
    append_screen_text(text, own_screen);
    em.report.add_verdict({"shadow_theorem", own_screen.shadow_theorem_passed(), kShadowTheorem,
                           "enumerated shadow obeys every bullet"});
  }
  em.report.values() = std::move(v);
  em.text = text.str();
  em.csv = csv.str();
  return em;
}

Emitted cmd_cross_validate(const std::string& path) {
  const BinaryCode code = load_or_usage(path);
  Emitted em{Report("cross-validate"), "", ""};
  em.report.parameters() = {{"matrix", path}};
  CrossValidation cv;
  try {
    cv = cross_validate(code);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  std::ostringstream text;
  std::ostringstream csv;
  em.report.values()["solver_outcome"] = cv.solver_outcome;
  em.report.values()["oracle_W"] = enumerator_json(cv.oracle_w);
  em.report.values()["oracle_S"] = enumerator_json(cv.oracle_s);
  text << "n = " << code.n << ", solver outcome: " << cv.solver_outcome << "\n";
  text << "oracle    W(y) = " << format_polynomial(cv.oracle_w) << "\n";
  text << "oracle    S(y) = " << format_polynomial(cv.oracle_s) << "\n";
  csv << "source,kind,weight,coefficient\n";
  append_enumerator_csv(csv, "oracle,W", cv.oracle_w);
  append_enumerator_csv(csv, "oracle,S", cv.oracle_s);
  if (cv.predicted_w) {
    em.report.values()["predicted_W"] = enumerator_json(*cv.predicted_w);
    em.report.values()["predicted_S"] = enumerator_json(*cv.predicted_s);
    text << "predicted W(y) = " << format_polynomial(*cv.predicted_w) << "\n";
    text << "predicted S(y) = " << format_polynomial(*cv.predicted_s) << "\n";
    append_enumerator_csv(csv, "predicted,W", *cv.predicted_w);
    append_enumerator_csv(csv, "predicted,S", *cv.predicted_s);
  }
  std::string detail = "enumerated W and S equal the solver's unique enumerators";
  if (!cv.predicted_w) {
    detail = "solver outcome is " + cv.solver_outcome + ", no unique prediction";
  } else if (cv.first_w_mismatch) {
    detail = "W differs first at weight " + std::to_string(*cv.first_w_mismatch);
  } else if (cv.first_s_mismatch) {
    detail = "S differs first at weight " + std::to_string(*cv.first_s_mismatch);
  }
  text << (cv.ok() ? "match" : "MISMATCH") << ": " << detail << "\n";
  em.report.add_verdict({"cross_validation", cv.ok(), kMinimalShadow, detail});
  em.text = text.str();
  em.csv = csv.str();
  return em;
}

Emitted cmd_alpha_beta(int n, int i, std::optional<int> j) {
  const ParamSet p = length_or_usage(n);
  if (i < 1 || i > p.k()) {
    throw UsageError("--i must lie in [1, " + std::to_string(p.k()) + "]");
  }
  if (j && (*j < 0 || *j > p.k())) {
    throw UsageError("--j must lie in [0, " + std::to_string(p.k()) + "]");
  }
  Emitted em{Report("alpha-beta"), "", ""};
  em.report.parameters() = {{"n", n}, {"i", i}};
  std::ostringstream text;
  std::ostringstream csv;
  text << param_line(p) << "\n";
  csv << "quantity,route,value\n";

  std::vector<std::pair<std::string, Rational>> alpha_routes;
  alpha_routes.emplace_back("extraction", alpha_direct(p, i));
  alpha_routes.emplace_back("inversion", alpha_by_inversion(p, i, 0));
  if (p.m >= 1 && i == 2 * p.m + 1) {
    alpha_routes.emplace_back("binomial_sum", alpha_2m1_closed(p));
    if (auto f = alpha_2m1_product_form(p)) {
      alpha_routes.emplace_back("product_form", *f);
    }
  }
  if (p.m >= 1 && i == 2 * p.m) {
    alpha_routes.emplace_back("binomial_sum", alpha_2m_closed(p));
    if (auto f = alpha_2m_product_form(p)) {
      alpha_routes.emplace_back("product_form", *f);
    }
  }
  Json alpha = Json::object();
  bool agree = true;
  text << "alpha_{" << i << ",0}:\n";
  for (const auto& [route, value] : alpha_routes) {
    alpha[route] = exact(value);
    agree = agree && value == alpha_routes.front().second;
    text << "  " << route << ": " << to_string(value) << "\n";
    csv << "alpha," << route << "," << to_string(value) << "\n";
  }
  em.report.values()["alpha"] = std::move(alpha);
  em.report.add_verdict({"alpha_routes_agree", agree, kRains, std::to_string(alpha_routes.size()) + " routes"});

  if (j) {
    em.report.parameters()["j"] = *j;
    const Rational formula = beta(p, i, *j);
    const Rational inverted = beta_by_inversion(p, i, *j);
    text << "beta_{" << i << "," << *j << "}:\n";
    text << "  formula: " << to_string(formula) << "\n";
    text << "  inversion: " << to_string(inverted) << "\n";
    csv << "beta,formula," << to_string(formula) << "\n";
    csv << "beta,inversion," << to_string(inverted) << "\n";
    em.report.values()["beta"] = {{"formula", exact(formula)}, {"inversion", exact(inverted)}};
    em.report.add_verdict({"beta_routes_agree", formula == inverted, kRains, "formula vs. inverse of the S map"});
  }
  text << (em.report.passed() ? "all routes agree" : "ROUTES DISAGREE") << "\n";
  em.text = text.str();
  em.csv = csv.str();
  return em;
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Exact verification of extremal singly-even self-dual codes with minimal shadow", "minshadow"};
  app.require_subcommand(1);

  std::string format = "text";
  auto add_format = [&](CLI::App* sub) {
    sub->add_option("--format", format, "Output format")->check(CLI::IsMember({"text", "csv", "json"}));
  };

  int n = 0;
  int m_max = -1;
  int t = 0;
  int solver_m_max = -1;
  int i = 0;
  std::optional<int> j;
  std::string matrix;

  auto* enumerate = app.add_subcommand("enumerate", "Solve the constraint system for one length");
  enumerate->add_option("--n", n, "Code length")->required();
  add_format(enumerate);

  auto* classify = app.add_subcommand("classify", "Outcome grid over all residue classes");
  classify->add_option("--m-max", m_max, "Largest m (default 30)");
  add_format(classify);

  auto* nonexistence = app.add_subcommand("nonexistence", "Nonexistence identity and solver check");
  nonexistence->add_option("--t", t, "Residue class t (n = 24m + 2t)")->required();
  nonexistence->add_option("--m-max", m_max, "Largest m (default 30)");
  add_format(nonexistence);

  auto* thresholds = app.add_subcommand("thresholds", "Length bound scan");
  thresholds->add_option("--t", t, "Residue class t (n = 24m + 2t)")->required();
  thresholds->add_option("--m-max", m_max, "Largest m (default 200)");
  thresholds->add_option("--solver-m-max", solver_m_max, "Largest m for the solver route (default: --m-max)");
  add_format(thresholds);

  auto* summary_cmd = app.add_subcommand("summary", "Verdict per residue class");
  summary_cmd->add_option("--m-max", m_max, "Largest m for closed forms (default 200)");
  summary_cmd->add_option("--solver-m-max", solver_m_max, "Largest m for solver checks (default 20)");
  add_format(summary_cmd);

  auto* code_check = app.add_subcommand("code-check", "Properties and shadow of an explicit code");
  code_check->add_option("--matrix", matrix, "Generator matrix file")->required();
  add_format(code_check);

  auto* cross = app.add_subcommand("cross-validate", "Enumerated code vs. solver prediction");
  cross->add_option("--matrix", matrix, "Generator matrix file")->required();
  add_format(cross);

  auto* alpha_beta = app.add_subcommand("alpha-beta", "alpha_{i,0} and beta_{ij} by every available route");
  alpha_beta->add_option("--n", n, "Code length")->required();
  alpha_beta->add_option("--i", i, "Row index i")->required();
  alpha_beta->add_option("--j", j, "Column index j for beta");
  add_format(alpha_beta);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    Emitted em{Report(""), "", ""};
    if (*enumerate) {
      em = cmd_enumerate(n);
    } else if (*classify) {
      em = cmd_classify(m_max < 0 ? 30 : m_max);
    } else if (*nonexistence) {
      em = cmd_nonexistence(t, m_max < 0 ? 30 : m_max);
    } else if (*thresholds) {
      em = cmd_thresholds(t, m_max < 0 ? 200 : m_max, solver_m_max);
    } else if (*summary_cmd) {
      em = cmd_summary(m_max < 0 ? 200 : m_max, solver_m_max < 0 ? 20 : solver_m_max);
    } else if (*code_check) {
      em = cmd_code_check(matrix);
    } else if (*cross) {
      em = cmd_cross_validate(matrix);
    } else {
      em = cmd_alpha_beta(n, i, j);
    }
    if (format == "json") {
      out << em.report.dump();
    } else if (format == "csv") {
      out << em.csv;
    } else {
      out << em.text;
    }
    return em.report.passed() ? 0 : 1;
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const BudgetExceeded& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace minshadow
