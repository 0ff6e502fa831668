#include "minshadow/theorems.hpp"

#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace minshadow {

BigInt Polynomial::operator()(const BigInt& m) const {
  BigInt acc;
  for (auto it = coeffs.rbegin(); it != coeffs.rend(); ++it) {
    acc = acc * m + *it;
  }
  return acc;
}

std::string Polynomial::to_string() const {
  std::string out;
  for (int deg = static_cast<int>(coeffs.size()) - 1; deg >= 0; --deg) {
    const BigInt& c = coeffs[static_cast<std::size_t>(deg)];
    if (c == 0) {
      continue;
    }
    const BigInt mag = abs(c);
    if (out.empty()) {
      out += c < 0 ? "-" : "";
    } else {
      out += c < 0 ? "-" : "+";
    }
    if (mag != 1 || deg == 0) {
      out += mag.get_str();
    }
    if (deg >= 1) {
      out += "m";
    }
    if (deg >= 2) {
      out += "^" + std::to_string(deg);
    }
  }
  return out.empty() ? "0" : out;
}

namespace {

Polynomial poly(std::initializer_list<long> ascending) {
  Polynomial p;
  for (long c : ascending) {
    p.coeffs.emplace_back(c);
  }
  return p;
}

void require_family(int t, std::initializer_list<int> allowed, const char* what) {
  for (int a : allowed) {
    if (a == t) {
      return;
    }
  }
  throw std::invalid_argument(std::string(what) + ": unsupported residue class t = " + std::to_string(t));
}

// -2^{t-6} (alpha_{2m+1,0} - beta_{2m+1,0})
Rational reduced_identity(int t, int m) {
  const ParamSet p = ParamSet::from_family(m, t);
  return -pow2(t - 6) * (alpha_2m1_closed(p) - beta(p, 2 * m + 1, 0));
}

}  // namespace

NonexistencePolynomial nonexistence_polynomial(int t) {
  switch (t) {
    case 1:
      return {1, poly({1, 26, 48})};
    case 2:
      return {2, poly({1, 14, 24})};
    case 3:
      return {3, poly({3, 30, 48})};
    case 5:
      return {5, poly({3, 6})};
    default:
      throw std::invalid_argument("no nonexistence polynomial for t = " + std::to_string(t));
  }
}

Rational nonexistence_scale(int t, int m) {
  if (m < 1) {
    throw std::invalid_argument("nonexistence_scale needs m >= 1");
  }
  const long mm = m;
  switch (t) {
    case 1:
      return Rational(binom(5 * mm, mm - 1)) / Rational(40 * mm * (2 * mm + 1));
    case 2:
    case 3:
      return Rational(binom(5 * mm, mm - 1)) / Rational(8 * mm * (2 * mm + 1));
    case 5:
      return Rational(binom(5 * mm + 1, mm)) / Rational(2 * (2 * mm + 1));
    default:
      throw std::invalid_argument("no nonexistence scale for t = " + std::to_string(t));
  }
}

bool NonexistenceReport::ok() const {
  for (const auto& row : rows) {
    if (row.residual == 0) {
      return false;
    }
    if (row.identity_holds && !*row.identity_holds) {
      return false;
    }
    if (row.solver_inconsistent && !*row.solver_inconsistent) {
      return false;
    }
  }
  return !rows.empty();
}

NonexistenceReport check_nonexistence(int t, int m_max, int solver_m_max) {
  const NonexistencePolynomial np = nonexistence_polynomial(t);
  if (m_max < 1) {
    throw std::invalid_argument("check_nonexistence needs m_max >= 1");
  }
  NonexistenceReport report;
  report.t = t;
  for (int m = 1; m <= m_max; ++m) {
    NonexistenceRow row;
    row.m = m;
    row.residual = np.poly(BigInt(m));
    row.reduced = reduced_identity(t, m);
    row.identity_holds = *row.reduced == nonexistence_scale(t, m) * Rational(row.residual);
    if (m <= solver_m_max) {
      const ParamSet p = ParamSet::from_family(m, t);
      row.solver_inconsistent = std::holds_alternative<Inconsistent>(solve(build_constraints(p)));
    }
    report.rows.push_back(std::move(row));
  }
  return report;
}

int shadow_index(BoundIndex which, int m) {
  switch (which) {
    case BoundIndex::m:
      return m;
    case BoundIndex::m_plus_1:
      return m + 1;
    case BoundIndex::m_plus_2:
      return m + 2;
  }
  return m;
}

std::string to_string(BoundIndex which) {
  switch (which) {
    case BoundIndex::m:
      return "b_m";
    case BoundIndex::m_plus_1:
      return "b_{m+1}";
    case BoundIndex::m_plus_2:
      return "b_{m+2}";
  }
  return "?";
}

namespace {

Polynomial bound_polynomial(int t) {
  switch (t) {
    case 4:
      return poly({24, 141, 209, -4});
    case 6:
      return poly({117, 1257, 4242, 4496, -32});
    case 7:
      return poly({7875, 107643, 557970, 1386448, 1663728, 772352, -5376});
    case 9:
      return poly({6930, 52809, 149089, 184210, 83696, -544});
    default:
      throw std::invalid_argument("no bound polynomial for t = " + std::to_string(t));
  }
}

BoundIndex bound_index(int t) { return t == 9 ? BoundIndex::m_plus_2 : BoundIndex::m_plus_1; }

Rational ratio(const BigInt& num, const BigInt& den) {
  if (den == 0) {
    throw std::invalid_argument("closed form has a vanishing denominator here");
  }
  return make_rational(num, den);
}

}  // namespace

Rational b_closed_form(int t, BoundIndex which, int m) {
  require_family(t, {4, 6, 7, 9}, "b_closed_form");
  if (m < 1) {
    throw std::invalid_argument("b_closed_form needs m >= 1");
  }
  const BigInt M = m;
  const long mm = m;
  const auto c = [](long top, long bottom) { return Rational(binom(top, bottom)); };
  switch (t) {
    case 4:
      if (which == BoundIndex::m) {
        return ratio(6 * M + 1, M) * c(5 * mm, mm - 1);
      }
      if (which == BoundIndex::m_plus_1) {
        return ratio(16 * (6 * M + 1) * bound_polynomial(4)(M), 5 * M * (M + 1) * (4 * M + 3)) *
               c(5 * mm + 1, mm - 1);
      }
      break;
    case 6:
      if (which == BoundIndex::m) {
        return ratio(12 * M + 5, 2 * M + 1) * c(5 * mm + 1, mm);
      }
      if (which == BoundIndex::m_plus_1) {
        return ratio(2 * (12 * M + 5) * bound_polynomial(6)(M),
                     (5 * M + 1) * (4 * M + 3) * (4 * M + 5) * (2 * M + 3)) *
               c(5 * mm + 2, mm + 1);
      }
      break;
    case 7:
      if (which == BoundIndex::m) {
        return ratio(168 * M * M + 164 * M + 39, (2 * M + 1) * (4 * M + 3)) * c(5 * mm + 1, mm);
      }
      if (which == BoundIndex::m_plus_1) {
        return ratio(2 * bound_polynomial(7)(M),
                     (4 * M + 3) * (4 * M + 5) * (2 * M + 3) * (4 * M + 7) * (5 * M + 1)) *
               c(5 * mm + 2, mm + 1);
      }
      break;
    case 9:
      if (which == BoundIndex::m) {
        return Rational(0);
      }
      if (which == BoundIndex::m_plus_1) {
        return ratio((24 * M + 17) * (17 * M + 10), (2 * M + 1) * (4 * M + 5)) * c(5 * mm + 2, mm + 1);
      }
      return ratio(2 * (24 * M + 17) * bound_polynomial(9)(M),
                   (4 * M + 5) * (2 * M + 3) * (4 * M + 7) * (4 * M + 9) * (5 * M + 2)) *
             c(5 * mm + 3, mm + 2);
    default:
      break;
  }
  throw std::invalid_argument("no closed form for " + to_string(which) + " at t = " + std::to_string(t));
}

Rational b_from_alpha_beta(int t, BoundIndex which, int m) {
  require_family(t, {4, 6, 7, 9}, "b_from_alpha_beta");
  if (m < 1) {
    throw std::invalid_argument("b_from_alpha_beta needs m >= 1");
  }
  const ParamSet p = ParamSet::from_family(m, t);
  const int eps = p.r == 0 ? 1 : 0;  // index of the forced b_eps = 1
  const int top = 2 * m + 1;
  const int low = 2 * m;

  // c_{2m+1}: one unknown shadow coefficient b_{m+l-1} with beta = -2^{6-t}
  const Rational first = -pow2(t - 6) * (alpha_2m1_closed(p) - beta(p, top, eps));
  if (t == 9) {
    if (which == BoundIndex::m) {
      return Rational(0);
    }
    if (which == BoundIndex::m_plus_1) {
      return first;
    }
    return (alpha_2m_closed(p) - beta(p, low, eps) - beta(p, low, m + 1) * first) / beta(p, low, m + 2);
  }
  if (which == BoundIndex::m) {
    return first;
  }
  if (which == BoundIndex::m_plus_1) {
    return (alpha_2m_closed(p) - beta(p, low, eps) - beta(p, low, m) * first) / beta(p, low, m + 1);
  }
  throw std::invalid_argument("b_{m+2} is only derived for t = 9");
}

bool ThresholdRecord::ok() const {
  if (!polynomial_threshold || *polynomial_threshold != stored) {
    return false;
  }
  if (!closed_form_matches_solver) {
    return false;
  }
  if (solver_scanned_to >= stored && solver_threshold != polynomial_threshold) {
    return false;
  }
  if (solver_threshold && *solver_threshold != *polynomial_threshold) {
    return false;
  }
  for (const auto& [m, value] : solver_values) {
    if ((m < stored && value < 0) || (m >= stored && value >= 0)) {
      return false;
    }
  }
  return true;
}

ThresholdRecord threshold_scan(int t, int m_max, int solver_m_max) {
  require_family(t, {4, 6, 7, 9}, "threshold_scan");
  ThresholdRecord rec;
  rec.t = t;
  rec.which = bound_index(t);
  rec.poly = bound_polynomial(t);
  rec.stored = stored_threshold(t);

  for (int m = 1; m <= m_max; ++m) {
    if (rec.poly(BigInt(m)) < 0) {
      rec.polynomial_threshold = m;
      break;
    }
  }

  const int solver_top = std::min(m_max, solver_m_max);
  rec.solver_scanned_to = std::max(solver_top, 0);
  for (int m = 1; m <= solver_top; ++m) {
    const ParamSet p = ParamSet::from_family(m, t);
    const SolveOutcome outcome = solve(build_constraints(p));
    if (!std::holds_alternative<Unique>(outcome)) {
      rec.closed_form_matches_solver = false;
      rec.first_mismatch_m = rec.first_mismatch_m.value_or(m);
      continue;
    }
    const Rational b = shadow_coefficient(p, outcome, shadow_index(rec.which, m));
    if (b != b_closed_form(t, rec.which, m)) {
      rec.closed_form_matches_solver = false;
      rec.first_mismatch_m = rec.first_mismatch_m.value_or(m);
    }
    if (b < 0 && !rec.solver_threshold) {
      rec.solver_threshold = m;
    }
    if (m == rec.stored - 1 || m == rec.stored) {
      rec.solver_values.emplace_back(m, b);
    }
  }
  return rec;
}

int stored_threshold(int t) {
  switch (t) {
    case 4:
      return 53;
    case 6:
      return 142;
    case 7:
      return 146;
    case 8:
      return zhang_doubly_even_bound(2);
    case 9:
      return 157;
    default:
      throw std::invalid_argument("no stored length bound for t = " + std::to_string(t));
  }
}

int zhang_doubly_even_bound(int l) {
  switch (l) {
    case 0:
      return 154;
    case 1:
      return 159;
    case 2:
      return 164;
    default:
      throw std::invalid_argument("doubly-even bound needs l in {0, 1, 2}");
  }
}

bool yorgov_excludes(int m) { return m % 2 == 0 && mpz_odd_p(binom(5L * m, m).get_mpz_t()) != 0; }

Classification classify_length(int n) {
  Classification out;
  out.params = ParamSet::from_length(n);
  const SolveOutcome outcome = solve(build_constraints(out.params));
  out.outcome = outcome_name(outcome);
  if (const auto* u = std::get_if<Unique>(&outcome)) {
    const Enumerators e = enumerators_from_c(out.params, u->c);
    const ScreenReport report = screen(out.params, e.w, e.s);
    out.feasible = report.passed();
    out.violation = report.first_violation();
    out.minimal_shadow = e.s.min_nonzero_weight() == minimal_shadow_weight(out.params);
  }
  return out;
}

std::optional<std::string> expected_outcome(const ParamSet& p) {
  if (p.m == 0) {
    return std::nullopt;
  }
  switch (p.t) {
    case 0:
    case 1:
    case 2:
    case 3:
    case 5:
      return "inconsistent";
    case 8:
    case 10:
      return "family(1)";
    default:
      return "unique";
  }
}

std::vector<SummaryRow> summary(int m_max, int solver_m_max) {
  if (m_max < 1) {
    throw std::invalid_argument("summary needs m_max >= 1");
  }
  const int cap = std::min(m_max, solver_m_max);
  std::vector<SummaryRow> rows;
  for (int t = 0; t <= 11; ++t) {
    SummaryRow row;
    row.t = t;
    row.residue = t == 0 ? "24m" : "24m+" + std::to_string(2 * t);
    const auto all_m = [&](auto pred) {
      for (int m = 1; m <= cap; ++m) {
        if (!pred(classify_length(24 * m + 2 * t))) {
          return false;
        }
      }
      return true;
    };
    switch (t) {
      case 0:
        row.verdict = "nonexistent";
        row.detail = "constraint system inconsistent (b_0 = 0 with extremal W)";
        row.verified = all_m([](const Classification& c) { return c.outcome == "inconsistent"; });
        break;
      case 1:
      case 2:
      case 3:
      case 5:
        row.verdict = "nonexistent";
        row.detail = nonexistence_polynomial(t).poly.to_string() + " = 0 has no root m >= 0";
        row.verified = check_nonexistence(t, m_max, cap).ok();
        break;
      case 4:
      case 6:
      case 7:
      case 9: {
        const ThresholdRecord rec = threshold_scan(t, m_max, cap);
        row.verdict = "bounded";
        if (rec.polynomial_threshold) {
          row.detail =
              "none for m >= " + std::to_string(*rec.polynomial_threshold) + " (" + to_string(rec.which) + " < 0)";
        } else {
          row.detail = "bound beyond m = " + std::to_string(m_max);
        }
        row.verified = rec.ok();
        break;
      }
      case 8:
        row.verdict = "bounded";
        row.detail = "none for m >= " + std::to_string(stored_threshold(8)) + " (doubly-even bound of Zhang, stored)";
        row.verified = all_m([](const Classification& c) { return c.outcome == "family(1)"; });
        break;
      case 10:
        row.verdict = "open";
        row.detail = "weight enumerator not unique (one-parameter family)";
        row.verified = all_m([](const Classification& c) { return c.outcome == "family(1)"; });
        break;
      case 11:
        row.verdict = "nonexistent";
        row.detail = "d = 4m+6 forces a negative shadow coefficient";
        row.verified = all_m([](const Classification& c) {
          return c.outcome == "unique" && c.feasible == false && c.violation &&
                 c.violation->name == "s_nonnegative";
        });
        break;
      default:
        break;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

std::string format_summary(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  out << std::left << std::setw(9) << "residue" << std::setw(4) << "t" << std::setw(13) << "verdict"
      << std::setw(10) << "checked" << "detail\n";
  for (const auto& row : rows) {
    out << std::left << std::setw(9) << row.residue << std::setw(4) << row.t << std::setw(13) << row.verdict
        << std::setw(10) << (row.verified ? "yes" : "NO") << row.detail << "\n";
  }
  return out.str();
}

}  // namespace minshadow
