#include "minshadow/solver.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace minshadow {

ConstraintSystem build_constraints(const ParamSet& p, bool with_b_m_zero) {
  ConstraintSystem sys;
  sys.params = p;
  sys.unknowns = p.k() + 1;

  const int a_max = p.d / 2 - 1;
  const RationalMatrix a_rows = w_coefficient_rows(p, a_max);
  for (int j = 0; j <= a_max; ++j) {
    sys.rows.push_back({a_rows[static_cast<std::size_t>(j)], Rational(j == 0 ? 1 : 0), "a" + std::to_string(j)});
  }

  std::vector<std::pair<int, int>> b_conditions;  // (j, value of b_j)
  if (p.r > 0) {
    if (p.m >= 1) {
      b_conditions.emplace_back(0, 1);
      for (int j = 1; j <= p.m - 1; ++j) {
        b_conditions.emplace_back(j, 0);
      }
      if (with_b_m_zero && p.r == 1) {
        b_conditions.emplace_back(p.m, 0);
      }
    }
  } else {
    b_conditions.emplace_back(0, 0);
    if (p.m >= 2) {
      b_conditions.emplace_back(1, 1);
      for (int j = 2; j <= p.m - 1; ++j) {
        b_conditions.emplace_back(j, 0);
      }
    }
  }
  if (!b_conditions.empty()) {
    const RationalMatrix b_rows = s_coefficient_rows(p, b_conditions.back().first);
    for (const auto& [j, value] : b_conditions) {
      sys.rows.push_back({b_rows[static_cast<std::size_t>(j)], Rational(value), "b" + std::to_string(j)});
    }
  }
  return sys;
}

namespace {

using SparseEntries = std::vector<std::pair<int, Rational>>;

struct WorkRow {
  SparseEntries entries;  // sorted by column
  Rational rhs;
  std::vector<std::pair<std::size_t, Rational>> history;  // (pivot row, factor) subtracted
  bool is_pivot = false;
};

// row -= factor * pivot
void subtract_scaled(WorkRow& row, const WorkRow& pivot, const Rational& factor) {
  SparseEntries out;
  out.reserve(row.entries.size() + pivot.entries.size());
  auto ia = row.entries.begin();
  auto ib = pivot.entries.begin();
  Rational scaled;
  while (ia != row.entries.end() || ib != pivot.entries.end()) {
    if (ib == pivot.entries.end() || (ia != row.entries.end() && ia->first < ib->first)) {
      out.push_back(std::move(*ia++));
      continue;
    }
    mpq_mul(scaled.get_mpq_t(), factor.get_mpq_t(), ib->second.get_mpq_t());
    if (ia == row.entries.end() || ib->first < ia->first) {
      out.emplace_back(ib->first, -scaled);
    } else {
      Rational v = ia->second - scaled;
      if (v != 0) {
        out.emplace_back(ia->first, std::move(v));
      }
      ++ia;
    }
    ++ib;
  }
  row.entries = std::move(out);
  row.rhs -= factor * pivot.rhs;
}

struct Echelon {
  std::vector<WorkRow> rows;
  std::vector<std::pair<std::size_t, int>> pivots;  // (row index, column) in creation order
};

Echelon eliminate(const ConstraintSystem& sys) {
  Echelon e;
  e.rows.reserve(sys.rows.size());
  for (const auto& row : sys.rows) {
    if (static_cast<int>(row.coeffs.size()) != sys.unknowns) {
      throw std::invalid_argument("constraint row " + row.tag + " has wrong length");
    }
    WorkRow w;
    for (int col = 0; col < sys.unknowns; ++col) {
      if (row.coeffs[static_cast<std::size_t>(col)] != 0) {
        w.entries.emplace_back(col, row.coeffs[static_cast<std::size_t>(col)]);
      }
    }
    w.rhs = row.rhs;
    e.rows.push_back(std::move(w));
  }

  for (int col = 0; col < sys.unknowns; ++col) {
    std::optional<std::size_t> pivot;
    for (std::size_t idx = 0; idx < e.rows.size(); ++idx) {
      const WorkRow& row = e.rows[idx];
      if (row.is_pivot || row.entries.empty() || row.entries.front().first != col) {
        continue;
      }
      if (!pivot) {
        pivot = idx;
        continue;
      }
      const Rational factor = row.entries.front().second / e.rows[*pivot].entries.front().second;
      subtract_scaled(e.rows[idx], e.rows[*pivot], factor);
      e.rows[idx].history.emplace_back(*pivot, factor);
    }
    if (pivot) {
      e.rows[*pivot].is_pivot = true;
      e.pivots.emplace_back(*pivot, col);
    }
  }
  return e;
}

std::vector<Rational> back_substitute(const Echelon& e, int unknowns, const std::vector<int>& free_cols,
                                      const std::vector<Rational>& free_values, bool homogeneous) {
  std::vector<Rational> x(static_cast<std::size_t>(unknowns));
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    x[static_cast<std::size_t>(free_cols[f])] = free_values[f];
  }
  for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
    const WorkRow& row = e.rows[it->first];
    Rational acc = homogeneous ? Rational(0) : row.rhs;
    for (std::size_t n = 1; n < row.entries.size(); ++n) {
      acc -= row.entries[n].second * x[static_cast<std::size_t>(row.entries[n].first)];
    }
    x[static_cast<std::size_t>(it->second)] = acc / row.entries.front().second;
  }
  return x;
}

}  // namespace

SolveOutcome solve(const ConstraintSystem& sys) {
  Echelon e = eliminate(sys);

  for (std::size_t idx = 0; idx < e.rows.size(); ++idx) {
    const WorkRow& row = e.rows[idx];
    if (row.is_pivot || row.rhs == 0) {
      continue;
    }
    // Unwind the recorded eliminations into multipliers on the input rows.
    std::vector<Rational> lambda(e.rows.size());
    lambda[idx] = 1;
    for (const auto& [q, f] : row.history) {
      lambda[q] -= f;
    }
    for (auto it = e.pivots.rbegin(); it != e.pivots.rend(); ++it) {
      const std::size_t x = it->first;
      if (lambda[x] == 0) {
        continue;
      }
      for (const auto& [q, f] : e.rows[x].history) {
        lambda[q] -= lambda[x] * f;
      }
    }
    Inconsistent out;
    out.residual = row.rhs;
    for (std::size_t r = 0; r < lambda.size(); ++r) {
      if (lambda[r] != 0) {
        out.certificate.emplace_back(sys.rows[r].tag, lambda[r]);
      }
    }
    return out;
  }

  std::vector<bool> is_pivot_col(static_cast<std::size_t>(sys.unknowns), false);
  for (const auto& pc : e.pivots) {
    is_pivot_col[static_cast<std::size_t>(pc.second)] = true;
  }
  std::vector<int> free_cols;
  for (int col = 0; col < sys.unknowns; ++col) {
    if (!is_pivot_col[static_cast<std::size_t>(col)]) {
      free_cols.push_back(col);
    }
  }
  if (free_cols.empty()) {
    return Unique{back_substitute(e, sys.unknowns, free_cols, {}, false)};
  }
  Family fam;
  fam.dimension = static_cast<int>(free_cols.size());
  fam.particular =
      back_substitute(e, sys.unknowns, free_cols, std::vector<Rational>(free_cols.size()), false);
  for (std::size_t f = 0; f < free_cols.size(); ++f) {
    std::vector<Rational> unit(free_cols.size());
    unit[f] = 1;
    fam.basis.push_back(back_substitute(e, sys.unknowns, free_cols, unit, true));
  }
  return fam;
}

std::string outcome_name(const SolveOutcome& outcome) {
  if (std::holds_alternative<Inconsistent>(outcome)) {
    return "inconsistent";
  }
  if (std::holds_alternative<Unique>(outcome)) {
    return "unique";
  }
  return "family(" + std::to_string(std::get<Family>(outcome).dimension) + ")";
}

Rational WeightEnumerator::at(int w) const {
  if (w < 0 || w >= static_cast<int>(coeffs.size())) {
    return Rational(0);
  }
  return coeffs[static_cast<std::size_t>(w)];
}

Rational WeightEnumerator::total() const {
  Rational sum;
  for (const auto& c : coeffs) {
    sum += c;
  }
  return sum;
}

std::optional<int> WeightEnumerator::min_nonzero_weight() const {
  for (std::size_t w = 0; w < coeffs.size(); ++w) {
    if (coeffs[w] != 0) {
      return static_cast<int>(w);
    }
  }
  return std::nullopt;
}

namespace {

WeightEnumerator to_enumerator(int n, const Series& s) {
  WeightEnumerator out{n, std::vector<Rational>(static_cast<std::size_t>(n + 1))};
  for (const auto& [deg, c] : s.terms()) {
    out.coeffs[static_cast<std::size_t>(deg)] = c;
  }
  return out;
}

}  // namespace

Enumerators enumerators_from_c(const ParamSet& p, const std::vector<Rational>& c) {
  const int k = p.k();
  if (static_cast<int>(c.size()) != k + 1) {
    throw std::invalid_argument("c vector must have k + 1 = " + std::to_string(k + 1) + " entries");
  }
  const int trunc = p.n + 1;

  // W = (1 + y^2)^r sum_i c_i g^i f^{k-i}, g = y^2 (1 - y^2)^2, f = (1 + y^2)^4
  const Series f = Series::from_binomial_power(1, 4, 2, trunc);
  const Series g = Series::from_binomial_power(-1, 2, 2, trunc).scale_shift(Rational(1), 2);
  Series w_acc(trunc);
  Series g_pow = Series::constant(Rational(1), trunc);
  for (int i = 0; i <= k; ++i) {
    w_acc = w_acc * f + g_pow.scale_shift(c[static_cast<std::size_t>(i)], 0);
    if (i < k) {
      g_pow = g_pow * g;
    }
  }
  const Series w = w_acc * Series::from_binomial_power(1, p.r, 2, trunc);

  // S = y^r sum_i e_i z^{k-i} (1 - z)^{2i}, z = y^4, e_i = (-1)^i c_i 2^{n/2 - 6i}
  const Series square = Series::from_binomial_power(-1, 2, 4, trunc);
  auto e = [&](int i) -> Rational {
    return (i % 2 == 0 ? Rational(1) : Rational(-1)) * c[static_cast<std::size_t>(i)] * pow2(p.half() - 6L * i);
  };
  Series s_acc = Series::constant(e(k), trunc);
  for (int i = k - 1; i >= 0; --i) {
    s_acc = s_acc * square + Series::monomial(e(i), 4 * (k - i), trunc);
  }
  const Series s = s_acc.scale_shift(Rational(1), p.r);

  return Enumerators{to_enumerator(p.n, w), to_enumerator(p.n, s)};
}

bool ScreenReport::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const ScreenCheck& c) { return c.passed; });
}

bool ScreenReport::shadow_theorem_passed() const {
  static const char* const kBullets[] = {"s_symmetric",       "s_congruence",      "s_b0_zero",
                                         "s_at_most_one_below_half_d", "s_bound_at_half_d", "s_single_low_weight"};
  for (const char* name : kBullets) {
    const ScreenCheck* c = find(name);
    if (c == nullptr || !c->passed) {
      return false;
    }
  }
  return true;
}

std::optional<ScreenCheck> ScreenReport::first_violation() const {
  std::optional<ScreenCheck> best;
  for (const auto& c : checks) {
    if (c.passed) {
      continue;
    }
    if (!best || c.weight.value_or(1 << 30) < best->weight.value_or(1 << 30)) {
      best = c;
    }
  }
  return best;
}

const ScreenCheck* ScreenReport::find(const std::string& name) const {
  for (const auto& c : checks) {
    if (c.name == name) {
      return &c;
    }
  }
  return nullptr;
}

namespace {

template <typename Pred>
ScreenCheck first_failure(std::string name, const WeightEnumerator& e, Pred bad, const std::string& what) {
  ScreenCheck check{std::move(name), true, std::nullopt, ""};
  for (int w = 0; w <= e.n; ++w) {
    if (bad(w, e.at(w))) {
      check.passed = false;
      check.weight = w;
      check.detail = what + " at weight " + std::to_string(w) + " (coefficient " + to_string(e.at(w)) + ")";
      break;
    }
  }
  return check;
}

}  // namespace

ScreenReport screen(const ParamSet& p, const WeightEnumerator& w, const WeightEnumerator& s) {
  ScreenReport report;
  const int n = p.n;
  const int d = p.d;
  auto& out = report.checks;

  out.push_back(first_failure("w_integral", w, [](int, const Rational& c) { return !is_integer(c); },
                              "non-integral W coefficient"));
  out.push_back(first_failure("w_nonnegative", w, [](int, const Rational& c) { return c < 0; },
                              "negative W coefficient"));
  out.push_back(first_failure("w_even_weights", w, [](int wt, const Rational& c) { return wt % 2 != 0 && c != 0; },
                              "odd-weight codeword count"));
  out.push_back(first_failure("s_integral", s, [](int, const Rational& c) { return !is_integer(c); },
                              "non-integral S coefficient"));
  out.push_back(first_failure("s_nonnegative", s, [](int, const Rational& c) { return c < 0; },
                              "negative S coefficient"));
  out.push_back(first_failure("s_symmetric", s, [&](int wt, const Rational& c) { return c != s.at(n - wt); },
                              "B_w != B_{n-w}"));
  out.push_back(first_failure("s_congruence", s,
                              [&](int wt, const Rational& c) { return c != 0 && (wt - p.half()) % 4 != 0; },
                              "shadow weight not congruent to n/2 mod 4"));
  out.push_back(first_failure("s_b0_zero", s, [](int wt, const Rational& c) { return wt == 0 && c != 0; },
                              "zero vector in shadow"));
  out.push_back(first_failure("s_at_most_one_below_half_d", s,
                              [&](int wt, const Rational& c) { return 2 * wt < d && c > 1; },
                              "B_r > 1 for r < d/2"));
  out.push_back(first_failure("s_bound_at_half_d", s,
                              [&](int wt, const Rational& c) { return 2 * wt == d && c > make_rational(2 * n, d); },
                              "B_{d/2} > 2n/d"));

  ScreenCheck single{"s_single_low_weight", true, std::nullopt, ""};
  int nonzero = 0;
  for (int wt = 0; 2 * wt < d + 4; ++wt) {
    if (s.at(wt) != 0 && ++nonzero == 2) {
      single.passed = false;
      single.weight = wt;
      single.detail = "second nonzero B_r below (d+4)/2 at weight " + std::to_string(wt);
      break;
    }
  }
  out.push_back(single);
  return report;
}

Rational shadow_coefficient(const ParamSet& p, const std::vector<Rational>& c, int j) {
  if (j < 0) {
    throw std::invalid_argument("shadow coefficient index must be nonnegative");
  }
  if (static_cast<int>(c.size()) != p.k() + 1) {
    throw std::invalid_argument("c vector must have k + 1 entries");
  }
  if (4 * j + p.r > p.n) {
    return Rational(0);
  }
  const RationalMatrix rows = s_coefficient_rows(p, j);
  Rational b;
  for (std::size_t i = 0; i < c.size(); ++i) {
    b += rows.back()[i] * c[i];
  }
  return b;
}

Rational shadow_coefficient(const ParamSet& p, const SolveOutcome& outcome, int j) {
  const auto* unique = std::get_if<Unique>(&outcome);
  if (unique == nullptr) {
    throw std::invalid_argument("shadow coefficient b_" + std::to_string(j) + " is not determined by a " +
                                outcome_name(outcome) + " outcome");
  }
  return shadow_coefficient(p, unique->c, j);
}

int minimal_shadow_weight(const ParamSet& p) { return p.r == 0 ? 4 : p.r; }

}  // namespace minshadow

namespace minshadow {

namespace {

Rational invert_column(const ParamSet& p, const RationalMatrix& rows, char prefix, int i, int j) {
  const int k = p.k();
  if (i < 0 || i > k || j < 0 || j > k) {
    throw std::out_of_range("index outside [0, k]");
  }
  ConstraintSystem sys;
  sys.params = p;
  sys.unknowns = k + 1;
  for (int row = 0; row <= k; ++row) {
    sys.rows.push_back({rows[static_cast<std::size_t>(row)], Rational(row == j ? 1 : 0),
                        std::string(1, prefix) + std::to_string(row)});
  }
  const SolveOutcome outcome = solve(sys);
  const auto* u = std::get_if<Unique>(&outcome);
  if (u == nullptr) {
    throw std::logic_error("basis matrix is singular");
  }
  return u->c[static_cast<std::size_t>(i)];
}

}  // namespace

Rational alpha_by_inversion(const ParamSet& p, int i, int j) {
  return invert_column(p, w_coefficient_rows(p, p.k()), 'a', i, j);
}

Rational beta_by_inversion(const ParamSet& p, int i, int j) {
  return invert_column(p, s_coefficient_rows(p, p.k()), 'b', i, j);
}

}  // namespace minshadow
