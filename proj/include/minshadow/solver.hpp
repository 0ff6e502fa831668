#pragma once

// Constraint system on the Gleason coefficients c_i for an extremal code
// with minimal shadow, its exact solution, and the screening of the
// resulting enumerators against the shadow theorem of Conway and Sloane.

#include <optional>
#include <string>
#include <utility>
#include <variant>
#include <vector>

#include "minshadow/exact.hpp"
#include "minshadow/gleason.hpp"

namespace minshadow {

struct Constraint {
  std::vector<Rational> coeffs;  // one entry per c_i
  Rational rhs;
  std::string tag;  // "a3" = weight-6 coefficient of W, "b1" = second shadow coefficient, ...
};

struct ConstraintSystem {
  ParamSet params;
  int unknowns = 0;
  std::vector<Constraint> rows;
};

/// Rows: a_0 = 1 and a_j = 0 for 0 < 2j < d. For m >= 1 and r > 0: b_0 = 1,
/// b_j = 0 for 1 <= j <= m-1, and b_m = 0 when r == 1 and with_b_m_zero
/// is set. For r == 0: b_0 = 0 always (0 is never a shadow vector); for
/// m >= 2 also b_1 = 1 and b_j = 0 for 2 <= j <= m-1. For m == 0 and r > 0
/// only the a-side rows are used.
ConstraintSystem build_constraints(const ParamSet& p, bool with_b_m_zero = true);

struct Inconsistent {
  /// Multipliers on the original rows: sum(lambda * row) has all-zero
  /// coefficients and right-hand side `residual` != 0.
  std::vector<std::pair<std::string, Rational>> certificate;
  Rational residual;
};

struct Unique {
  std::vector<Rational> c;
};

struct Family {
  int dimension = 0;
  std::vector<Rational> particular;
  std::vector<std::vector<Rational>> basis;  // null-space vectors
};

using SolveOutcome = std::variant<Inconsistent, Unique, Family>;

/// Exact elimination. Pivot order is deterministic: columns left to right,
/// and within a column the surviving row with the smallest index.
SolveOutcome solve(const ConstraintSystem& sys);

std::string outcome_name(const SolveOutcome& outcome);

/// Coefficients of W or S indexed by weight 0..n. Rational because
/// integrality is checked by screening, not assumed.
struct WeightEnumerator {
  int n = 0;
  std::vector<Rational> coeffs;

  Rational at(int w) const;
  Rational total() const;
  std::optional<int> min_nonzero_weight() const;
};

struct Enumerators {
  WeightEnumerator w;
  WeightEnumerator s;
};

/// W = sum c_i basis_W(i), S = sum c_i basis_S(i) over the full length.
Enumerators enumerators_from_c(const ParamSet& p, const std::vector<Rational>& c);

struct ScreenCheck {
  std::string name;
  bool passed = true;
  std::optional<int> weight;  // smallest offending weight
  std::string detail;
};

struct ScreenReport {
  std::vector<ScreenCheck> checks;

  bool passed() const;
  /// Only the six shadow theorem bullets (s_symmetric, s_congruence,
  /// s_b0_zero, s_at_most_one_below_half_d, s_bound_at_half_d,
  /// s_single_low_weight); nonnegativity and integrality are ignored.
  bool shadow_theorem_passed() const;
  /// Failing check with the smallest offending weight.
  std::optional<ScreenCheck> first_violation() const;
  const ScreenCheck* find(const std::string& name) const;
};

/// Shadow theorem bullets (symmetry, congruence support, B_0 = 0,
/// B_r <= 1 for r < d/2, B_{d/2} <= 2n/d, at most one nonzero B_r for
/// r < (d+4)/2) plus nonnegativity and integrality of every coefficient.
ScreenReport screen(const ParamSet& p, const WeightEnumerator& w, const WeightEnumerator& s);

/// b_j = coefficient of y^{4j + r} in S. Throws std::invalid_argument
/// unless the outcome is Unique.
Rational shadow_coefficient(const ParamSet& p, const SolveOutcome& outcome, int j);

/// Same, from an explicit c vector.
Rational shadow_coefficient(const ParamSet& p, const std::vector<Rational>& c, int j);

/// Weight of the lightest shadow vector in a minimal shadow: r, or 4 when r == 0.
int minimal_shadow_weight(const ParamSet& p);

}  // namespace minshadow

namespace minshadow {

/// alpha_{ij} read off the inverse of the c -> a map: solves for c with
/// a_j = 1 and every other a_0..a_k zero, and returns c_i.
Rational alpha_by_inversion(const ParamSet& p, int i, int j = 0);

/// beta_{ij} read off the inverse of the c -> b map (rows b_0..b_k).
Rational beta_by_inversion(const ParamSet& p, int i, int j);

}  // namespace minshadow
