#pragma once

// Closed forms for the nonexistence and length-bound results, and scans
// that confirm them against the exact solver.

#include <optional>
#include <string>
#include <vector>

#include "minshadow/exact.hpp"
#include "minshadow/gleason.hpp"
#include "minshadow/solver.hpp"

namespace minshadow {

/// Integer polynomial in m, coefficients in ascending degree.
struct Polynomial {
  std::vector<BigInt> coeffs;

  BigInt operator()(const BigInt& m) const;
  std::string to_string() const;
};

struct NonexistencePolynomial {
  int t = 0;
  Polynomial poly;
};

/// t in {1, 2, 3, 5}: 48m^2+26m+1, 24m^2+14m+1, 48m^2+30m+3, 6m+3.
NonexistencePolynomial nonexistence_polynomial(int t);

/// Positive factor F(m), m >= 1, with
///   -2^{t-6} (alpha_{2m+1,0} - beta_{2m+1,0}) = F(m) * P_t(m).
Rational nonexistence_scale(int t, int m);

struct NonexistenceRow {
  int m = 0;
  BigInt residual;                    // P_t(m)
  std::optional<Rational> reduced;    // -2^{t-6}(alpha - beta), m >= 1
  std::optional<bool> identity_holds; // reduced == F(m) P_t(m)
  std::optional<bool> solver_inconsistent;
};

struct NonexistenceReport {
  int t = 0;
  std::vector<NonexistenceRow> rows;

  bool ok() const;
};

/// For 1 <= m <= m_max: P_t(m) != 0, the alpha/beta identity, and (for
/// 1 <= m <= solver_m_max) an Inconsistent solver verdict.
NonexistenceReport check_nonexistence(int t, int m_max, int solver_m_max);
inline NonexistenceReport check_nonexistence(int t, int m_max) { return check_nonexistence(t, m_max, m_max); }

enum class BoundIndex { m, m_plus_1, m_plus_2 };

int shadow_index(BoundIndex which, int m);
std::string to_string(BoundIndex which);

/// Printed closed forms for b_m, b_{m+1}, b_{m+2} in the residue classes
/// t = 4, 6, 7, 9. Throws std::invalid_argument for combinations without a
/// closed form or with a vanishing denominator.
Rational b_closed_form(int t, BoundIndex which, int m);

/// The same coefficients from the alpha/beta relations
///   c_{2m+1} = alpha_{2m+1,0} = sum_j beta_{2m+1,j} b_j,
///   c_{2m}   = alpha_{2m,0}   = sum_j beta_{2m,j} b_j,
/// with the forced low-order b_j substituted. For t = 4 and m = 1 the forced
/// b_1 = 1 is not included in the returned b_m.
Rational b_from_alpha_beta(int t, BoundIndex which, int m);

struct ThresholdRecord {
  int t = 0;
  BoundIndex which = BoundIndex::m_plus_1;
  Polynomial poly;                        // sign-carrying factor of the bound coefficient
  int stored = 0;                         // published threshold
  std::optional<int> polynomial_threshold;
  std::optional<int> solver_threshold;
  int solver_scanned_to = 0;
  bool closed_form_matches_solver = true; // b_closed_form == solver value at every scanned m
  std::optional<int> first_mismatch_m;
  std::vector<std::pair<int, Rational>> solver_values;  // (m, b) at m* - 1 and m*

  bool ok() const;
};

/// Scans 1 <= m <= m_max for the first m where the bound-carrying shadow
/// coefficient turns negative, once from the polynomial and once from the
/// solver's unique enumerator (solver scan stops at min(m_max, solver_m_max)).
ThresholdRecord threshold_scan(int t, int m_max, int solver_m_max);
inline ThresholdRecord threshold_scan(int t, int m_max) { return threshold_scan(t, m_max, m_max); }

/// Published thresholds: 53, 142, 146, 157 for t = 4, 6, 7, 9 and 164 for
/// t = 8 (from the doubly-even bound).
int stored_threshold(int t);

/// Zhang's bound on extremal doubly-even codes of length 24m + 8l:
/// none exist for m >= 154, 159, 164 (l = 0, 1, 2). Stored, not derived.
int zhang_doubly_even_bound(int l);

/// Yorgov's criterion for n = 24m + 8: no minimal-shadow code when m is even
/// and C(5m, m) is odd. Annotation only.
bool yorgov_excludes(int m);

struct Classification {
  ParamSet params;
  std::string outcome;              // inconsistent / unique / family(k)
  std::optional<bool> feasible;     // unique: screening passed
  std::optional<bool> minimal_shadow;  // unique: lightest shadow weight == r (or 4)
  std::optional<ScreenCheck> violation;
};

Classification classify_length(int n);

/// Outcome the residue class predicts for m >= 1: inconsistent for
/// t = 0, 1, 2, 3, 5; unique for t = 4, 6, 7, 9, 11; family(1) for t = 8, 10.
/// nullopt for m == 0, where the shadow conditions are not imposed.
std::optional<std::string> expected_outcome(const ParamSet& p);

struct SummaryRow {
  int t = 0;
  std::string residue;
  std::string verdict;
  std::string detail;
  bool verified = false;
};

/// One row per residue class n = 24m + 2t. Closed forms are checked for
/// m <= m_max, solver verdicts for 1 <= m <= min(m_max, solver_m_max).
std::vector<SummaryRow> summary(int m_max, int solver_m_max = 20);

std::string format_summary(const std::vector<SummaryRow>& rows);

}  // namespace minshadow
