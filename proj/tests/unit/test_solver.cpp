#include <doctest.h>

#include "minshadow/solver.hpp"
#include "oracle.hpp"

using namespace minshadow;

namespace {

oracle::Poly dense_w(const ParamSet& p, const std::vector<Rational>& c) {
  oracle::Poly w;
  for (int i = 0; i <= p.k(); ++i) {
    w = oracle::poly_add(w, oracle::poly_scale(oracle::gleason_w(p.n, i), c[i]));
  }
  w.resize(static_cast<std::size_t>(p.n) + 1, Rational(0));
  return w;
}

Unique unique_of(const SolveOutcome& o) {
  REQUIRE(std::holds_alternative<Unique>(o));
  return std::get<Unique>(o);
}

void check_certificate(const ConstraintSystem& sys, const Inconsistent& bad) {
  std::vector<Rational> sum(static_cast<std::size_t>(sys.unknowns), Rational(0));
  Rational rhs = 0;
  for (const auto& [tag, lambda] : bad.certificate) {
    const auto it = std::find_if(sys.rows.begin(), sys.rows.end(), [&](const Constraint& c) { return c.tag == tag; });
    REQUIRE(it != sys.rows.end());
    for (int i = 0; i < sys.unknowns; ++i) {
      sum[i] += lambda * it->coeffs[i];
    }
    rhs += lambda * it->rhs;
  }
  for (const auto& x : sum) {
    CHECK(x == 0);
  }
  CHECK(rhs == bad.residual);
  CHECK(rhs != 0);
}

}  // namespace

TEST_SUITE("solver") {
  TEST_CASE("constraint rows") {
    CHECK(build_constraints(ParamSet::from_length(26)).rows.size() == 4 + 2);      // a0..a3, b0, b1
    CHECK(build_constraints(ParamSet::from_length(26), false).rows.size() == 5);
    CHECK(build_constraints(ParamSet::from_length(36)).rows.size() == 4 + 1);
    CHECK(build_constraints(ParamSet::from_length(44)).rows.size() == 4 + 1);
    CHECK(build_constraints(ParamSet::from_length(12)).rows.size() == 2);
    const ConstraintSystem s32 = build_constraints(ParamSet::from_length(32));
    REQUIRE(s32.rows.size() == 5);
    CHECK(s32.rows.back().tag == "b0");
    CHECK(s32.rows.back().rhs == 0);
    const ConstraintSystem s56 = build_constraints(ParamSet::from_length(56));  // m = 2, r = 0
    std::vector<std::string> tags;
    for (const auto& row : s56.rows) {
      tags.push_back(row.tag);
    }
    CHECK(tags == std::vector<std::string>{"a0", "a1", "a2", "a3", "a4", "a5", "b0", "b1"});
    CHECK(s56.rows.back().rhs == 1);
  }

  TEST_CASE("n = 36 enumerator") {
    const ParamSet p = ParamSet::from_length(36);
    const auto& u = unique_of(solve(build_constraints(p)));
    const Enumerators e = enumerators_from_c(p, u.c);
    CHECK(e.w.at(0) == 1);
    CHECK(e.w.at(8) == 289);
    CHECK(e.w.at(10) == 1632);
    CHECK(e.w.at(12) == 10387);
    CHECK(e.s.at(2) == 1);
    CHECK(e.s.at(6) == 34);
    CHECK(e.s.at(10) == 3808);
    CHECK(shadow_coefficient(p, u.c, 1) == 34);
  }

  TEST_CASE("the 225 enumerator has shadow minimum weight 6") {
    ParamSet p = ParamSet::from_length(36);
    ConstraintSystem sys = build_constraints(p);
    sys.rows.back().rhs = 0;  // b_0 = 0 instead of 1
    const auto& u = unique_of(solve(sys));
    const Enumerators e = enumerators_from_c(p, u.c);
    CHECK(e.w.at(8) == 225);
    CHECK(e.w.at(10) == 2016);
    CHECK(e.w.at(12) == 9555);
    CHECK(e.s.at(2) == 0);
    CHECK(e.s.at(6) == 42);
  }

  TEST_CASE("known shadow coefficients") {
    CHECK(shadow_coefficient(ParamSet::from_length(38), solve(build_constraints(ParamSet::from_length(38))), 1) == 106);
    const ParamSet p42 = ParamSet::from_length(42);
    const SolveOutcome o42 = solve(build_constraints(p42));
    CHECK(shadow_coefficient(p42, o42, 1) == 0);
    CHECK(shadow_coefficient(p42, o42, 2) == 861);
    const ParamSet p32 = ParamSet::from_length(32);
    const SolveOutcome o32 = solve(build_constraints(p32));
    CHECK(shadow_coefficient(p32, o32, 1) == 8);
    CHECK(shadow_coefficient(p32, o32, 2) == 592);
    CHECK_THROWS_AS(shadow_coefficient(ParamSet::from_length(44), solve(build_constraints(ParamSet::from_length(44))), 0),
                    std::invalid_argument);
  }

  TEST_CASE("unique solutions satisfy every constraint densely") {
    for (int n : {10, 12, 14, 16, 22, 32, 36, 38, 42, 46, 56, 60, 62, 66}) {
      const ParamSet p = ParamSet::from_length(n);
      const ConstraintSystem sys = build_constraints(p);
      const auto& u = unique_of(solve(sys));
      for (const auto& row : sys.rows) {
        Rational lhs = 0;
        for (int i = 0; i < sys.unknowns; ++i) {
          lhs += row.coeffs[i] * u.c[i];
        }
        CHECK(lhs == row.rhs);
      }
      const oracle::Poly w = dense_w(p, u.c);
      const oracle::Poly s = oracle::shadow_transform(w, n);
      const Enumerators e = enumerators_from_c(p, u.c);
      for (int wt = 0; wt <= n; ++wt) {
        CHECK(e.w.at(wt) == w[wt]);
        CHECK(e.s.at(wt) == s[wt]);
      }
      CHECK(e.w.total() == pow2(p.half()));
      CHECK(e.s.total() == pow2(p.half()));
    }
  }

  TEST_CASE("square systems agree with a dense solve") {
    for (int n : {32, 36, 38, 42, 56, 60, 62, 66}) {
      const ConstraintSystem sys = build_constraints(ParamSet::from_length(n));
      REQUIRE(static_cast<int>(sys.rows.size()) == sys.unknowns);
      oracle::Matrix a;
      std::vector<Rational> rhs;
      for (const auto& row : sys.rows) {
        a.push_back(row.coeffs);
        rhs.push_back(row.rhs);
      }
      CHECK(unique_of(solve(sys)).c == *oracle::solve_square(a, rhs));
    }
  }

  TEST_CASE("outcomes by residue class") {
    for (int m = 1; m <= 4; ++m) {
      for (int t : {0, 1, 2, 3, 5}) {
        const ConstraintSystem sys = build_constraints(ParamSet::from_family(m, t));
        const SolveOutcome o = solve(sys);
        REQUIRE_MESSAGE(std::holds_alternative<Inconsistent>(o), "m = " << m << ", t = " << t);
        check_certificate(sys, std::get<Inconsistent>(o));
      }
      for (int t : {4, 6, 7, 9, 11}) {
        CHECK(outcome_name(solve(build_constraints(ParamSet::from_family(m, t)))) == "unique");
      }
      for (int t : {8, 10}) {
        CHECK(outcome_name(solve(build_constraints(ParamSet::from_family(m, t)))) == "family(1)");
      }
    }
  }

  TEST_CASE("family directions lie in the null space") {
    const ParamSet p = ParamSet::from_length(44);
    const ConstraintSystem sys = build_constraints(p);
    const SolveOutcome o = solve(sys);
    REQUIRE(std::holds_alternative<Family>(o));
    const Family& f = std::get<Family>(o);
    CHECK(f.dimension == 1);
    REQUIRE(f.basis.size() == 1);
    for (const auto& row : sys.rows) {
      Rational part = 0, dir = 0;
      for (int i = 0; i < sys.unknowns; ++i) {
        part += row.coeffs[i] * f.particular[i];
        dir += row.coeffs[i] * f.basis[0][i];
      }
      CHECK(part == row.rhs);
      CHECK(dir == 0);
    }
  }

  TEST_CASE("m = 0 enumerators") {
    const ParamSet p = ParamSet::from_length(12);
    const Enumerators e = enumerators_from_c(p, unique_of(solve(build_constraints(p))).c);
    const std::vector<std::pair<int, int>> w{{0, 1}, {4, 15}, {6, 32}, {8, 15}, {12, 1}};
    for (const auto& [wt, c] : w) {
      CHECK(e.w.at(wt) == c);
    }
    CHECK(e.s.at(2) == 6);
    CHECK(e.s.at(6) == 52);
    CHECK(minimal_shadow_weight(p) == 2);
    CHECK(minimal_shadow_weight(ParamSet::from_length(16)) == 4);
    CHECK(outcome_name(solve(build_constraints(ParamSet::from_length(18)))) == "family(1)");
    CHECK(outcome_name(solve(build_constraints(ParamSet::from_length(8)))) == "inconsistent");
  }

  TEST_CASE("screening") {
    const ParamSet p36 = ParamSet::from_length(36);
    const Enumerators e36 = enumerators_from_c(p36, unique_of(solve(build_constraints(p36))).c);
    CHECK(screen(p36, e36.w, e36.s).passed());

    const ParamSet p46 = ParamSet::from_length(46);
    const Enumerators e46 = enumerators_from_c(p46, unique_of(solve(build_constraints(p46))).c);
    const ScreenReport r46 = screen(p46, e46.w, e46.s);
    CHECK_FALSE(r46.passed());
    REQUIRE(r46.first_violation().has_value());
    CHECK(r46.first_violation()->name == "s_nonnegative");
    CHECK(r46.first_violation()->weight == 7);

    // n = 10 has a fractional shadow.
    const ParamSet p10 = ParamSet::from_length(10);
    const Enumerators e10 = enumerators_from_c(p10, unique_of(solve(build_constraints(p10))).c);
    CHECK_FALSE(screen(p10, e10.w, e10.s).find("s_integral")->passed);

    // Hand-built violations on a copy of the n = 36 shadow (d = 8).
    WeightEnumerator s = e36.s;
    s.coeffs[2] = 2;
    s.coeffs[34] = 2;
    const ScreenReport bad = screen(p36, e36.w, s);
    CHECK_FALSE(bad.find("s_at_most_one_below_half_d")->passed);
    CHECK(bad.find("s_symmetric")->passed);
    s = e36.s;
    s.coeffs[4] = 1;
    s.coeffs[32] = 1;
    CHECK_FALSE(screen(p36, e36.w, s).find("s_congruence")->passed);
    WeightEnumerator w = e36.w;
    w.coeffs[9] = 1;
    CHECK_FALSE(screen(p36, w, e36.s).find("w_even_weights")->passed);
  }

  TEST_CASE("alpha and beta by inversion") {
    const ParamSet p = ParamSet::from_length(36);
    CHECK(alpha_by_inversion(p, 3) == -42);
    CHECK(alpha_by_inversion(p, 3) == alpha_direct(p, 3));
    CHECK(beta_by_inversion(p, 3, 1) == beta(p, 3, 1));
  }
}
