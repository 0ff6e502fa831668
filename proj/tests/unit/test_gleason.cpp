#include <doctest.h>

#include "minshadow/gleason.hpp"
#include "minshadow/solver.hpp"
#include "oracle.hpp"

using namespace minshadow;

namespace {

// c_i for W with a_0 = 1 and a_1..a_k = 0, from dense polynomials and a
// Gauss-Jordan inverse.
std::vector<Rational> alpha_column_oracle(const ParamSet& p) {
  const int k = p.k();
  oracle::Matrix a(static_cast<std::size_t>(k + 1), std::vector<Rational>(static_cast<std::size_t>(k + 1)));
  for (int i = 0; i <= k; ++i) {
    const oracle::Poly g = oracle::gleason_w(p.n, i);
    for (int j = 0; j <= k; ++j) {
      a[j][i] = 2 * j < static_cast<int>(g.size()) ? g[2 * j] : Rational(0);
    }
  }
  std::vector<Rational> rhs(static_cast<std::size_t>(k + 1), Rational(0));
  rhs[0] = 1;
  return *oracle::solve_square(a, rhs);
}

}  // namespace

TEST_SUITE("gleason") {
  TEST_CASE("parameter decomposition") {
    const ParamSet p = ParamSet::from_length(36);
    CHECK(p.m == 1);
    CHECK(p.l == 1);
    CHECK(p.r == 2);
    CHECK(p.t == 6);
    CHECK(p.d == 8);
    CHECK(p.k() == 4);
    CHECK(ParamSet::from_length(46).d == 10);
    CHECK(ParamSet::from_family(7, 9) == ParamSet::from_length(186));
    CHECK_THROWS(ParamSet::from_length(35));
    CHECK_THROWS(ParamSet::from_length(0));
    CHECK_THROWS(ParamSet::from_family(0, 0));
  }

  TEST_CASE("W basis matches dense expansion") {
    for (int n : {8, 22, 36, 50}) {
      const ParamSet p = ParamSet::from_length(n);
      for (int i = 0; i <= p.k(); ++i) {
        const Series s = basis_W(p, i, n + 1);
        const oracle::Poly g = oracle::gleason_w(n, i);
        for (int w = 0; w <= n; ++w) {
          CHECK(s.coeff(w) == (w < static_cast<int>(g.size()) ? g[w] : Rational(0)));
        }
        CHECK(s.sum_of_coefficients() == (i == 0 ? pow2(p.half()) : Rational(0)));
      }
    }
  }

  TEST_CASE("S basis is the shadow transform of the W basis") {
    for (int n : {2, 8, 12, 14, 18, 24, 26, 30}) {
      const ParamSet p = ParamSet::from_length(n);
      for (int i = 0; i <= p.k(); ++i) {
        const Series s = basis_S(p, i, n + 1);
        const oracle::Poly expect = oracle::shadow_transform(oracle::gleason_w(n, i), n);
        for (int w = 0; w <= n; ++w) {
          CHECK(s.coeff(w) == expect[w]);
        }
      }
    }
  }

  TEST_CASE("S basis example") {
    // n = 12, i = 1: -2^0 y^2 (1 - y^4)^2
    const ParamSet p = ParamSet::from_length(12);
    const Series s = basis_S(p, 1, 13);
    CHECK(s.coeff(2) == -1);
    CHECK(s.coeff(6) == 2);
    CHECK(s.coeff(10) == -1);
    CHECK(basis_S(p, 0, 13).coeff(6) == 64);
  }

  TEST_CASE("alpha_{i,0} from extraction matches a dense inverse") {
    for (int n = 2; n <= 96; n += 2) {
      const ParamSet p = ParamSet::from_length(n);
      const auto col = alpha_column_oracle(p);
      for (int i = 1; i <= p.k(); ++i) {
        CHECK_MESSAGE(alpha_direct(p, i) == col[i], "n = " << n << ", i = " << i);
      }
    }
  }

  TEST_CASE("binomial sums agree with extraction in every residue class") {
    for (int t = 0; t <= 11; ++t) {
      for (int m = 1; m <= 30; ++m) {
        const ParamSet p = ParamSet::from_family(m, t);
        CHECK_MESSAGE(alpha_2m1_closed(p) == alpha_direct(p, 2 * m + 1), "t = " << t << ", m = " << m);
        CHECK_MESSAGE(alpha_2m_closed(p) == alpha_direct(p, 2 * m), "t = " << t << ", m = " << m);
      }
    }
  }

  TEST_CASE("product forms agree wherever defined") {
    int checked = 0;
    for (int t = 0; t <= 11; ++t) {
      for (int m = 1; m <= 30; ++m) {
        const ParamSet p = ParamSet::from_family(m, t);
        if (const auto f = alpha_2m1_product_form(p)) {
          CHECK_MESSAGE(*f == alpha_direct(p, 2 * m + 1), "t = " << t << ", m = " << m);
          ++checked;
        }
        if (const auto f = alpha_2m_product_form(p)) {
          CHECK_MESSAGE(*f == alpha_direct(p, 2 * m), "t = " << t << ", m = " << m);
          ++checked;
        }
      }
    }
    CHECK(checked > 400);
    CHECK_FALSE(alpha_2m1_product_form(ParamSet::from_family(1, 9)).has_value());
    CHECK_FALSE(alpha_2m_product_form(ParamSet::from_family(5, 0)).has_value());
  }

  TEST_CASE("beta matches the inverse of the shadow coefficient matrix") {
    for (int n = 2; n <= 200; n += 2) {
      const ParamSet p = ParamSet::from_length(n);
      const auto inv = oracle::inverse(basis_matrices(p).b);
      REQUIRE(inv.has_value());
      for (int i = 1; i <= p.k(); ++i) {
        for (int j = 0; j <= p.k(); ++j) {
          CHECK_MESSAGE(beta(p, i, j) == (*inv)[i][j], "n = " << n << ", i = " << i << ", j = " << j);
        }
      }
    }
  }

  TEST_CASE("beta special values") {
    const ParamSet p = ParamSet::from_length(36);  // k = 4, n/2 = 18
    for (int i = 1; i <= 4; ++i) {
      CHECK(beta(p, i, p.k() - i) == (i % 2 == 0 ? 1 : -1) * pow2(6 * i - 18));
      CHECK(beta(p, i, p.k() - i + 1) == 0);
    }
    CHECK(beta(p, 3, 1) == -1);
    CHECK(beta(p, 1, 0) == make_rational(-1, 256));
    CHECK_THROWS(beta(p, 0, 0));
  }

  TEST_CASE("W coefficient rows are unit lower triangular") {
    const ParamSet p = ParamSet::from_length(74);
    const RationalMatrix a = w_coefficient_rows(p, p.k());
    for (int j = 0; j <= p.k(); ++j) {
      CHECK(a[j][j] == 1);
      for (int i = j + 1; i <= p.k(); ++i) {
        CHECK(a[j][i] == 0);
      }
      for (int i = 0; i < j; ++i) {
        CHECK(a[j][i] == basis_W(p, i, 2 * p.k() + 1).coeff(2 * j));
      }
    }
  }

  TEST_CASE("shadow coefficient matrix support") {
    const ParamSet p = ParamSet::from_length(58);
    const RationalMatrix b = s_coefficient_rows(p, p.k());
    for (int j = 0; j <= p.k(); ++j) {
      for (int i = 0; i <= p.k(); ++i) {
        CHECK((b[j][i] != 0) == (i + j >= p.k()));
      }
    }
  }
}
