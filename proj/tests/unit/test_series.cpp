#include <doctest.h>

#include "minshadow/series.hpp"
#include "oracle.hpp"

using namespace minshadow;

namespace {

oracle::Poly dense(const Series& s) {
  oracle::Poly out(static_cast<std::size_t>(s.trunc()), Rational(0));
  for (const auto& [deg, c] : s.terms()) {
    out[static_cast<std::size_t>(deg)] = c;
  }
  return out;
}

oracle::Poly truncate(oracle::Poly p, int trunc) {
  p.resize(static_cast<std::size_t>(trunc), Rational(0));
  return p;
}

}  // namespace

TEST_SUITE("series") {
  TEST_CASE("binomial powers") {
    const Series s = Series::from_binomial_power(-1, 4, 2, 12);
    CHECK(s.coeff(0) == 1);
    CHECK(s.coeff(2) == -4);
    CHECK(s.coeff(4) == 6);
    CHECK(s.coeff(8) == 1);
    CHECK(s.coeff(3) == 0);
    CHECK(dense(Series::from_binomial_power(1, 9, 1, 20)) == truncate(oracle::poly_pow({1, 1}, 9), 20));
    CHECK(dense(Series::from_binomial_power(-1, 7, 3, 40)) == truncate(oracle::poly_pow({1, 0, 0, -1}, 7), 40));
  }

  TEST_CASE("truncation drops high terms") {
    const Series s = Series::from_binomial_power(1, 10, 1, 4);
    CHECK(s.terms().size() == 4);
    CHECK(s.coeff(3) == 120);
    CHECK_THROWS_AS(s.coeff(4), std::out_of_range);
  }

  TEST_CASE("inverse even power times its inverse is one") {
    for (int a : {1, 2, 5, 11}) {
      const Series inv = Series::inv_even_power(a, 30);
      const Series prod = inv * Series::from_binomial_power(-1, a, 2, 30);
      CHECK(prod == Series::constant(1, 30));
    }
    CHECK(Series::inv_even_power(3, 10).coeff(4) == 6);  // C(3 + 2 - 1, 2)
    CHECK_THROWS(Series::inv_even_power(0, 10));
  }

  TEST_CASE("division undoes multiplication") {
    const Series p = Series::from_binomial_power(1, 13, 1, 25) - Series::monomial(make_rational(3, 7), 5, 25);
    for (int sign : {1, -1}) {
      for (int step : {1, 2, 4}) {
        const Series q = p * Series::from_binomial_power(sign, 1, step, 25);
        CHECK(q.divided_by_binomial(sign, step) == p);
      }
    }
  }

  TEST_CASE("ring operations agree with dense polynomials") {
    const oracle::Poly a = oracle::poly_pow({1, -2, 0, 1}, 4);
    const oracle::Poly b = oracle::poly_pow({make_rational(1, 2), 0, 3}, 3);
    Series sa(30), sb(30);
    for (std::size_t i = 0; i < a.size(); ++i) {
      sa = sa + Series::monomial(a[i], static_cast<int>(i), 30);
    }
    for (std::size_t i = 0; i < b.size(); ++i) {
      sb = sb + Series::monomial(b[i], static_cast<int>(i), 30);
    }
    CHECK(dense(sa * sb) == truncate(oracle::poly_mul(a, b), 30));
    CHECK(dense(sa + sb) == truncate(oracle::poly_add(a, b), 30));
    CHECK((sa - sa).is_zero());
    CHECK(dense(sa.scale_shift(2, 3))[3] == 2 * a[0]);
    CHECK_THROWS(sa * Series(31));
  }

  TEST_CASE("value at one") {
    CHECK(Series::from_binomial_power(1, 6, 2, 13).sum_of_coefficients() == 64);
    CHECK(Series::from_binomial_power(-1, 6, 2, 13).sum_of_coefficients() == 0);
  }
}
