#include <doctest.h>

#include <random>

#include "minshadow/exact.hpp"
#include "oracle.hpp"

using namespace minshadow;

TEST_SUITE("exact") {
  TEST_CASE("binomials match Pascal's triangle") {
    CHECK(binom(50, 25) == oracle::pascal(50, 25));
    CHECK(to_string(binom(50, 25)) == "126410606437752");
    for (int n = 0; n <= 40; ++n) {
      for (int k = -1; k <= n + 1; ++k) {
        CHECK(binom(n, k) == oracle::pascal(n, k));
      }
    }
  }

  TEST_CASE("binomial symmetry and recurrence at large arguments") {
    for (long n : {200L, 475L, 1000L}) {
      for (long k : {1L, 7L, 60L, 199L}) {
        CHECK(binom(n, k) == binom(n, n - k));
        CHECK(binom(n + 1, k + 1) == binom(n, k) + binom(n, k + 1));
      }
    }
    CHECK(binom(5, 6) == 0);
    CHECK(binom(5, -1) == 0);
    CHECK_THROWS_AS(binom(-3, 1), std::invalid_argument);
  }

  TEST_CASE("powers of two") {
    CHECK(pow2(0) == 1);
    CHECK(pow2(10) == 1024);
    CHECK(pow2(-3) == make_rational(1, 8));
    CHECK(pow2(70) * pow2(-70) == 1);
  }

  TEST_CASE("rationals are canonical") {
    const Rational x = make_rational(-252, 6);
    CHECK(x == -42);
    CHECK(to_string(x) == "-42");
    CHECK(to_string(make_rational(6, -4)) == "-3/2");
    CHECK(is_integer(make_rational(8, 4)));
    CHECK_FALSE(is_integer(make_rational(1, 3)));
    CHECK_THROWS_AS(make_rational(1, 0), std::domain_error);
    CHECK_THROWS_AS(checked_div(1, 0), std::domain_error);
  }

  TEST_CASE("parse round-trips to_string") {
    std::mt19937_64 rng(7);
    std::uniform_int_distribution<long> dist(-1000000, 1000000);
    for (int i = 0; i < 500; ++i) {
      long q = dist(rng);
      if (q == 0) {
        q = 1;
      }
      const Rational x = make_rational(dist(rng), q) * pow2(dist(rng) % 90);
      CHECK(parse_rational(to_string(x)) == x);
    }
    CHECK(parse_rational("+7") == 7);
    CHECK(parse_rational("-10/4") == make_rational(-5, 2));
    for (const char* bad : {"", "-", "1/0", "1/", "/2", "1.5", "2/-3", "abc"}) {
      CHECK_THROWS_AS(parse_rational(bad), std::invalid_argument);
    }
  }

  TEST_CASE("field axioms on random rationals") {
    std::mt19937_64 rng(11);
    std::uniform_int_distribution<long> dist(1, 99999);
    for (int i = 0; i < 200; ++i) {
      const Rational a = make_rational(dist(rng) - 50000, dist(rng));
      const Rational b = make_rational(dist(rng) - 50000, dist(rng));
      const Rational c = make_rational(dist(rng), dist(rng));
      CHECK(Rational(a * (b + c)) == Rational(a * b + a * c));
      CHECK(Rational((a + b) - b) == a);
      CHECK(Rational((a * c) / c) == a);
    }
  }
}
