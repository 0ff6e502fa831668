#include "minshadow/gleason.hpp"

#include <stdexcept>
#include <string>

namespace minshadow {

ParamSet ParamSet::from_length(int n) {
  if (n <= 0 || n % 2 != 0) {
    throw std::invalid_argument("code length must be a positive even integer, got " + std::to_string(n));
  }
  ParamSet p;
  p.n = n;
  p.m = n / 24;
  p.t = (n - 24 * p.m) / 2;
  p.l = p.t / 4;
  p.r = p.t % 4;
  p.d = p.t == 11 ? 4 * p.m + 6 : 4 * p.m + 4;
  return p;
}

ParamSet ParamSet::from_family(int m, int t) {
  if (m < 0 || t < 0 || t > 11) {
    throw std::invalid_argument("family needs m >= 0 and 0 <= t <= 11");
  }
  if (m == 0 && t == 0) {
    throw std::invalid_argument("length 0 is not a code length");
  }
  return from_length(24 * m + 2 * t);
}

namespace {

void require_basis_index(const ParamSet& p, int i) {
  if (i < 0 || i > p.k()) {
    throw std::out_of_range("basis index " + std::to_string(i) + " outside [0, " + std::to_string(p.k()) +
                            "] for n = " + std::to_string(p.n));
  }
}

Rational sign_pow(int e) { return Rational(e % 2 == 0 ? 1 : -1); }

}  // namespace

Series basis_W(const ParamSet& p, int i, int trunc) {
  require_basis_index(p, i);
  const Series even_part = Series::from_binomial_power(1, p.half() - 4 * i, 2, trunc);
  const Series odd_part = Series::from_binomial_power(-1, 2 * i, 2, trunc).scale_shift(Rational(1), 2 * i);
  return even_part * odd_part;
}

Series basis_S(const ParamSet& p, int i, int trunc) {
  require_basis_index(p, i);
  const int shift = p.half() - 4 * i;
  if (shift >= trunc) {
    return Series(trunc);
  }
  return Series::from_binomial_power(-1, 2 * i, 4, trunc)
      .scale_shift(sign_pow(i) * pow2(p.half() - 6L * i), shift);
}

Rational alpha_direct(const ParamSet& p, int i) {
  if (i < 1) {
    throw std::invalid_argument("alpha_direct needs i >= 1");
  }
  // (1 + y)^{-plus} (1 - y)^{-minus}
  const int plus = p.half() + 1 - 4 * i;
  const int minus = 2 * i;
  Series folded(i);
  if (plus <= minus) {
    // (1 - y^2)^{-minus} (1 + y)^{minus - plus}
    folded = Series::inv_even_power(minus, i) * Series::from_binomial_power(1, minus - plus, 1, i);
  } else {
    // (1 - y^2)^{-plus} (1 - y)^{plus - minus}
    folded = Series::inv_even_power(plus, i) * Series::from_binomial_power(-1, plus - minus, 1, i);
  }
  return -make_rational(p.n, 2 * i) * folded.coeff(i - 1);
}

Rational alpha_2m1_closed(const ParamSet& p) {
  const int m = p.m;
  const int t = p.t;
  if (m == 0) {
    return alpha_direct(p, 1);
  }
  BigInt sum;
  if (t <= 5) {
    for (int s = 0; s <= (5 - t) / 2; ++s) {
      sum += binom(5 - t, 2 * s) * binom(5L * m + 1 - s, m - s);
    }
  } else {
    for (int s = 0; s <= (t - 5) / 2; ++s) {
      sum += binom(t - 5, 2 * s) * binom(5L * m + t - 4 - s, m - s);
    }
  }
  return -make_rational(12 * m + t, 2 * m + 1) * sum;
}

Rational alpha_2m_closed(const ParamSet& p) {
  const int m = p.m;
  const int t = p.t;
  if (m < 1) {
    throw std::invalid_argument("alpha_2m_closed needs m >= 1");
  }
  BigInt sum;
  for (int s = 1; s <= (t + 2) / 2; ++s) {
    sum += binom(t + 1, 2 * s - 1) * binom(5L * m + t - s, m - s);
  }
  return make_rational(12 * m + t, 2 * m) * sum;
}

namespace {

// num / den * C(top, bottom), or nullopt when den == 0.
std::optional<Rational> product_form(const BigInt& num, const BigInt& den, long top, long bottom) {
  if (den == 0) {
    return std::nullopt;
  }
  return make_rational(num, den) * Rational(binom(top, bottom));
}

}  // namespace

std::optional<Rational> alpha_2m1_product_form(const ParamSet& p) {
  const BigInt m = p.m;
  const long mi = p.m;
  switch (p.t) {
    case 1:
      return product_form(-(12 * m + 1) * (56 * m + 4), (2 * m + 1) * (m - 1), 5 * mi - 1, mi - 2);
    case 2:
      return product_form(-2 * (6 * m + 1) * (8 * m + 1), m * (2 * m + 1), 5 * mi, mi - 1);
    case 3:
      return product_form(-3 * (4 * m + 1) * (6 * m + 1), m * (2 * m + 1), 5 * mi, mi - 1);
    case 4:
      return product_form(-4 * (3 * m + 1), 2 * m + 1, 5 * mi + 1, mi);
    case 5:
      return product_form(-(12 * m + 5), 2 * m + 1, 5 * mi + 1, mi);
    case 6:
      return product_form(BigInt(-6), BigInt(1), 5 * mi + 2, mi);
    case 7:
      return product_form(-3 * (12 * m + 7), m, 5 * mi + 2, mi - 1);
    case 8:
      return product_form(-16 * (3 * m + 2), m, 5 * mi + 3, mi - 1);
    case 9:
      return product_form(-12 * (7 * m + 5) * (4 * m + 3), m * (m - 1), 5 * mi + 3, mi - 2);
    case 10:
      return product_form(-20 * (6 * m + 5) * (4 * m + 3), m * (m - 1), 5 * mi + 4, mi - 2);
    case 11:
      return product_form(-6 * (12 * m + 11) * (6 * m + 5) * (8 * m + 7), m * (m - 1) * (m - 2), 5 * mi + 4,
                          mi - 3);
    default:
      return std::nullopt;
  }
}

std::optional<Rational> alpha_2m_product_form(const ParamSet& p) {
  const BigInt m = p.m;
  const long mi = p.m;
  const BigInt m3 = m * (m - 1) * (m - 2);
  switch (p.t) {
    case 4:
      return product_form(8 * (4 * m + 1) * (11 * m + 3) * (3 * m + 1), m3, 5 * mi + 1, mi - 3);
    case 6:
      return product_form(24 * (116 * m * m + 79 * m + 15) * (1 + 2 * m) * (1 + 2 * m), m3 * (m - 3), 5 * mi + 2,
                          mi - 4);
    case 7:
      return product_form(24 * (1 + 2 * m) * (12 * m + 7) * (28 * m * m + 22 * m + 5), m3 * (m - 3), 5 * mi + 3,
                          mi - 4);
    case 8:
      return product_form(16 * (3 * m + 2) * (2 * m + 1) * (1216 * m * m * m + 1956 * m * m + 1073 * m + 210),
                          m3 * (m - 3) * (m - 4), 5 * mi + 3, mi - 5);
    case 9:
      return product_form(120 * (2 * m + 1) * (4 * m + 3) * (176 * m * m * m + 308 * m * m + 189 * m + 42),
                          m3 * (m - 3) * (m - 4), 5 * mi + 4, mi - 5);
    case 10:
      return product_form(
          16 * (6 * m + 5) * (2 * m + 1) * (4 * m + 3) * (1592 * m * m * m + 3280 * m * m + 2363 * m + 630),
          m3 * (m - 3) * (m - 4) * (m - 5), 5 * mi + 4, mi - 6);
    default:
      return std::nullopt;
  }
}

Rational beta(const ParamSet& p, int i, int j) {
  const int k = p.k();
  if (i < 1) {
    throw std::invalid_argument("beta needs i >= 1");
  }
  if (j < 0 || j > k - i) {
    return Rational(0);
  }
  return sign_pow(i) * pow2(6L * i - p.half()) * make_rational(k - j, i) * Rational(binom(k + i - j - 1, k - i - j));
}

RationalMatrix w_coefficient_rows(const ParamSet& p, int max_row) {
  const int k = p.k();
  const int trunc = 2 * max_row + 1;
  RationalMatrix rows(static_cast<std::size_t>(max_row + 1), std::vector<Rational>(static_cast<std::size_t>(k + 1)));
  // q holds (1 + y^2)^{n/2 - 4i} (1 - y^2)^{2i}; column i is y^{2i} q.
  Series q = Series::from_binomial_power(1, p.half(), 2, trunc);
  const Series square = Series::from_binomial_power(-1, 2, 2, trunc);
  for (int i = 0; i <= k && i <= max_row; ++i) {
    for (const auto& [deg, c] : q.terms()) {
      const int j = i + deg / 2;
      if (j > max_row) {
        break;
      }
      rows[static_cast<std::size_t>(j)][static_cast<std::size_t>(i)] = c;
    }
    if (i == k) {
      break;
    }
    q = q * square;
    for (int f = 0; f < 4; ++f) {
      q = q.divided_by_binomial(1, 2);
    }
  }
  return rows;
}

RationalMatrix s_coefficient_rows(const ParamSet& p, int max_row) {
  const int k = p.k();
  const int trunc = 4 * max_row + p.r + 1;
  RationalMatrix rows(static_cast<std::size_t>(max_row + 1), std::vector<Rational>(static_cast<std::size_t>(k + 1)));
  for (int i = 0; i <= k; ++i) {
    if (p.half() - 4 * i >= trunc) {
      continue;
    }
    const Series s = basis_S(p, i, trunc);
    for (const auto& [deg, c] : s.terms()) {
      // every degree is r mod 4
      rows[static_cast<std::size_t>((deg - p.r) / 4)][static_cast<std::size_t>(i)] = c;
    }
  }
  return rows;
}

BasisMatrices basis_matrices(const ParamSet& p) {
  return BasisMatrices{w_coefficient_rows(p, p.k()), s_coefficient_rows(p, p.k())};
}

}  // namespace minshadow
